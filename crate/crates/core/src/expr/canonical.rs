use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::GammaExpr;
use crate::clifford::{canonical_product, dirac, Blade, Generator};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalars::{ExactComplex, Phase};

/// `phase · scale · basis(blade)` with a positive integer scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Canonical {
    pub phase: Phase,
    pub scale: BigInt,
    pub blade: Blade,
}

/// Intermediate symbolic value: an exact coefficient times a basis element.
struct Monomial {
    coeff: ExactComplex,
    blade: Blade,
}

impl Monomial {
    fn scalar(coeff: ExactComplex) -> Monomial {
        Monomial { coeff, blade: Blade::EMPTY }
    }

    fn times(self, rhs: Monomial) -> Monomial {
        let mut word = self.blade.word();
        word.extend(rhs.blade.word());
        let (phase, blade) = canonical_product(&word);
        Monomial { coeff: &(&self.coeff * &rhs.coeff) * &phase.into(), blade }
    }

    fn conjugate(self) -> Monomial {
        let sign = self.blade.word().into_iter().fold(Phase::One, |s, g| s * g.conjugation_sign());
        Monomial { coeff: &self.coeff.conj() * &sign.into(), blade: self.blade }
    }

    fn transpose(self) -> Monomial {
        let word: Vec<Generator> = self.blade.word().into_iter().rev().collect();
        let sign = word.iter().fold(Phase::One, |s, g| s * g.transpose_sign());
        let (phase, blade) = canonical_product(&word);
        Monomial { coeff: &self.coeff * &(sign * phase).into(), blade }
    }
}

fn reduce(e: &GammaExpr) -> Monomial {
    match e {
        GammaExpr::Generator(g) => {
            let (phase, blade) = canonical_product(&[*g]);
            Monomial { coeff: phase.into(), blade }
        }
        GammaExpr::Identity => Monomial::scalar(ExactComplex::from(1)),
        GammaExpr::ImaginaryUnit => Monomial::scalar(ExactComplex::i()),
        GammaExpr::Integer(n) => Monomial::scalar(ExactComplex::real(BigRational::from_integer(n.clone().into()))),
        GammaExpr::Negate(inner) => {
            let m = reduce(inner);
            Monomial { coeff: -m.coeff, blade: m.blade }
        }
        GammaExpr::Product(items) => {
            items.iter().fold(Monomial::scalar(ExactComplex::from(1)), |acc, item| acc.times(reduce(item)))
        }
        GammaExpr::Star(inner) => reduce(inner).conjugate(),
        GammaExpr::Transpose(inner) => reduce(inner).transpose(),
        GammaExpr::Dagger(inner) => reduce(inner).transpose().conjugate(),
    }
}

/// Symbolic normal form of an expression, computed from the generator
/// relations alone (no matrix multiplication).
pub fn canonicalize(e: &GammaExpr) -> Result<Canonical> {
    let Monomial { coeff, blade } = reduce(e);
    let (real_part, phase_if_pos, phase_if_neg) = match (coeff.re.is_zero(), coeff.im.is_zero()) {
        (true, true) => return Err(Error::NotMonomial),
        (false, true) => (coeff.re, Phase::One, Phase::MinusOne),
        (true, false) => (coeff.im, Phase::I, Phase::MinusI),
        (false, false) => return Err(Error::NotMonomial),
    };
    if !real_part.is_integer() {
        return Err(Error::NotMonomial);
    }
    let phase = if real_part.is_positive() { phase_if_pos } else { phase_if_neg };
    Ok(Canonical { phase, scale: real_part.to_integer().abs(), blade })
}

impl Canonical {
    pub fn coefficient(&self) -> ExactComplex {
        &ExactComplex::from(self.phase) * &ExactComplex::real(BigRational::from_integer(self.scale.clone()))
    }

    pub fn matrix(&self) -> ExactMatrix {
        dirac().blade_matrix(self.blade).scale(&self.coefficient())
    }

    /// Canonical textual order: optional scalar prefix, then the blade's
    /// generators ascending (γ⁵ kept as `g5`).
    pub fn to_expr(&self) -> GammaExpr {
        let mut factors = Vec::new();
        if !self.scale.is_one() {
            let n: BigUint = self.scale.to_biguint().expect("scale is positive");
            factors.push(GammaExpr::Integer(n));
        }
        if matches!(self.phase, Phase::I | Phase::MinusI) {
            factors.push(GammaExpr::ImaginaryUnit);
        }
        let gens = self.blade.word();
        if gens.is_empty() {
            factors.push(GammaExpr::Identity);
        }
        factors.extend(gens.into_iter().map(GammaExpr::Generator));
        if matches!(self.phase, Phase::MinusOne | Phase::MinusI) {
            factors[0] = GammaExpr::negate(factors[0].clone());
        }
        GammaExpr::Product(factors).normalized()
    }
}

impl std::fmt::Display for Canonical {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&super::format(&self.to_expr()))
    }
}
