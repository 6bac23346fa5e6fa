//! Discrete symmetry operators acting on spinor-valued functions of (x⁰, x, c).
//!
//! An operator is stored in combined form: `(OΨ)(x⁰, x, c) = M · K^a[Ψ(s_t x⁰, s_x x, s_c c)]`
//! where `K` conjugates the function values when the operator is antilinear.

mod intertwiner;
mod poly;

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::expr::{canonicalize, eval_str, parse, Canonical};
use crate::matrix::{ExactMatrix, FloatMatrix};
use crate::scalars::{ExactComplex, Phase};

pub use intertwiner::{solve_intertwiner, Intertwiner, IntertwinerConstraint, IntertwinerMode};
pub(crate) use poly::random_rational;
pub use poly::{random_point, Point, Polynomial, TestFunction, NVARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl From<Sign> for ExactComplex {
    fn from(s: Sign) -> Self {
        ExactComplex::from(s.value() as i64)
    }
}

/// Sign flips applied to the arguments (x⁰, x, c).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArgSigns {
    pub t: Sign,
    pub x: Sign,
    pub c: Sign,
}

impl ArgSigns {
    pub const IDENTITY: ArgSigns = ArgSigns { t: Sign::Plus, x: Sign::Plus, c: Sign::Plus };

    pub fn new(t: Sign, x: Sign, c: Sign) -> Self {
        ArgSigns { t, x, c }
    }

    /// Per-variable signs in polynomial variable order (x⁰, x¹, x², x³, c).
    pub fn per_variable(self) -> [i8; NVARS] {
        [self.t.value(), self.x.value(), self.x.value(), self.x.value(), self.c.value()]
    }
}

impl std::ops::Mul for ArgSigns {
    type Output = ArgSigns;
    fn mul(self, rhs: ArgSigns) -> ArgSigns {
        ArgSigns { t: self.t * rhs.t, x: self.x * rhs.x, c: self.c * rhs.c }
    }
}

impl fmt::Display for ArgSigns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.t.symbol(), self.x.symbol(), self.c.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteOp {
    pub name: String,
    pub matrix: ExactMatrix,
    pub antilinear: bool,
    pub arg_signs: ArgSigns,
}

/// The transformation matrices U_P, U_T, U_C as they appear before folding
/// the γ⁰ of Ψ̄ᵀ = γ⁰Ψ* into the T and C matrices.
pub fn u_parity() -> ExactMatrix {
    eval_str("i*g0").unwrap()
}

pub fn u_time() -> ExactMatrix {
    eval_str("-i*g0*g1*g3").unwrap()
}

pub fn u_charge() -> ExactMatrix {
    eval_str("-g0*g2").unwrap()
}

fn gamma0() -> ExactMatrix {
    crate::clifford::dirac().gamma[0].clone()
}

use Sign::{Minus, Plus};

impl DiscreteOp {
    pub fn identity() -> DiscreteOp {
        DiscreteOp {
            name: "1".into(),
            matrix: ExactMatrix::identity(4).unwrap(),
            antilinear: false,
            arg_signs: ArgSigns::IDENTITY,
        }
    }

    /// Space inversion: M_P = U_P = iγ⁰.
    pub fn p() -> DiscreteOp {
        DiscreteOp {
            name: "P".into(),
            matrix: u_parity(),
            antilinear: false,
            arg_signs: ArgSigns::new(Plus, Minus, Plus),
        }
    }

    /// Time reversal: M_T = U_T γ⁰ = −iγ¹γ³.
    pub fn t() -> DiscreteOp {
        DiscreteOp {
            name: "T".into(),
            matrix: &u_time() * &gamma0(),
            antilinear: true,
            arg_signs: ArgSigns::new(Minus, Plus, Plus),
        }
    }

    /// Charge conjugation: M_C = U_C γ⁰ = γ².
    pub fn c() -> DiscreteOp {
        DiscreteOp {
            name: "C".into(),
            matrix: &u_charge() * &gamma0(),
            antilinear: true,
            arg_signs: ArgSigns::IDENTITY,
        }
    }

    /// Light-speed inversion with U_Q = λγ⁵.
    pub fn q(lambda: Phase) -> DiscreteOp {
        let matrix = crate::clifford::dirac().gamma5.scale(&lambda.into());
        DiscreteOp { name: "Q".into(), matrix, antilinear: false, arg_signs: ArgSigns::new(Plus, Plus, Minus) }
    }

    /// Q with the default phase λ = i.
    pub fn q_default() -> DiscreteOp {
        DiscreteOp::q(Phase::I)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &DiscreteOp) -> DiscreteOp {
        let rhs = if self.antilinear { other.matrix.conjugate() } else { other.matrix.clone() };
        let name = match (self.name.as_str(), other.name.as_str()) {
            ("1", n) | (n, "1") => n.to_string(),
            (a, b) => format!("{a}{b}"),
        };
        DiscreteOp {
            name,
            matrix: &self.matrix * &rhs,
            antilinear: self.antilinear ^ other.antilinear,
            arg_signs: self.arg_signs * other.arg_signs,
        }
    }

    /// Resolves "P", "T", "C", "Q" and any concatenation such as "PTQ"
    /// (rightmost letter acts first).
    pub fn by_name(name: &str) -> Result<DiscreteOp> {
        if name.is_empty() {
            return Err(Error::UnknownOperator(name.to_string()));
        }
        name.chars().try_fold(DiscreteOp::identity(), |acc, ch| {
            let op = match ch {
                'P' => DiscreteOp::p(),
                'T' => DiscreteOp::t(),
                'C' => DiscreteOp::c(),
                'Q' => DiscreteOp::q_default(),
                _ => return Err(Error::UnknownOperator(name.to_string())),
            };
            Ok(acc.compose(&op))
        })
    }

    pub fn canonical_matrix(&self) -> Result<Canonical> {
        canonical_of_matrix(&self.matrix)
    }

    pub fn float_matrix(&self) -> FloatMatrix {
        self.matrix.to_float()
    }

    /// Exact action on a polynomial test function.
    pub fn apply(&self, f: &TestFunction) -> TestFunction {
        let signs = self.arg_signs.per_variable();
        let moved: Vec<Polynomial> = f
            .components
            .iter()
            .map(|p| {
                let q = p.flip(signs);
                if self.antilinear {
                    q.conjugate()
                } else {
                    q
                }
            })
            .collect();
        TestFunction::new(std::array::from_fn(|row| {
            (0..4).fold(Polynomial::zero(), |acc, col| acc.add(&moved[col].scale(self.matrix.get(row, col))))
        }))
    }
}

impl fmt::Display for DiscreteOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.canonical_matrix().map(|c| c.to_string()).unwrap_or_else(|_| "<non-monomial>".into());
        let conj = if self.antilinear { "*" } else { "" };
        write!(f, "{}Psi = {} Psi{}{}", self.name, m, conj, self.arg_signs)
    }
}

/// Finds the canonical monomial equal to a matrix by matching against the basis.
pub fn canonical_of_matrix(m: &ExactMatrix) -> Result<Canonical> {
    for blade in crate::clifford::Blade::all() {
        let b = crate::clifford::dirac().blade_matrix(blade);
        let Some((r, c)) = (0..16).map(|k| (k / 4, k % 4)).find(|&(r, c)| !b.get(r, c).is_zero()) else {
            continue;
        };
        let coeff = m.get(r, c) / b.get(r, c);
        if coeff.is_zero() || b.scale(&coeff) != *m {
            continue;
        }
        let phase_part = if coeff.im.is_zero() {
            (coeff.re.clone(), Phase::One)
        } else if coeff.re.is_zero() {
            (coeff.im.clone(), Phase::I)
        } else {
            return Err(Error::NotMonomial);
        };
        let (scale, mut phase) = phase_part;
        if !scale.is_integer() {
            return Err(Error::NotMonomial);
        }
        if scale < BigRational::zero() {
            phase = phase.negate();
        }
        return Ok(Canonical { phase, scale: scale.to_integer().magnitude().clone().into(), blade });
    }
    Err(Error::NotMonomial)
}

/// The expected entries of the transformation table, as (name, matrix, antilinear, signs).
pub const TABLE_EXPECTED: [(&str, &str, bool, [Sign; 3]); 7] = [
    ("P", "i*g0", false, [Plus, Minus, Plus]),
    ("T", "-i*g1*g3", true, [Minus, Plus, Plus]),
    ("PT", "g0*g1*g3", true, [Minus, Minus, Plus]),
    ("Q", "i*g5", false, [Plus, Plus, Minus]),
    ("PQ", "i*g1*g2*g3", false, [Plus, Minus, Minus]),
    ("TQ", "i*g0*g2", true, [Minus, Plus, Minus]),
    ("PTQ", "-g2", true, [Minus, Minus, Minus]),
];

#[derive(Clone, Debug)]
pub struct TableRow {
    pub op: DiscreteOp,
    pub expected_matrix: &'static str,
    pub expected_antilinear: bool,
    pub expected_signs: ArgSigns,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        let expected = eval_str(self.expected_matrix).expect("table constants parse");
        self.op.matrix == expected
            && self.op.antilinear == self.expected_antilinear
            && self.op.arg_signs == self.expected_signs
    }

    /// The expected matrix in canonical form, for display.
    pub fn expected_canonical(&self) -> Canonical {
        canonicalize(&parse(self.expected_matrix).unwrap()).unwrap()
    }
}

/// The seven composite transformations built from P, T and Q by composition,
/// each paired with the expected entries.
pub fn transformation_table() -> Vec<TableRow> {
    let (p, t, q) = (DiscreteOp::p(), DiscreteOp::t(), DiscreteOp::q_default());
    let computed =
        [p.clone(), t.clone(), p.compose(&t), q.clone(), p.compose(&q), t.compose(&q), p.compose(&t.compose(&q))];
    computed
        .into_iter()
        .zip(TABLE_EXPECTED)
        .map(|(op, (name, m, anti, s))| {
            debug_assert_eq!(op.name, name);
            TableRow {
                op,
                expected_matrix: m,
                expected_antilinear: anti,
                expected_signs: ArgSigns::new(s[0], s[1], s[2]),
            }
        })
        .collect()
}

/// Verifies every row, listing the names of any that disagree.
pub fn verify_transformation_table() -> Result<Vec<TableRow>> {
    let rows = transformation_table();
    let bad: Vec<String> = rows.iter().filter(|r| !r.matches()).map(|r| r.op.name.clone()).collect();
    if bad.is_empty() {
        Ok(rows)
    } else {
        Err(Error::InvalidParameter(format!("table rows disagree: {}", bad.join(", "))))
    }
}

/// (O₁O₂ − O₂O₁) f as an exact polynomial function.
pub fn commutator(o1: &DiscreteOp, o2: &DiscreteOp, f: &TestFunction) -> TestFunction {
    o1.apply(&o2.apply(f)).sub(&o2.apply(&o1.apply(f)))
}

/// Largest componentwise max(|re|, |im|) of the commutator image over the samples.
pub fn commutator_deviation(o1: &DiscreteOp, o2: &DiscreteOp, f: &TestFunction, samples: &[Point]) -> BigRational {
    let g = commutator(o1, o2, f);
    samples
        .iter()
        .flat_map(|pt| g.eval(pt))
        .map(|z| z.max_norm())
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a })
}

/// c²t² − |x|² evaluated at c and at −c.
pub fn lightcone_check(t: &BigRational, x: &[BigRational; 3], c: &BigRational) -> (BigRational, BigRational) {
    let r2: BigRational = x.iter().map(|v| v * v).fold(BigRational::zero(), |a, b| a + b);
    let at = |c: &BigRational| c * c * t * t - &r2;
    (at(c), at(&-c.clone()))
}
