//! Brute-force search for matrices U with U·op(γᵃ)·U⁻¹ = εₐγᵃ.

use std::fmt;

use crate::clifford::{dirac, Blade};
use crate::error::{Error, Result};
use crate::expr::Canonical;
use crate::matrix::{ExactMatrix, StarKind};
use crate::scalars::{ExactComplex, Phase};

use super::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntertwinerMode {
    Plain,
    Transpose,
    Conjugate,
}

impl std::str::FromStr for IntertwinerMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(IntertwinerMode::Plain),
            "transpose" => Ok(IntertwinerMode::Transpose),
            "conjugate" => Ok(IntertwinerMode::Conjugate),
            other => Err(Error::InvalidParameter(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for IntertwinerMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntertwinerMode::Plain => "plain",
            IntertwinerMode::Transpose => "transpose",
            IntertwinerMode::Conjugate => "conjugate",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntertwinerConstraint {
    pub target_signs: [Sign; 4],
    pub mode: IntertwinerMode,
}

impl IntertwinerConstraint {
    pub fn new(target_signs: [Sign; 4], mode: IntertwinerMode) -> Self {
        IntertwinerConstraint { target_signs, mode }
    }

    /// Parses a four-character string of '+' and '-', e.g. "+---".
    pub fn parse(signs: &str, mode: IntertwinerMode) -> Result<Self> {
        let chars: Vec<char> = signs.chars().collect();
        if chars.len() != 4 {
            return Err(Error::InvalidParameter(format!("expected 4 signs, got {signs:?}")));
        }
        let mut target_signs = [Sign::Plus; 4];
        for (slot, ch) in target_signs.iter_mut().zip(chars) {
            *slot = match ch {
                '+' => Sign::Plus,
                '-' => Sign::Minus,
                other => return Err(Error::InvalidParameter(format!("invalid sign character {other:?}"))),
            };
        }
        Ok(IntertwinerConstraint { target_signs, mode })
    }

    fn op(&self, m: &ExactMatrix) -> ExactMatrix {
        match self.mode {
            IntertwinerMode::Plain => m.clone(),
            IntertwinerMode::Transpose => m.star(StarKind::Transpose),
            IntertwinerMode::Conjugate => m.star(StarKind::Conjugate),
        }
    }

    /// Whether `u` satisfies the constraint for all four generators.
    pub fn is_satisfied_by(&self, u: &ExactMatrix) -> Result<bool> {
        let rep = dirac();
        let u_inv = u.inverse()?;
        Ok((0..4).all(|a| {
            let lhs = &(u * &self.op(&rep.gamma[a])) * &u_inv;
            let rhs = rep.gamma[a].scale(&self.target_signs[a].into());
            lhs == rhs
        }))
    }
}

/// One solution `phase · basis(blade)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Intertwiner {
    pub phase: Phase,
    pub blade: Blade,
}

impl Intertwiner {
    pub fn matrix(&self) -> ExactMatrix {
        dirac().blade_matrix(self.blade).scale(&ExactComplex::from(self.phase))
    }

    pub fn canonical(&self) -> Canonical {
        Canonical { phase: self.phase, scale: 1.into(), blade: self.blade }
    }
}

impl fmt::Display for Intertwiner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical().fmt(f)
    }
}

/// Tests every phase ∈ {±1, ±i} times every one of the 16 basis elements.
pub fn solve_intertwiner(constraint: &IntertwinerConstraint) -> Vec<Intertwiner> {
    let mut out = Vec::new();
    for blade in Blade::all() {
        for phase in Phase::ALL {
            let candidate = Intertwiner { phase, blade };
            if constraint.is_satisfied_by(&candidate.matrix()).expect("basis elements are invertible") {
                out.push(candidate);
            }
        }
    }
    out
}
