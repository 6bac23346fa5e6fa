//! Spinor-valued fields with analytic first derivatives, and the pointwise
//! image of a field under a discrete operator.

use std::sync::OnceLock;

use crate::clifford::dirac;
use crate::discrete::{ArgSigns, DiscreteOp};
use crate::matrix::FloatMatrix;
use crate::scalars::ComplexFloat;

pub type Spinor = [ComplexFloat; 4];
/// A spacetime point (x⁰, x¹, x², x³).
pub type Event = [f64; 4];

/// Float copies of γ⁰..γ³.
pub fn float_gammas() -> &'static [FloatMatrix; 4] {
    static G: OnceLock<[FloatMatrix; 4]> = OnceLock::new();
    G.get_or_init(|| std::array::from_fn(|a| dirac().gamma[a].to_float()))
}

pub fn norm(v: &Spinor) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn max_abs_diff(a: &Spinor, b: &Spinor) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub trait SpinorField {
    fn value(&self, x: &Event) -> Spinor;
    /// ∂Ψ/∂xᵃ for a = 0..3.
    fn derivatives(&self, x: &Event) -> [Spinor; 4];
}

impl<F: SpinorField + ?Sized> SpinorField for &F {
    fn value(&self, x: &Event) -> Spinor {
        (**self).value(x)
    }
    fn derivatives(&self, x: &Event) -> [Spinor; 4] {
        (**self).derivatives(x)
    }
}

impl<F: SpinorField + ?Sized> SpinorField for Box<F> {
    fn value(&self, x: &Event) -> Spinor {
        (**self).value(x)
    }
    fn derivatives(&self, x: &Event) -> [Spinor; 4] {
        (**self).derivatives(x)
    }
}

/// Float form of a discrete operator acting on spacetime arguments only.
///
/// The light-speed flip of an operator is not applied here: a field carries
/// a fixed value of c, so the caller chooses which sheet's field to pass in.
#[derive(Clone, Debug)]
pub struct FloatOp {
    pub matrix: FloatMatrix,
    pub antilinear: bool,
    pub arg_signs: ArgSigns,
}

impl From<&DiscreteOp> for FloatOp {
    fn from(op: &DiscreteOp) -> Self {
        FloatOp { matrix: op.float_matrix(), antilinear: op.antilinear, arg_signs: op.arg_signs }
    }
}

impl FloatOp {
    fn moved(&self, x: &Event) -> Event {
        let (st, sx) = (self.arg_signs.t.as_f64(), self.arg_signs.x.as_f64());
        [st * x[0], sx * x[1], sx * x[2], sx * x[3]]
    }

    fn act(&self, v: Spinor) -> Spinor {
        let v = if self.antilinear { v.map(|z| z.conj()) } else { v };
        self.matrix.apply4(&v)
    }

    fn coord_sign(&self, a: usize) -> f64 {
        if a == 0 {
            self.arg_signs.t.as_f64()
        } else {
            self.arg_signs.x.as_f64()
        }
    }
}

/// x ↦ M · K^a[Ψ(s_t x⁰, s_x x)].
pub struct Transformed<F> {
    pub op: FloatOp,
    pub inner: F,
}

impl<F: SpinorField> Transformed<F> {
    pub fn new(op: &DiscreteOp, inner: F) -> Self {
        Transformed { op: op.into(), inner }
    }
}

impl<F: SpinorField> SpinorField for Transformed<F> {
    fn value(&self, x: &Event) -> Spinor {
        self.op.act(self.inner.value(&self.op.moved(x)))
    }

    fn derivatives(&self, x: &Event) -> [Spinor; 4] {
        let inner = self.inner.derivatives(&self.op.moved(x));
        std::array::from_fn(|a| {
            let s = self.op.coord_sign(a);
            self.op.act(inner[a]).map(|z| z * s)
        })
    }
}

/// (iħγᵃ∂ₐ − mass_term)Ψ at one point.
pub fn dirac_operator(field: &dyn SpinorField, x: &Event, mass_term: f64, hbar: f64) -> Spinor {
    let g = float_gammas();
    let psi = field.value(x);
    let d = field.derivatives(x);
    let ih = ComplexFloat::new(0.0, hbar);
    std::array::from_fn(|r| {
        let kinetic: ComplexFloat =
            (0..4).map(|a| (0..4).map(|c| g[a].get(r, c) * d[a][c]).sum::<ComplexFloat>()).sum();
        ih * kinetic - psi[r] * mass_term
    })
}

/// Free residual ‖(iħγᵃ∂ₐ − mc)Ψ‖ / ‖Ψ‖, maximised over samples.
pub fn free_residual(field: &dyn SpinorField, mass_term: f64, hbar: f64, samples: &[Event]) -> f64 {
    samples.iter().map(|x| norm(&dirac_operator(field, x, mass_term, hbar)) / norm(&field.value(x))).fold(0.0, f64::max)
}
