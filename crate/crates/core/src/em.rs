//! The minimally coupled Dirac equation
//!
//! ```text
//! (iħγᵃ∂ₐ − mc)Ψ − (e/c)γᵃAₐΨ = 0,    Aₐ = (A⁰, −A)
//! ```
//!
//! its plane-wave solutions for a constant potential, and the maps that the
//! discrete operators induce on the equation's parameters.
//!
//! An operator is checked pointwise: the image of a solution of one instance
//! must solve the mapped instance. Under Q the image is read on the same
//! sheet, so the continuation to −c shows up as the parameter flips
//! c → −c, e → −e. The coupling only enters through e/c, so this is the same
//! residual operator as the sheet-continued reading with e unchanged.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use crate::discrete::{random_rational, ArgSigns, DiscreteOp, Sign};
use crate::planewave::{
    dirac_operator, float_gammas, norm, spinor_pos, Bispinor, Event, FourMomentum, Spinor, SpinorField, Transformed,
    TwoSpinor,
};
use crate::scalars::ComplexFloat as C;
use crate::{Error, Result};

/// A potential given by a function of the event, returning upper components (A⁰, A¹, A², A³).
pub type PotentialFn = Arc<dyn Fn(&Event) -> [f64; 4] + Send + Sync>;

/// A real 4-potential with upper components (A⁰, A).
#[derive(Clone)]
pub enum Potential {
    Constant([f64; 4]),
    Field(PotentialFn),
}

impl Potential {
    pub fn zero() -> Self {
        Potential::Constant([0.0; 4])
    }

    pub fn at(&self, x: &Event) -> [f64; 4] {
        match self {
            Potential::Constant(a) => *a,
            Potential::Field(f) => f(x),
        }
    }

    pub fn constant(&self) -> Result<[f64; 4]> {
        match self {
            Potential::Constant(a) => Ok(*a),
            Potential::Field(_) => Err(Error::NonConstantPotential),
        }
    }
}

impl fmt::Debug for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Potential::Constant(a) => f.debug_tuple("Constant").field(a).finish(),
            Potential::Field(_) => f.write_str("Field(..)"),
        }
    }
}

/// Parameters (m, c, e, ħ, A) of one coupled Dirac equation.
#[derive(Clone, Debug)]
pub struct DiracInstance {
    pub m: f64,
    pub c: f64,
    pub e: f64,
    pub hbar: f64,
    pub potential: Potential,
}

impl DiracInstance {
    pub fn new(m: f64, c: f64, e: f64, hbar: f64, potential: Potential) -> Result<Self> {
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::InvalidParameter(format!("mass must be positive, got {m}")));
        }
        if !(c.is_finite() && c != 0.0) {
            return Err(Error::InvalidParameter(format!("light speed must be nonzero, got {c}")));
        }
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::InvalidParameter(format!("hbar must be positive, got {hbar}")));
        }
        if !e.is_finite() {
            return Err(Error::InvalidParameter(format!("charge must be finite, got {e}")));
        }
        if let Potential::Constant(a) = &potential {
            if !a.iter().all(|v| v.is_finite()) {
                return Err(Error::InvalidParameter("potential must be finite".into()));
            }
        }
        Ok(DiracInstance { m, c, e, hbar, potential })
    }

    pub fn free(m: f64, c: f64, hbar: f64) -> Result<Self> {
        DiracInstance::new(m, c, 0.0, hbar, Potential::zero())
    }

    pub fn mc(&self) -> f64 {
        self.m * self.c
    }

    /// The coupling (e/c)Aₐ with lowered index at `x`.
    pub fn coupling(&self, x: &Event) -> [f64; 4] {
        let a = self.potential.at(x);
        let k = self.e / self.c;
        [k * a[0], -k * a[1], -k * a[2], -k * a[3]]
    }
}

/// (iħγᵃ∂ₐ − mc)Ψ − (e/c)γᵃAₐΨ at one point.
pub fn coupled_operator(instance: &DiracInstance, field: &dyn SpinorField, x: &Event) -> Spinor {
    let g = float_gammas();
    let free = dirac_operator(field, x, instance.mc(), instance.hbar);
    let psi = field.value(x);
    let coupling = instance.coupling(x);
    std::array::from_fn(|r| {
        let slash: C = (0..4).map(|a| (0..4).map(|c| g[a].get(r, c) * psi[c] * coupling[a]).sum::<C>()).sum();
        free[r] - slash
    })
}

/// Maximum over samples of the coupled residual relative to ‖Ψ‖.
pub fn coupled_residual(instance: &DiracInstance, field: &dyn SpinorField, samples: &[Event]) -> f64 {
    samples.iter().map(|x| norm(&coupled_operator(instance, field, x)) / norm(&field.value(x))).fold(0.0, f64::max)
}

/// Positive-frequency solution for a constant potential.
///
/// The amplitude is built from the kinetic momentum π; the phase carries the
/// canonical momentum p = π + (e/c)A.
#[derive(Clone, Debug)]
pub struct EMPlaneWaveSolution {
    pub instance: DiracInstance,
    pub kinetic: FourMomentum,
    /// Canonical momentum, upper components.
    pub canonical: [f64; 4],
    pub amplitude: Bispinor,
}

impl EMPlaneWaveSolution {
    /// E = c π⁰.
    pub fn kinetic_energy(&self) -> f64 {
        self.instance.c * self.kinetic.p0
    }

    pub fn energy_gap(&self) -> f64 {
        energy_gap(self.kinetic_energy())
    }

    fn phase(&self, x: &Event) -> C {
        let p = &self.canonical;
        let arg = p[0] * x[0] - p[1] * x[1] - p[2] * x[2] - p[3] * x[3];
        C::from_polar(1.0, -arg / self.instance.hbar)
    }
}

impl SpinorField for EMPlaneWaveSolution {
    fn value(&self, x: &Event) -> Spinor {
        let amp = self.phase(x) / (2.0 * self.kinetic.p0).sqrt();
        self.amplitude.to_array().map(|z| z * amp)
    }

    fn derivatives(&self, x: &Event) -> [Spinor; 4] {
        let psi = self.value(x);
        let p = &self.canonical;
        let lower = [p[0], -p[1], -p[2], -p[3]];
        std::array::from_fn(|a| {
            let k = C::new(0.0, -lower[a] / self.instance.hbar);
            psi.map(|z| z * k)
        })
    }
}

pub fn build_solution(instance: &DiracInstance, pi: [f64; 3], w: &TwoSpinor) -> Result<EMPlaneWaveSolution> {
    let a = instance.potential.constant()?;
    if !pi.iter().all(|v| v.is_finite()) {
        return Err(Error::InvalidParameter("momentum must be finite".into()));
    }
    let kinetic = FourMomentum::on_shell(pi, instance.m, instance.c);
    let amplitude = spinor_pos(&kinetic, w, instance.m, instance.c)?;
    let k = instance.e / instance.c;
    let canonical = [kinetic.p0 + k * a[0], pi[0] + k * a[1], pi[1] + k * a[2], pi[2] + k * a[3]];
    Ok(EMPlaneWaveSolution { instance: instance.clone(), kinetic, canonical, amplitude })
}

/// 2|E|, the separation between the energy labels E and −E.
pub fn energy_gap(energy: f64) -> f64 {
    2.0 * energy.abs()
}

/// Action of a discrete operator on instance parameters.
///
/// The mass and ħ are never changed. The potential's upper components are
/// multiplied by (`a0`, `a_spatial`) and its argument is composed with
/// `arg_signs`; the c entry of `arg_signs` matches `light_speed`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceMap {
    pub light_speed: Sign,
    pub charge: Sign,
    pub a0: Sign,
    pub a_spatial: Sign,
    pub arg_signs: ArgSigns,
}

impl InstanceMap {
    pub const IDENTITY: InstanceMap = InstanceMap {
        light_speed: Sign::Plus,
        charge: Sign::Plus,
        a0: Sign::Plus,
        a_spatial: Sign::Plus,
        arg_signs: ArgSigns::IDENTITY,
    };

    pub fn parity() -> Self {
        InstanceMap {
            a_spatial: Sign::Minus,
            arg_signs: ArgSigns::new(Sign::Plus, Sign::Minus, Sign::Plus),
            ..Self::IDENTITY
        }
    }

    pub fn time_reversal() -> Self {
        InstanceMap {
            a_spatial: Sign::Minus,
            arg_signs: ArgSigns::new(Sign::Minus, Sign::Plus, Sign::Plus),
            ..Self::IDENTITY
        }
    }

    pub fn charge_conjugation() -> Self {
        InstanceMap { charge: Sign::Minus, ..Self::IDENTITY }
    }

    pub fn light_speed_inversion() -> Self {
        InstanceMap {
            light_speed: Sign::Minus,
            charge: Sign::Minus,
            arg_signs: ArgSigns::new(Sign::Plus, Sign::Plus, Sign::Minus),
            ..Self::IDENTITY
        }
    }

    /// `self` after `inner`.
    pub fn compose(&self, inner: &InstanceMap) -> InstanceMap {
        InstanceMap {
            light_speed: self.light_speed * inner.light_speed,
            charge: self.charge * inner.charge,
            a0: self.a0 * inner.a0,
            a_spatial: self.a_spatial * inner.a_spatial,
            arg_signs: self.arg_signs * inner.arg_signs,
        }
    }

    pub fn apply(&self, instance: &DiracInstance) -> DiracInstance {
        let (s0, sa) = (self.a0.as_f64(), self.a_spatial.as_f64());
        let scale = move |a: [f64; 4]| [s0 * a[0], sa * a[1], sa * a[2], sa * a[3]];
        let potential = match &instance.potential {
            Potential::Constant(a) => Potential::Constant(scale(*a)),
            Potential::Field(f) => {
                let f = Arc::clone(f);
                let (st, sx) = (self.arg_signs.t.as_f64(), self.arg_signs.x.as_f64());
                Potential::Field(Arc::new(move |x: &Event| scale(f(&[st * x[0], sx * x[1], sx * x[2], sx * x[3]]))))
            }
        };
        DiracInstance {
            m: instance.m,
            c: self.light_speed.as_f64() * instance.c,
            e: self.charge.as_f64() * instance.e,
            hbar: instance.hbar,
            potential,
        }
    }
}

impl fmt::Display for InstanceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |sign: Sign, name: &str| if sign == Sign::Plus { name.to_string() } else { format!("-{name}") };
        let arg = if self.arg_signs.t == Sign::Plus && self.arg_signs.x == Sign::Plus {
            String::new()
        } else {
            format!("∘({},{})", self.arg_signs.t.symbol(), self.arg_signs.x.symbol())
        };
        write!(
            f,
            "(m, {}, {}, ({}, {}){})",
            s(self.light_speed, "c"),
            s(self.charge, "e"),
            s(self.a0, "A0"),
            s(self.a_spatial, "A"),
            arg
        )
    }
}

/// Instance map of an operator word over P, T, C, Q; the rightmost letter acts first.
pub fn instance_map(name: &str) -> Result<InstanceMap> {
    if name.is_empty() {
        return Err(Error::UnknownOperator(name.to_string()));
    }
    name.chars().try_fold(InstanceMap::IDENTITY, |acc, ch| {
        let map = match ch {
            'P' => InstanceMap::parity(),
            'T' => InstanceMap::time_reversal(),
            'C' => InstanceMap::charge_conjugation(),
            'Q' => InstanceMap::light_speed_inversion(),
            _ => return Err(Error::UnknownOperator(name.to_string())),
        };
        Ok(acc.compose(&map))
    })
}

/// Residual of the operator's image of `solution` in the mapped instance.
pub fn transport_check(
    instance: &DiracInstance,
    op: &str,
    solution: &dyn SpinorField,
    samples: &[Event],
) -> Result<f64> {
    let discrete = DiscreteOp::by_name(op)?;
    let mapped = instance_map(op)?.apply(instance);
    let image = Transformed::new(&discrete, solution);
    Ok(coupled_residual(&mapped, &image, samples))
}

/// Exact coefficients of the residual operator
/// iħγᵃ∂ₐ − mc − γᵃ·coupling[a].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualOperator {
    pub hbar: BigRational,
    pub mass_term: BigRational,
    /// (e/c)Aₐ, lower index.
    pub coupling: [BigRational; 4],
}

fn exact(v: f64) -> Result<BigRational> {
    BigRational::from_float(v).ok_or_else(|| Error::InvalidParameter(format!("non-finite value {v}")))
}

pub fn residual_operator(instance: &DiracInstance) -> Result<ResidualOperator> {
    let a = instance.potential.constant()?;
    let (m, c, e) = (exact(instance.m)?, exact(instance.c)?, exact(instance.e)?);
    let k = &e / &c;
    let lower = [exact(a[0])?, -exact(a[1])?, -exact(a[2])?, -exact(a[3])?];
    Ok(ResidualOperator {
        hbar: exact(instance.hbar)?,
        mass_term: &m * &c,
        coupling: lower.map(|v| if k.is_zero() { BigRational::zero() } else { &k * v }),
    })
}

/// Whether (m, c, −e, A) and (m, c, e, −A) have the same residual operator.
pub fn potential_rule_equivalence(instance: &DiracInstance) -> Result<bool> {
    let a = instance.potential.constant()?;
    let flipped_charge = DiracInstance { e: -instance.e, ..instance.clone() };
    let flipped_potential = DiracInstance { potential: Potential::Constant(a.map(|v| -v)), ..instance.clone() };
    Ok(residual_operator(&flipped_charge)? == residual_operator(&flipped_potential)?)
}

/// A constant potential with rational components k/8, |k| ≤ 16.
pub fn random_potential<R: Rng>(rng: &mut R) -> [f64; 4] {
    std::array::from_fn(|_| rng.random_range(-16i32..=16) as f64 / 8.0)
}

fn to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(0.0)
}

/// A random instance with ħ = 1, rational m, c, e and a random constant potential.
pub fn random_instance<R: Rng>(rng: &mut R) -> DiracInstance {
    let m = rng.random_range(2i32..=8) as f64 / 4.0;
    let speed = rng.random_range(1i32..=4) as f64;
    let c = if rng.random_bool(0.5) { speed } else { -speed };
    let e = to_f64(&random_rational(rng, 8, 4));
    DiracInstance::new(m, c, e, 1.0, Potential::Constant(random_potential(rng))).expect("valid parameters")
}
