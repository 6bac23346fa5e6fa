//! Free Dirac plane waves, their normalisation identities, and how charge
//! conjugation and the PTQ composition act on them.

mod field;

use rand::Rng;

use crate::clifford::dirac;
use crate::discrete::DiscreteOp;
use crate::error::{Error, Result};
use crate::scalars::{ComplexFloat, Phase};

pub use field::{
    dirac_operator, float_gammas, free_residual, max_abs_diff, norm, Event, FloatOp, Spinor, SpinorField, Transformed,
};

/// Default absolute-over-magnitude tolerance for float checks.
pub const TOLERANCE: f64 = 1e-12;

type C = ComplexFloat;

/// Unit-normalised two-component spinor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoSpinor(pub [C; 2]);

impl TwoSpinor {
    /// Accepts a spinor that is already normalised to within the tolerance.
    pub fn new(a: C, b: C) -> Result<Self> {
        let n2 = a.norm_sqr() + b.norm_sqr();
        if !(a.is_finite() && b.is_finite()) || (n2 - 1.0).abs() > TOLERANCE {
            return Err(Error::InvalidParameter(format!("two-spinor norm² = {n2}, expected 1")));
        }
        Ok(TwoSpinor([a, b]))
    }

    /// Normalises an arbitrary nonzero pair.
    pub fn normalized(a: C, b: C) -> Result<Self> {
        let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::InvalidParameter("cannot normalise a zero spinor".into()));
        }
        Ok(TwoSpinor([a / n, b / n]))
    }

    pub fn up() -> Self {
        TwoSpinor([C::new(1.0, 0.0), C::new(0.0, 0.0)])
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        loop {
            let mut draw = || C::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let (a, b) = (draw(), draw());
            if a.norm_sqr() + b.norm_sqr() > 1e-3 {
                return TwoSpinor::normalized(a, b).unwrap();
            }
        }
    }

    pub fn conj(&self) -> [C; 2] {
        self.0.map(|z| z.conj())
    }
}

fn pauli_apply(k: usize, v: &[C; 2]) -> [C; 2] {
    let s = dirac().pauli[k].to_float();
    [s.get(0, 0) * v[0] + s.get(0, 1) * v[1], s.get(1, 0) * v[0] + s.get(1, 1) * v[1]]
}

/// σ_y v.
pub fn sigma_y(v: &[C; 2]) -> [C; 2] {
    pauli_apply(1, v)
}

/// (n·σ) v.
pub fn n_sigma(n: &[f64; 3], v: &[C; 2]) -> [C; 2] {
    let mut out = [C::new(0.0, 0.0); 2];
    for (k, nk) in n.iter().enumerate() {
        let t = pauli_apply(k, v);
        out[0] += t[0] * nk;
        out[1] += t[1] * nk;
    }
    out
}

fn scale2(s: f64, v: [C; 2]) -> [C; 2] {
    v.map(|z| z * s)
}

/// Upper and lower two-spinor blocks of a Dirac bispinor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bispinor {
    pub phi: [C; 2],
    pub chi: [C; 2],
}

impl Bispinor {
    pub fn to_array(&self) -> Spinor {
        [self.phi[0], self.phi[1], self.chi[0], self.chi[1]]
    }

    /// ū u = u⁺γ⁰u.
    pub fn bar_product(&self) -> f64 {
        let sq = |v: &[C; 2]| v[0].norm_sqr() + v[1].norm_sqr();
        sq(&self.phi) - sq(&self.chi)
    }

    pub fn norm(&self) -> f64 {
        norm(&self.to_array())
    }
}

/// A four-momentum (p⁰, p) with p⁰ > 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourMomentum {
    pub p0: f64,
    pub p: [f64; 3],
}

impl FourMomentum {
    pub fn on_shell(p: [f64; 3], m: f64, c: f64) -> Self {
        FourMomentum { p0: shell_p0(&p, m, c), p }
    }

    pub fn spatial_norm(&self) -> f64 {
        self.p.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Unit direction of p; (0, 0, 1) at rest.
    pub fn direction(&self) -> [f64; 3] {
        let r = self.spatial_norm();
        if r == 0.0 {
            [0.0, 0.0, 1.0]
        } else {
            self.p.map(|v| v / r)
        }
    }

    /// Relative mass-shell violation |(p⁰)² − |p|² − (mc)²| / (p⁰)².
    pub fn shell_deviation(&self, m: f64, c: f64) -> f64 {
        let r2: f64 = self.p.iter().map(|v| v * v).sum();
        let mc = m * c;
        (self.p0 * self.p0 - r2 - mc * mc).abs() / (self.p0 * self.p0)
    }

    /// Covariant components p_a = (p⁰, −p).
    pub fn lower(&self) -> [f64; 4] {
        [self.p0, -self.p[0], -self.p[1], -self.p[2]]
    }
}

/// p⁰ = √(|p|² + m²c²); even in c.
pub fn shell_p0(p: &[f64; 3], m: f64, c: f64) -> f64 {
    let mc = m * c;
    (p.iter().map(|v| v * v).sum::<f64>() + mc * mc).sqrt()
}

fn check_shell(k: &FourMomentum, m: f64, c: f64) -> Result<()> {
    if k.p0.is_nan() || k.p0 <= 0.0 || k.shell_deviation(m, c) > TOLERANCE {
        return Err(Error::OffShell(format!("p0 = {}, |p| = {}, mc = {}", k.p0, k.spatial_norm(), m * c)));
    }
    Ok(())
}

fn radicals(k: &FourMomentum, m: f64, c: f64) -> (f64, f64) {
    let mc = m * c;
    ((k.p0 + mc).max(0.0).sqrt(), (k.p0 - mc).max(0.0).sqrt())
}

fn pos_blocks(k: &FourMomentum, w: &TwoSpinor, m: f64, c: f64, n: &[f64; 3]) -> Bispinor {
    let (plus, minus) = radicals(k, m, c);
    Bispinor { phi: scale2(plus, w.0), chi: scale2(minus, n_sigma(n, &w.0)) }
}

fn neg_blocks(k: &FourMomentum, w: &TwoSpinor, m: f64, c: f64, n: &[f64; 3]) -> Bispinor {
    let (plus, minus) = radicals(k, m, c);
    Bispinor { phi: scale2(minus, n_sigma(n, &w.0)), chi: scale2(plus, w.0) }
}

/// u_{pσ} = (√(p⁰+mc) w, √(p⁰−mc)(n·σ)w).
pub fn spinor_pos(k: &FourMomentum, w: &TwoSpinor, m: f64, c: f64) -> Result<Bispinor> {
    check_shell(k, m, c)?;
    Ok(pos_blocks(k, w, m, c, &k.direction()))
}

/// u_{−p−σ} = (√(p⁰−mc)(n·σ)w′, √(p⁰+mc) w′).
pub fn spinor_neg(k: &FourMomentum, w: &TwoSpinor, m: f64, c: f64) -> Result<Bispinor> {
    check_shell(k, m, c)?;
    Ok(neg_blocks(k, w, m, c, &k.direction()))
}

/// ‖(γᵃp_a − mass_term)u‖ / (‖u‖ p⁰).
pub fn momentum_residual(u: &Bispinor, k: &FourMomentum, mass_term: f64) -> f64 {
    let g = float_gammas();
    let lower = k.lower();
    let v = u.to_array();
    let r: Spinor = std::array::from_fn(|row| {
        let slash: C = (0..4).map(|a| (0..4).map(|col| g[a].get(row, col) * v[col] * lower[a]).sum::<C>()).sum();
        slash - v[row] * mass_term
    });
    norm(&r) / (u.norm() * k.p0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Frequency {
    Positive,
    Negative,
}

/// A free plane-wave solution.
///
/// `m` is the mass label. It is positive for constructed states; sheet
/// identification flips it together with `c`, since only the products `mc`
/// and `E/c` enter the wave function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneWaveState {
    pub kind: Frequency,
    pub p: [f64; 3],
    pub w: TwoSpinor,
    pub m: f64,
    pub c: f64,
    pub hbar: f64,
}

impl PlaneWaveState {
    pub fn new(kind: Frequency, p: [f64; 3], w: TwoSpinor, m: f64, c: f64, hbar: f64) -> Result<Self> {
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::InvalidParameter(format!("mass must be positive, got {m}")));
        }
        if !(c.is_finite() && c != 0.0) {
            return Err(Error::InvalidParameter(format!("light speed must be nonzero, got {c}")));
        }
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::InvalidParameter(format!("hbar must be positive, got {hbar}")));
        }
        if !p.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidParameter("momentum must be finite".into()));
        }
        Ok(PlaneWaveState { kind, p, w, m, c, hbar })
    }

    pub fn momentum(&self) -> FourMomentum {
        FourMomentum::on_shell(self.p, self.m, self.c)
    }

    pub fn p0(&self) -> f64 {
        shell_p0(&self.p, self.m, self.c)
    }

    /// E = c p⁰.
    pub fn energy(&self) -> f64 {
        self.c * self.p0()
    }

    pub fn mc(&self) -> f64 {
        self.m * self.c
    }

    pub fn spinor(&self) -> Bispinor {
        let k = self.momentum();
        let n = k.direction();
        match self.kind {
            Frequency::Positive => pos_blocks(&k, &self.w, self.m, self.c, &n),
            Frequency::Negative => neg_blocks(&k, &self.w, self.m, self.c, &n),
        }
    }

    /// Mass term whose momentum-space equation annihilates the spinor: +mc
    /// for positive frequency, −mc for negative.
    pub fn mass_term(&self) -> f64 {
        match self.kind {
            Frequency::Positive => self.mc(),
            Frequency::Negative => -self.mc(),
        }
    }

    /// e^{∓(i/ħ)(p⁰x⁰ − p·x)}.
    pub fn phase_factor(&self, x: &Event) -> C {
        let k = self.momentum();
        let arg = (k.p0 * x[0] - (0..3).map(|j| k.p[j] * x[j + 1]).sum::<f64>()) / self.hbar;
        let sign = match self.kind {
            Frequency::Positive => -1.0,
            Frequency::Negative => 1.0,
        };
        C::from_polar(1.0, sign * arg)
    }

    /// The same state evaluated at light speed `c` (mass label unchanged).
    pub fn with_light_speed(&self, c: f64) -> Self {
        PlaneWaveState { c, ..*self }
    }
}

impl SpinorField for PlaneWaveState {
    fn value(&self, x: &Event) -> Spinor {
        let amp = self.phase_factor(x) / (2.0 * self.p0()).sqrt();
        self.spinor().to_array().map(|z| z * amp)
    }

    fn derivatives(&self, x: &Event) -> [Spinor; 4] {
        let psi = self.value(x);
        let lower = self.momentum().lower();
        let sign = match self.kind {
            Frequency::Positive => -1.0,
            Frequency::Negative => 1.0,
        };
        std::array::from_fn(|a| {
            let k = C::new(0.0, sign * lower[a] / self.hbar);
            psi.map(|z| z * k)
        })
    }
}

/// Ψ(x⁰, x) = u e^{∓(i/ħ)(p⁰x⁰ − p·x)} / √(2p⁰).
pub fn eval_psi(state: &PlaneWaveState, x: &Event) -> Spinor {
    state.value(x)
}

/// Image of a state under C, as a plane wave of the opposite frequency:
/// negative → positive with w = σ_y w′*, positive → negative with w′ = −σ_y w*.
pub fn charge_conjugate(state: &PlaneWaveState) -> PlaneWaveState {
    let (kind, w) = match state.kind {
        Frequency::Negative => (Frequency::Positive, sigma_y(&state.w.conj())),
        Frequency::Positive => (Frequency::Negative, scale2(-1.0, sigma_y(&state.w.conj()))),
    };
    PlaneWaveState { kind, w: TwoSpinor(w), ..*state }
}

/// (E, c) → (−E, −c) with the mass label flipped so that mc is unchanged.
pub fn sheet_identify(state: &PlaneWaveState) -> PlaneWaveState {
    PlaneWaveState { m: -state.m, c: -state.c, ..*state }
}

/// The negative-frequency companion of a positive state under w′ = −σ_y w*.
pub fn companion_negative(state: &PlaneWaveState) -> PlaneWaveState {
    PlaneWaveState { kind: Frequency::Negative, w: TwoSpinor(scale2(-1.0, sigma_y(&state.w.conj()))), ..*state }
}

/// A unit spinor satisfying both w′ = −σ_y w* and w = (n·σ)w′ for direction n,
/// obtained by projecting `seed` onto the −1 eigenspace of the antilinear
/// involution w ↦ (n·σ)σ_y w*.
pub fn joint_dictionary_spinor(n: &[f64; 3], seed: &TwoSpinor) -> TwoSpinor {
    let flip = |v: &[C; 2]| n_sigma(n, &sigma_y(&v.map(|z| z.conj())));
    let mut v = seed.0;
    for _ in 0..4 {
        let a = flip(&v);
        let proj = [v[0] - a[0], v[1] - a[1]];
        if let Ok(w) = TwoSpinor::normalized(proj[0], proj[1]) {
            if proj[0].norm_sqr() + proj[1].norm_sqr() > 1e-6 {
                return w;
            }
        }
        v = [v[0] * C::new(0.0, 1.0), v[1] * C::new(0.0, 1.0)];
    }
    unreachable!("either v or iv has a nonzero projection")
}

pub const SPIN_DICTIONARY: &str = "w' = -sigma_y w*";

/// Outcome of comparing CΨ_{−p−σ} with PTQΨ_{pσ}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PtqVsC {
    pub best_phase: Phase,
    /// min over φ of max |CΨ_neg − φ PTQΨ_pos| / max |CΨ_neg|.
    pub best_deviation: f64,
    /// Deviation for φ = −1, i.e. CΨ_neg = −PTQΨ_pos.
    pub minus_one_deviation: f64,
    pub minus_one_attained: bool,
    /// PTQ operator image vs the direct formula −γ²Ψ*(−x⁰, −x, −c).
    pub table_identity_deviation: f64,
    /// e^{−ip·x} of Ψ*(−x) vs that of Ψ(x).
    pub exponent_deviation: f64,
    pub spin_dictionary: &'static str,
}

/// Compares C applied to the negative-frequency companion with PTQ applied to
/// `state`, where the PTQ image reads the state on the −c sheet before the
/// sheet identification brings it back to c.
pub fn ptq_vs_c_check(state: &PlaneWaveState, samples: &[Event]) -> Result<PtqVsC> {
    if state.kind != Frequency::Positive {
        return Err(Error::InvalidParameter("ptq_vs_c_check expects a positive-frequency state".into()));
    }
    let ptq = DiscreteOp::by_name("PTQ")?;
    let companion = companion_negative(state);
    let c_image = Transformed::new(&DiscreteOp::c(), companion);
    let other_sheet = state.with_light_speed(-state.c);
    let ptq_image = Transformed::new(&ptq, other_sheet);
    let g2 = float_gammas()[2].clone();

    let mut pairs = Vec::with_capacity(samples.len());
    let mut scale: f64 = 0.0;
    let mut table_dev: f64 = 0.0;
    let mut exp_dev: f64 = 0.0;
    for x in samples {
        let a = c_image.value(x);
        let b = ptq_image.value(x);
        let minus_x = [-x[0], -x[1], -x[2], -x[3]];
        let direct = g2.apply4(&other_sheet.value(&minus_x).map(|z| -z.conj()));
        table_dev = table_dev.max(max_abs_diff(&b, &direct) / norm(&direct).max(f64::MIN_POSITIVE));
        exp_dev = exp_dev.max((state.phase_factor(&minus_x).conj() - state.phase_factor(x)).norm());
        scale = scale.max(a.iter().map(|z| z.norm()).fold(0.0, f64::max));
        pairs.push((a, b));
    }
    let deviation = |phase: Phase| {
        let f = phase.to_float();
        pairs.iter().map(|(a, b)| max_abs_diff(a, &b.map(|z| z * f))).fold(0.0, f64::max) / scale.max(f64::MIN_POSITIVE)
    };
    let (best_phase, best_deviation) =
        Phase::ALL.into_iter().map(|p| (p, deviation(p))).min_by(|a, b| a.1.total_cmp(&b.1)).expect("four phases");
    let minus_one_deviation = deviation(Phase::MinusOne);
    Ok(PtqVsC {
        best_phase,
        best_deviation,
        minus_one_deviation,
        minus_one_attained: minus_one_deviation <= TOLERANCE,
        table_identity_deviation: table_dev,
        exponent_deviation: exp_dev,
        spin_dictionary: SPIN_DICTIONARY,
    })
}

/// Max pointwise deviation between two fields, relative to the first field's largest component.
pub fn field_deviation(a: &dyn SpinorField, b: &dyn SpinorField, samples: &[Event]) -> f64 {
    let mut scale: f64 = 0.0;
    let mut dev: f64 = 0.0;
    for x in samples {
        let (va, vb) = (a.value(x), b.value(x));
        scale = scale.max(va.iter().map(|z| z.norm()).fold(0.0, f64::max));
        dev = dev.max(max_abs_diff(&va, &vb));
    }
    dev / scale.max(f64::MIN_POSITIVE)
}

/// Random momentum with |p| ≤ ratio_max·|mc|, components multiples of |mc|/8.
pub fn random_momentum<R: Rng>(rng: &mut R, mc: f64, ratio_max: f64) -> [f64; 3] {
    let unit = mc.abs() / 8.0;
    let bound = (ratio_max * 8.0).floor() as i64;
    loop {
        let p: [f64; 3] = std::array::from_fn(|_| rng.random_range(-bound..=bound) as f64 * unit);
        if p.iter().map(|v| v * v).sum::<f64>().sqrt() <= ratio_max * mc.abs() {
            return p;
        }
    }
}

/// Random sample events with coordinates in [−span, span].
pub fn random_events<R: Rng>(rng: &mut R, n: usize, span: f64) -> Vec<Event> {
    (0..n).map(|_| std::array::from_fn(|_| rng.random_range(-span..=span))).collect()
}

#[cfg(test)]
mod tests;
