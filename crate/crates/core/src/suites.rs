//! Seeded verification suites producing [`Report`]s.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clifford::{canonical_product, dirac, Blade, Generator};
use crate::discrete::{commutator, lightcone_check, random_point, transformation_table, DiscreteOp, TestFunction};
use crate::discrete::{solve_intertwiner, IntertwinerConstraint, IntertwinerMode};
use crate::em::{
    build_solution, coupled_residual, instance_map, potential_rule_equivalence, random_instance, residual_operator,
    transport_check, DiracInstance, InstanceMap, Potential,
};
use crate::expr::{canonicalize, eval_exact, format, parse, random_expr, GammaExpr, SAMPLE_EXPRESSIONS};
use crate::matrix::ExactMatrix;
use crate::planewave::{
    companion_negative, eval_psi, field_deviation, free_residual, joint_dictionary_spinor, momentum_residual,
    ptq_vs_c_check, random_events, random_momentum, sheet_identify, spinor_neg, spinor_pos, FourMomentum, Frequency,
    PlaneWaveState, Transformed, TwoSpinor,
};
use crate::report::{timed, CheckRecord, Report};
use crate::scalars::{ExactComplex, Phase};
use crate::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_SEED: u64 = 0;

/// Operators whose transport is checked in the EM suite.
pub const TRANSPORT_OPS: [&str; 8] = ["P", "T", "C", "Q", "PT", "PQ", "TQ", "PTQ"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Algebra,
    Table,
    Intertwiners,
    Planewave,
    Em,
}

impl Suite {
    pub const PARTS: [Suite; 5] = [Suite::Algebra, Suite::Table, Suite::Intertwiners, Suite::Planewave, Suite::Em];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Algebra => "algebra",
            Suite::Table => "table",
            Suite::Intertwiners => "intertwiners",
            Suite::Planewave => "planewave",
            Suite::Em => "em",
        }
    }

    fn stream(self) -> u64 {
        match self {
            Suite::All => 0,
            Suite::Algebra => 1,
            Suite::Table => 2,
            Suite::Intertwiners => 3,
            Suite::Planewave => 4,
            Suite::Em => 5,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        [Suite::All, Suite::Algebra, Suite::Table, Suite::Intertwiners, Suite::Planewave, Suite::Em]
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Config {
    pub seed: u64,
    pub tolerance: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: DEFAULT_SEED, tolerance: DEFAULT_TOLERANCE }
    }
}

/// Each suite draws from its own stream, so a suite's records are the same
/// whether it runs alone or as part of `all`.
fn suite_rng(seed: u64, suite: Suite) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(suite.stream());
    rng
}

pub fn run_suite(suite: Suite, config: &Config) -> Report {
    let checks = match suite {
        Suite::All => Suite::PARTS.iter().flat_map(|&s| checks_for(s, config)).collect(),
        s => checks_for(s, config),
    };
    Report::new(suite.name(), config.seed, checks)
}

fn checks_for(suite: Suite, config: &Config) -> Vec<CheckRecord> {
    let mut rng = suite_rng(config.seed, suite);
    match suite {
        Suite::Algebra => algebra_checks(&mut rng),
        Suite::Table => table_checks(&mut rng),
        Suite::Intertwiners => intertwiner_checks(),
        Suite::Planewave => planewave_checks(&mut rng, config.tolerance),
        Suite::Em => em_checks(&mut rng, config.tolerance),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

const IDENTITY_IDS: [&str; 10] = [
    "algebra.anticommutator",
    "algebra.gamma5_anticommutes",
    "algebra.hermitian_g0",
    "algebra.antihermitian_spatial",
    "algebra.square_g0",
    "algebra.square_spatial",
    "algebra.conjugation",
    "algebra.transposition",
    "algebra.gamma5_product",
    "algebra.gamma5_properties",
];

fn algebra_checks(rng: &mut ChaCha8Rng) -> Vec<CheckRecord> {
    let rep = dirac();
    let mut out: Vec<CheckRecord> = rep
        .identity_suite()
        .into_iter()
        .zip(IDENTITY_IDS)
        .map(|((relation, holds), id)| timed(|| CheckRecord::exact(id, relation, usize::from(!holds))))
        .collect();

    out.push(timed(|| {
        let z = ExactMatrix::zeros(2).unwrap();
        let minus_i = -&ExactMatrix::identity(2).unwrap();
        let block = ExactMatrix::from_blocks(&z, &minus_i, &minus_i, &z).unwrap();
        let g = &rep.gamma;
        let product = (&(&(&g[0] * &g[1]) * &g[2]) * &g[3]).scale(&ExactComplex::from_ints(0, -1));
        CheckRecord::exact(
            "algebra.gamma5_block_form",
            "γ⁵ = −iγ⁰γ¹γ²γ³ = [[0, −I], [−I, 0]]",
            usize::from(product != block),
        )
    }));

    out.push(timed(|| {
        let failures = Blade::all()
            .into_iter()
            .filter(|&b| {
                let m = rep.blade_matrix(b);
                m.inverse().map(|inv| !(&m * &inv).is_identity()).unwrap_or(true)
            })
            .count();
        CheckRecord::exact("algebra.basis_inverses", "the 16 products of gamma matrices are invertible", failures)
    }));

    out.push(timed(|| {
        let mut failures = 0;
        for word in monomial_words(3) {
            let expr = if word.is_empty() {
                GammaExpr::Identity
            } else {
                GammaExpr::Product(word.iter().map(|&g| GammaExpr::Generator(g)).collect())
            };
            let direct = rep.word_matrix(&word);
            let (phase, blade) = canonical_product(&word);
            let via_blade = rep.blade_matrix(blade).scale(&ExactComplex::from(phase));
            let ok = canonicalize(&expr).map(|c| c.matrix() == direct).unwrap_or(false) && via_blade == direct;
            failures += usize::from(!ok);
        }
        CheckRecord::exact("algebra.canonicalize_monomials", "products of γ⁰..γ³, γ⁵ up to length 3", failures)
    }));

    out.push(timed(|| {
        let mut corpus: Vec<GammaExpr> = SAMPLE_EXPRESSIONS.iter().map(|s| parse(s).expect("sample parses")).collect();
        corpus.extend((0..200).map(|_| random_expr(rng, 3)));
        let failures = corpus
            .iter()
            .filter(|e| parse(&format(e)).map(|back| eval_exact(&back) != eval_exact(e)).unwrap_or(true))
            .count();
        CheckRecord::exact("algebra.format_parse_roundtrip", "gamma expressions", failures)
    }));

    out.push(timed(|| {
        let failures = (0..100)
            .filter(|_| {
                let pt = random_point(rng);
                let (a, b) = lightcone_check(&pt[0], &[pt[1].clone(), pt[2].clone(), pt[3].clone()], &pt[4]);
                a != b
            })
            .count();
        CheckRecord::exact("algebra.lightcone_invariance", "c²t² − x² is unchanged by c → −c", failures)
    }));
    out
}

/// All generator words over {g0, g1, g2, g3, g5} of length at most `max_len`.
pub fn monomial_words(max_len: usize) -> Vec<Vec<Generator>> {
    let mut all = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<Generator>| {
                Generator::ALL.iter().map(move |&g| {
                    let mut next = w.clone();
                    next.push(g);
                    next
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn table_checks(rng: &mut ChaCha8Rng) -> Vec<CheckRecord> {
    let mut out: Vec<CheckRecord> = transformation_table()
        .into_iter()
        .map(|row| {
            timed(|| {
                let reference = format!(
                    "{}: {}, {}, {}",
                    row.op.name,
                    row.expected_matrix,
                    linearity(row.expected_antilinear),
                    row.expected_signs
                );
                CheckRecord::exact(format!("table.{}", row.op.name), reference, usize::from(!row.matches()))
            })
        })
        .collect();

    let functions: Vec<TestFunction> = (0..100).map(|_| TestFunction::random(rng)).collect();
    out.push(timed(|| {
        let (c, ptq) = (DiscreteOp::c(), DiscreteOp::by_name("PTQ").expect("known operator"));
        let failures = functions.iter().filter(|f| !commutator(&c, &ptq, f).is_zero()).count();
        CheckRecord::exact("table.commutator_C_PTQ", "[C, PTQ] = 0", failures)
    }));
    out.push(timed(|| {
        let (p, t) = (DiscreteOp::p(), DiscreteOp::t());
        let failures = functions
            .iter()
            .take(20)
            .filter(|f| {
                !p.apply(&t.apply(f)).scale(&ExactComplex::from_ints(-1, 0)).sub(&t.apply(&p.apply(f))).is_zero()
            })
            .count();
        CheckRecord::exact("table.anticommutator_P_T", "TP = −PT", failures)
    }));
    out
}

fn linearity(antilinear: bool) -> &'static str {
    if antilinear {
        "antilinear"
    } else {
        "linear"
    }
}

fn family(blade: Blade) -> BTreeSet<(u8, Phase)> {
    Phase::ALL.into_iter().map(|p| (blade.bits(), p)).collect()
}

fn intertwiner_checks() -> Vec<CheckRecord> {
    let blade = |ix: &[usize]| Blade::from_indices(ix).expect("valid indices");
    let cases: [(&str, &str, IntertwinerMode, Blade, &str); 5] = [
        (
            "intertwiners.light_speed",
            "----",
            IntertwinerMode::Plain,
            Blade::FULL,
            "U_Q γᵃ U_Q⁻¹ = −γᵃ, U_Q = λγ⁵, λ = ±1, ±i",
        ),
        ("intertwiners.parity", "+---", IntertwinerMode::Plain, blade(&[0]), "U_P γ⁰ U_P⁻¹ = γ⁰, U_P = iγ⁰"),
        ("intertwiners.time_reversal", "+---", IntertwinerMode::Transpose, blade(&[0, 1, 3]), "U_T = −iγ⁰γ¹γ³"),
        ("intertwiners.charge_conjugation", "----", IntertwinerMode::Conjugate, blade(&[2]), "γ²(γᵃ)*(γ²)⁻¹ = −γᵃ"),
        ("intertwiners.identity", "++++", IntertwinerMode::Plain, Blade::EMPTY, "identity commutes with every γᵃ"),
    ];
    cases
        .into_iter()
        .map(|(id, signs, mode, expected, reference)| {
            timed(|| {
                let constraint = IntertwinerConstraint::parse(signs, mode).expect("valid signs");
                let found: BTreeSet<(u8, Phase)> =
                    solve_intertwiner(&constraint).into_iter().map(|s| (s.blade.bits(), s.phase)).collect();
                let want = family(expected);
                CheckRecord::exact(id, reference, found.symmetric_difference(&want).count())
            })
        })
        .collect()
}

const SHEETS: [f64; 2] = [3.0, -3.0];
const MASS: f64 = 1.0;

fn planewave_checks(rng: &mut ChaCha8Rng, tol: f64) -> Vec<CheckRecord> {
    let samples = random_events(rng, 8, 5.0);
    let mut states = Vec::new();
    for c in SHEETS {
        for _ in 0..100 {
            let p = random_momentum(rng, MASS * c, 10.0);
            let w = TwoSpinor::random(rng);
            states.push(PlaneWaveState::new(Frequency::Positive, p, w, MASS, c, 1.0).expect("valid state"));
        }
    }
    let max_over = |f: &dyn Fn(&PlaneWaveState) -> f64| states.iter().map(f).fold(0.0, f64::max);
    let mut out = Vec::new();

    out.push(timed(|| {
        let d = max_over(&|s| s.momentum().shell_deviation(s.m, s.c));
        CheckRecord::float("planewave.mass_shell", "(p⁰)² − p² = m²c²", d, tol)
    }));
    out.push(timed(|| {
        let d = max_over(&|s| {
            let k = s.momentum();
            let two_mc = 2.0 * s.mc();
            let u = spinor_pos(&k, &s.w, s.m, s.c).expect("on shell");
            let v = spinor_neg(&k, &s.w, s.m, s.c).expect("on shell");
            ((u.bar_product() - two_mc).abs()).max((v.bar_product() + two_mc).abs()) / two_mc.abs()
        });
        CheckRecord::float("planewave.bar_normalisation", "ūu = 2mc, v̄v = −2mc", d, tol)
    }));
    out.push(timed(|| {
        let d = max_over(&|s| {
            let k = s.momentum();
            let u = spinor_pos(&k, &s.w, s.m, s.c).expect("on shell");
            let v = spinor_neg(&k, &s.w, s.m, s.c).expect("on shell");
            momentum_residual(&u, &k, s.mc()).max(momentum_residual(&v, &k, -s.mc()))
        });
        CheckRecord::float("planewave.momentum_residual", "(γᵃpₐ ∓ mc)u = 0", d, tol)
    }));
    out.push(timed(|| {
        let d = max_over(&|s| {
            let neg = companion_negative(s);
            free_residual(s, s.mc(), s.hbar, &samples).max(free_residual(&neg, s.mc(), s.hbar, &samples)) / s.p0()
        });
        CheckRecord::float("planewave.free_residual", "(iħγᵃ∂ₐ − mc)Ψ = 0", d, tol)
    }));
    out.push(timed(|| {
        let c = DiscreteOp::c();
        let d = max_over(&|s| field_deviation(s, &Transformed::new(&c, companion_negative(s)), &samples));
        CheckRecord::float("planewave.charge_conjugation", "CΨ_{−p−σ} = Ψ_{pσ} with w′ = −σ_y w*", d, tol)
    }));
    out.push(timed(|| {
        let failures = states
            .iter()
            .filter(|s| {
                let t = sheet_identify(s);
                t.energy() != -s.energy() || samples.iter().any(|x| eval_psi(s, x) != eval_psi(&t, x))
            })
            .count();
        CheckRecord::exact("planewave.sheet_identification", "(E, c) → (−E, −c) leaves Ψ unchanged", failures)
    }));
    out.push(timed(|| {
        let ptq = DiscreteOp::by_name("PTQ").expect("known operator");
        let d = max_over(&|s| free_residual(&Transformed::new(&ptq, *s), -s.mc(), s.hbar, &samples) / s.p0());
        CheckRecord::float("planewave.ptq_flipped_mass", "PTQΨ solves the equation with mc → −mc", d, tol)
    }));

    let joint: Vec<PlaneWaveState> = states
        .iter()
        .step_by(10)
        .map(|s| {
            let n = FourMomentum::on_shell(s.p, s.m, s.c).direction();
            PlaneWaveState { w: joint_dictionary_spinor(&n, &s.w), ..*s }
        })
        .collect();
    let results: Vec<_> = joint.iter().map(|s| ptq_vs_c_check(s, &samples).expect("positive state")).collect();
    let worst = |f: &dyn Fn(&crate::planewave::PtqVsC) -> f64| results.iter().map(f).fold(0.0, f64::max);
    out.push(timed(|| {
        CheckRecord::float(
            "planewave.ptq_vs_c.best_phase",
            "CΨ = φ·PTQΨ, φ ∈ {±1, ±i}",
            worst(&|r| r.best_deviation),
            tol,
        )
    }));
    out.push(timed(|| {
        CheckRecord::float(
            "planewave.ptq_vs_c.phase_minus_one",
            "CΨ_{−p−σ} = −PTQΨ_{pσ}, w′ = −σ_y w*, w = (n·σ)w′",
            worst(&|r| r.minus_one_deviation),
            tol,
        )
    }));
    out.push(timed(|| {
        CheckRecord::float(
            "planewave.ptq_table_identity",
            "PTQΨ = −γ²Ψ*(−x⁰, −x, −c)",
            worst(&|r| r.table_identity_deviation),
            tol,
        )
    }));
    out
}

fn em_checks(rng: &mut ChaCha8Rng, tol: f64) -> Vec<CheckRecord> {
    let samples = random_events(rng, 8, 5.0);
    let pairs: Vec<_> = (0..20)
        .map(|_| {
            let instance = random_instance(rng);
            let pi = random_momentum(rng, instance.mc(), 10.0);
            let sol = build_solution(&instance, pi, &TwoSpinor::random(rng)).expect("constant potential");
            (instance, sol)
        })
        .collect();
    let mut out = Vec::new();

    out.push(timed(|| {
        let d = pairs.iter().map(|(i, s)| coupled_residual(i, s, &samples)).fold(0.0, f64::max);
        CheckRecord::float("em.solution_residual", "(γᵃ(iħ∂ₐ − (e/c)Aₐ) − mc)Ψ = 0", d, tol)
    }));
    for op in TRANSPORT_OPS {
        out.push(timed(|| {
            let d = pairs
                .iter()
                .map(|(i, s)| transport_check(i, op, s, &samples).unwrap_or(f64::INFINITY))
                .fold(0.0, f64::max);
            let map = instance_map(op).expect("known operator");
            CheckRecord::float(format!("em.transport.{op}"), format!("{op}: (m, c, e, A) → {map}"), d, tol)
        }));
    }
    out.push(timed(|| {
        let mut failures = 0;
        for op in TRANSPORT_OPS {
            let sequential = op
                .chars()
                .map(|ch| instance_map(&ch.to_string()).expect("primitive"))
                .fold(InstanceMap::IDENTITY, |acc, m| acc.compose(&m));
            failures += usize::from(sequential != instance_map(op).expect("known operator"));
        }
        let prims: Vec<InstanceMap> =
            ["P", "T", "C", "Q"].iter().map(|n| instance_map(n).expect("primitive")).collect();
        for a in &prims {
            for b in &prims {
                for c in &prims {
                    failures += usize::from(a.compose(b).compose(c) != a.compose(&b.compose(c)));
                }
            }
        }
        CheckRecord::exact("em.map_composition", "map(P)∘map(T)∘map(Q) = map(PTQ)", failures)
    }));
    out.push(timed(|| {
        let mut failures = pairs.iter().filter(|(i, _)| !potential_rule_equivalence(i).unwrap_or(false)).count();
        for (i, _) in &pairs {
            let a = i.potential.constant().expect("constant potential");
            let double_e = DiracInstance { e: 2.0 * i.e, ..i.clone() };
            let double_a = DiracInstance { potential: Potential::Constant(a.map(|v| 2.0 * v)), ..i.clone() };
            failures += usize::from(residual_operator(&double_e).ok() != residual_operator(&double_a).ok());
        }
        CheckRecord::exact("em.potential_rule", "QPT(A) = (−A⁰, −A)", failures)
    }));
    out.push(timed(|| {
        let instance = DiracInstance::free(1.0, 3.0, 1.0).expect("valid parameters");
        let gap = build_solution(&instance, [0.0; 3], &TwoSpinor::up()).expect("constant potential").energy_gap();
        CheckRecord::float("em.energy_gap", "energy gap 2E, E = mc² at rest", (gap - 18.0).abs(), tol)
    }));
    out
}
