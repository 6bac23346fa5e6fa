use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

const M: f64 = 1.0;
const CL: f64 = 3.0;
const HBAR: f64 = 1.0;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0)
}

fn state(kind: Frequency, p: [f64; 3], w: TwoSpinor, c: f64) -> PlaneWaveState {
    PlaneWaveState::new(kind, p, w, M, c, HBAR).unwrap()
}

/// Central-difference derivative, independent of the analytic formula.
fn finite_difference(field: &dyn SpinorField, x: &Event, a: usize) -> Spinor {
    let h = 1e-5;
    let (mut xp, mut xm) = (*x, *x);
    xp[a] += h;
    xm[a] -= h;
    let (vp, vm) = (field.value(&xp), field.value(&xm));
    std::array::from_fn(|k| (vp[k] - vm[k]) / (2.0 * h))
}

#[test]
fn shell_p0_examples() {
    assert_eq!(shell_p0(&[0.0; 3], 1.0, 1.0), 1.0);
    assert_eq!(shell_p0(&[0.0, 0.0, 4.0], 1.0, 3.0), 5.0);
    assert_eq!(shell_p0(&[0.0, 0.0, 4.0], 1.0, -3.0), 5.0);
}

#[test]
fn rest_frame_spinors() {
    let w = TwoSpinor::normalized(C::new(0.3, 0.1), C::new(-0.2, 0.7)).unwrap();
    let k = FourMomentum::on_shell([0.0; 3], M, CL);
    let u = spinor_pos(&k, &w, M, CL).unwrap();
    let root = (2.0 * M * CL).sqrt();
    assert!(max_abs_diff(&u.to_array(), &[w.0[0] * root, w.0[1] * root, C::new(0.0, 0.0), C::new(0.0, 0.0)]) < 1e-15);
    let v = spinor_neg(&k, &w, M, CL).unwrap();
    assert!(max_abs_diff(&v.to_array(), &[C::new(0.0, 0.0), C::new(0.0, 0.0), w.0[0] * root, w.0[1] * root]) < 1e-15);
}

#[test]
fn off_shell_rejected() {
    let k = FourMomentum { p0: 2.0, p: [1.0, 0.0, 0.0] };
    assert!(matches!(spinor_pos(&k, &TwoSpinor::up(), M, CL), Err(Error::OffShell(_))));
    assert!(matches!(spinor_neg(&k, &TwoSpinor::up(), M, CL), Err(Error::OffShell(_))));
}

#[test]
fn invalid_states_rejected() {
    let w = TwoSpinor::up();
    assert!(PlaneWaveState::new(Frequency::Positive, [0.0; 3], w, 0.0, 1.0, 1.0).is_err());
    assert!(PlaneWaveState::new(Frequency::Positive, [0.0; 3], w, 1.0, 0.0, 1.0).is_err());
    assert!(PlaneWaveState::new(Frequency::Positive, [0.0; 3], w, 1.0, 1.0, -1.0).is_err());
    assert!(PlaneWaveState::new(Frequency::Positive, [f64::NAN, 0.0, 0.0], w, 1.0, 1.0, 1.0).is_err());
    assert!(TwoSpinor::new(C::new(1.0, 0.0), C::new(1.0, 0.0)).is_err());
    assert!(TwoSpinor::normalized(C::new(0.0, 0.0), C::new(0.0, 0.0)).is_err());
}

#[test]
fn normalisations_and_residuals_on_both_sheets() {
    let mut rng = rng();
    for c in [CL, -CL] {
        for _ in 0..100 {
            let p = random_momentum(&mut rng, M * c, 10.0);
            let w = TwoSpinor::random(&mut rng);
            let k = FourMomentum::on_shell(p, M, c);
            assert!(k.shell_deviation(M, c) <= TOLERANCE);
            let u = spinor_pos(&k, &w, M, c).unwrap();
            let v = spinor_neg(&k, &w, M, c).unwrap();
            let two_mc = 2.0 * M * c;
            assert!((u.bar_product() - two_mc).abs() / two_mc.abs() <= TOLERANCE);
            assert!((v.bar_product() + two_mc).abs() / two_mc.abs() <= TOLERANCE);
            assert!(momentum_residual(&u, &k, M * c) <= TOLERANCE);
            assert!(momentum_residual(&v, &k, -M * c) <= TOLERANCE);
        }
    }
}

#[test]
fn eval_at_origin_and_modulus() {
    let w = TwoSpinor::random(&mut rng());
    let s = state(Frequency::Positive, [0.5, -1.0, 2.0], w, CL);
    let at0 = eval_psi(&s, &[0.0; 4]);
    let expected = s.spinor().to_array().map(|z| z / (2.0 * s.p0()).sqrt());
    assert!(max_abs_diff(&at0, &expected) < 1e-15);
    for x in random_events(&mut rng(), 10, 5.0) {
        assert!((norm(&eval_psi(&s, &x)) - norm(&at0)).abs() < 1e-14);
    }
}

#[test]
fn analytic_derivatives_match_finite_differences() {
    let mut rng = rng();
    let s = state(Frequency::Negative, [0.25, 0.5, -0.75], TwoSpinor::random(&mut rng), CL);
    let image = Transformed::new(&DiscreteOp::by_name("PT").unwrap(), s);
    for x in random_events(&mut rng, 5, 2.0) {
        for f in [&s as &dyn SpinorField, &image] {
            let d = f.derivatives(&x);
            for (a, da) in d.iter().enumerate() {
                assert!(max_abs_diff(da, &finite_difference(f, &x, a)) < 1e-7);
            }
        }
    }
}

#[test]
fn free_equation_residual() {
    let mut rng = rng();
    let samples = random_events(&mut rng, 10, 5.0);
    for c in [CL, -CL] {
        let p = random_momentum(&mut rng, M * c, 10.0);
        let w = TwoSpinor::random(&mut rng);
        let pos = state(Frequency::Positive, p, w, c);
        let neg = state(Frequency::Negative, p, w, c);
        assert!(free_residual(&pos, M * c, HBAR, &samples) <= TOLERANCE * pos.p0());
        assert!(free_residual(&neg, M * c, HBAR, &samples) <= TOLERANCE * neg.p0());
        // a wrong mass is visible
        assert!(free_residual(&pos, (M + 0.1) * c, HBAR, &samples) > 1e-3);
    }
}

#[test]
fn charge_conjugation_maps_negative_to_positive_pointwise() {
    let mut rng = rng();
    let samples = random_events(&mut rng, 10, 5.0);
    for c in [CL, -CL] {
        for p in [[0.0; 3], random_momentum(&mut rng, M * c, 10.0)] {
            let neg = state(Frequency::Negative, p, TwoSpinor::random(&mut rng), c);
            let pos = charge_conjugate(&neg);
            assert_eq!(pos.kind, Frequency::Positive);
            let image = Transformed::new(&DiscreteOp::c(), neg);
            assert!(field_deviation(&image, &pos, &samples) <= TOLERANCE);
            // C twice returns the input with phase +1, as γ²(γ²)* = I
            let back = charge_conjugate(&pos);
            assert!(
                max_abs_diff(
                    &back.w.0.into_iter().chain([C::new(0.0, 0.0); 2]).collect::<Vec<_>>().try_into().unwrap(),
                    &neg.w.0.into_iter().chain([C::new(0.0, 0.0); 2]).collect::<Vec<_>>().try_into().unwrap()
                ) < 1e-15
            );
            let twice = Transformed::new(&DiscreteOp::c(), Transformed::new(&DiscreteOp::c(), neg));
            assert!(field_deviation(&twice, &neg, &samples) <= TOLERANCE);
        }
    }
}

#[test]
fn companion_inverts_charge_conjugation() {
    let pos = state(Frequency::Positive, [1.0, 0.0, -0.5], TwoSpinor::random(&mut rng()), CL);
    let back = charge_conjugate(&companion_negative(&pos));
    assert!((back.w.0[0] - pos.w.0[0]).norm() < 1e-15 && (back.w.0[1] - pos.w.0[1]).norm() < 1e-15);
}

#[test]
fn sheet_identification_is_exact() {
    let mut rng = rng();
    let samples = random_events(&mut rng, 10, 5.0);
    let s = state(Frequency::Positive, random_momentum(&mut rng, M * CL, 10.0), TwoSpinor::random(&mut rng), CL);
    let t = sheet_identify(&s);
    assert_eq!((t.energy(), t.c), (-s.energy(), -s.c));
    assert_eq!(t.p0(), s.p0());
    for x in &samples {
        assert_eq!(eval_psi(&s, x), eval_psi(&t, x));
    }
    assert_eq!(sheet_identify(&t), s);
}

#[test]
fn rest_axis_convention_is_unobservable_for_positive_c() {
    let w = TwoSpinor::random(&mut rng());
    let k = FourMomentum::on_shell([0.0; 3], M, CL);
    let a = pos_blocks(&k, &w, M, CL, &[0.0, 0.0, 1.0]);
    let b = pos_blocks(&k, &w, M, CL, &[0.6, 0.0, 0.8]);
    assert_eq!(a, b);
    let a = neg_blocks(&k, &w, M, CL, &[0.0, 0.0, 1.0]);
    let b = neg_blocks(&k, &w, M, CL, &[0.0, 1.0, 0.0]);
    assert_eq!(a, b);
    // On the c < 0 sheet the rest-frame factor √(p⁰ − mc) is nonzero; any axis
    // still gives a valid solution.
    let k = FourMomentum::on_shell([0.0; 3], M, -CL);
    for n in [[0.0, 0.0, 1.0], [0.6, 0.0, 0.8]] {
        let u = pos_blocks(&k, &w, M, -CL, &n);
        assert!(momentum_residual(&u, &k, -M * CL) <= TOLERANCE);
        assert!((u.bar_product() + 2.0 * M * CL).abs() <= TOLERANCE);
    }
}

#[test]
fn ptq_image_solves_flipped_mass_equation() {
    let mut rng = rng();
    let samples = random_events(&mut rng, 10, 5.0);
    let ptq = DiscreteOp::by_name("PTQ").unwrap();
    for c in [CL, -CL] {
        let s = state(Frequency::Positive, random_momentum(&mut rng, M * c, 10.0), TwoSpinor::random(&mut rng), c);
        let image = Transformed::new(&ptq, s);
        assert!(free_residual(&image, -M * c, HBAR, &samples) <= TOLERANCE * s.p0());
        assert!(free_residual(&image, M * c, HBAR, &samples) > 1e-3);
    }
}

#[test]
fn ptq_vs_c_under_joint_dictionary() {
    let mut rng = rng();
    let samples = random_events(&mut rng, 10, 5.0);
    for c in [CL, -CL] {
        for _ in 0..10 {
            let p = random_momentum(&mut rng, M * c, 10.0);
            let n = FourMomentum::on_shell(p, M, c).direction();
            let w = joint_dictionary_spinor(&n, &TwoSpinor::random(&mut rng));
            // w = (n·σ)w′ with w′ = −σ_y w*
            let w_prime = companion_negative(&state(Frequency::Positive, p, w, c)).w;
            let nw = n_sigma(&n, &w_prime.0);
            assert!((nw[0] - w.0[0]).norm() < 1e-14 && (nw[1] - w.0[1]).norm() < 1e-14);

            let report = ptq_vs_c_check(&state(Frequency::Positive, p, w, c), &samples).unwrap();
            assert_eq!(report.best_phase, Phase::MinusOne);
            assert!(report.best_deviation <= TOLERANCE);
            assert!(report.minus_one_attained);
            assert!(report.table_identity_deviation <= TOLERANCE);
            assert!(report.exponent_deviation <= TOLERANCE);
        }
    }
}

#[test]
fn ptq_vs_c_tracks_global_spinor_phase() {
    // Multiplying w by e^{iπ/4} turns the relation CΨ = −PTQΨ into CΨ = −i PTQΨ.
    let mut rng = rng();
    let samples = random_events(&mut rng, 10, 5.0);
    let p = [0.5, 1.0, -0.25];
    let n = FourMomentum::on_shell(p, M, CL).direction();
    let w = joint_dictionary_spinor(&n, &TwoSpinor::random(&mut rng));
    let rot = C::from_polar(1.0, std::f64::consts::FRAC_PI_4);
    let w = TwoSpinor(w.0.map(|z| z * rot));
    let report = ptq_vs_c_check(&state(Frequency::Positive, p, w, CL), &samples).unwrap();
    assert_eq!(report.best_phase, Phase::MinusI);
    assert!(report.best_deviation <= TOLERANCE);
    assert!(!report.minus_one_attained);
}

#[test]
fn ptq_vs_c_generic_spinor_has_no_fitting_phase() {
    let mut rng = rng();
    let samples = random_events(&mut rng, 10, 5.0);
    let s = state(Frequency::Positive, [0.0, 0.0, 2.0], TwoSpinor::up(), CL);
    let report = ptq_vs_c_check(&s, &samples).unwrap();
    assert!(report.best_deviation > 1e-3);
    assert!(report.table_identity_deviation <= TOLERANCE);
    assert!(ptq_vs_c_check(&companion_negative(&s), &samples).is_err());
}
