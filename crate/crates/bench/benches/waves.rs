use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use ptq_bench::{event_grid, sample_state};
use ptq_core::discrete::DiscreteOp;
use ptq_core::em::{build_solution, coupled_residual, transport_check, DiracInstance, Potential};
use ptq_core::planewave::{eval_psi, free_residual, ptq_vs_c_check, Frequency, Transformed, TwoSpinor};

fn plane_waves(c: &mut Criterion) {
    let s = sample_state(Frequency::Positive, 3.0);
    let events = event_grid(16, 5.0);
    c.bench_function("eval_psi", |b| b.iter(|| eval_psi(black_box(&s), black_box(&events[3]))));
    c.bench_function("free_residual 16 events", |b| b.iter(|| free_residual(&s, s.mc(), s.hbar, black_box(&events))));
    let image = Transformed::new(&DiscreteOp::by_name("PTQ").unwrap(), s);
    c.bench_function("free_residual of PTQ image", |b| {
        b.iter(|| free_residual(&image, -s.mc(), s.hbar, black_box(&events)))
    });
    c.bench_function("ptq_vs_c_check", |b| b.iter(|| ptq_vs_c_check(black_box(&s), &events)));
}

fn coupling(c: &mut Criterion) {
    let events = event_grid(16, 5.0);
    let instance = DiracInstance::new(1.0, 3.0, -0.5, 1.0, Potential::Constant([0.5, -1.0, 0.25, 2.0])).unwrap();
    let sol = build_solution(&instance, [1.0, 0.5, -2.0], &TwoSpinor::up()).unwrap();
    c.bench_function("coupled_residual 16 events", |b| {
        b.iter(|| coupled_residual(&instance, &sol, black_box(&events)))
    });
    c.bench_function("transport_check PTQ", |b| b.iter(|| transport_check(&instance, "PTQ", &sol, black_box(&events))));
}

criterion_group!(benches, plane_waves, coupling);
criterion_main!(benches);
