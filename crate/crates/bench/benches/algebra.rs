use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use ptq_core::clifford::{canonical_product, dirac, Generator};
use ptq_core::discrete::Polynomial;
use ptq_core::discrete::{
    commutator, solve_intertwiner, transformation_table, DiscreteOp, IntertwinerConstraint, IntertwinerMode,
    TestFunction,
};
use ptq_core::expr::{canonicalize, eval_exact, parse};
use ptq_core::scalars::ExactComplex;

fn products(c: &mut Criterion) {
    let g = &dirac().gamma;
    c.bench_function("exact 4x4 product", |b| b.iter(|| black_box(&g[1]) * black_box(&g[2])));
    c.bench_function("exact 4x4 inverse", |b| b.iter(|| black_box(&dirac().gamma5).inverse()));
    let word = [Generator::G0, Generator::G2, Generator::G5, Generator::G1, Generator::G3, Generator::G0];
    c.bench_function("canonical_product length 6", |b| b.iter(|| canonical_product(black_box(&word))));
}

fn expressions(c: &mut Criterion) {
    let text = "dagger(-i*g1*g3)*g0*star(g2)*g5";
    c.bench_function("parse", |b| b.iter(|| parse(black_box(text))));
    let e = parse(text).unwrap();
    c.bench_function("eval_exact", |b| b.iter(|| eval_exact(black_box(&e))));
    c.bench_function("canonicalize", |b| b.iter(|| canonicalize(black_box(&e))));
}

fn operators(c: &mut Criterion) {
    let constraint = IntertwinerConstraint::parse("----", IntertwinerMode::Plain).unwrap();
    c.bench_function("solve_intertwiner 64 candidates", |b| b.iter(|| solve_intertwiner(black_box(&constraint))));
    c.bench_function("transformation_table", |b| b.iter(transformation_table));

    let mut f = TestFunction::default();
    for (k, comp) in f.components.iter_mut().enumerate() {
        let mut p = Polynomial::zero();
        p.add_term([1, k as u8, 0, 2, 1], ExactComplex::from_ints(3, -1));
        p.add_term([0, 0, 2, 0, 3], ExactComplex::from_ints(-2, 5));
        *comp = p;
    }
    let (cc, ptq) = (DiscreteOp::c(), DiscreteOp::by_name("PTQ").unwrap());
    c.bench_function("commutator [C, PTQ]", |b| b.iter(|| commutator(&cc, &ptq, black_box(&f))));
}

criterion_group!(benches, products, expressions, operators);
criterion_main!(benches);
