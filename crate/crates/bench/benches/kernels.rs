//! Benchmarks for the exact kernels: cyclotomic field ops, rewriting,
//! Hopf-axiom verification, envelope construction, and boundary matrices.

use anyonic_bench::{
    abelian_qla, descending_word, free_presentation, nilpotent_presentation, nonabelian_qla,
};
use anyonic_core::anyon::{braid_from_r, DegreedGenerator};
use anyonic_core::homology::{boundary, homology_dims};
use anyonic_core::qla::Character;
use anyonic_core::{CycloCtx, HopfData};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use std::time::Duration;

fn scalar_ops(c: &mut Criterion) {
    let ctx = CycloCtx::new(18).unwrap();
    let a = ctx.parse("1/2 + 3*z^5 - z^11").unwrap();
    let b = ctx.parse("2 - 1/3*z^2 + z^16").unwrap();
    c.bench_function("scalar/mul", |bench| {
        bench.iter(|| ctx.mul(black_box(&a), black_box(&b)))
    });
    c.bench_function("scalar/inv", |bench| {
        bench.iter(|| ctx.inv(black_box(&a)).unwrap())
    });
}

fn braiding(c: &mut Criterion) {
    let ctx = CycloCtx::new(18).unwrap();
    let v = DegreedGenerator::new("v", 3, 18);
    let w = DegreedGenerator::new("w", 15, 18);
    c.bench_function("braid/from-r-matrix", |bench| {
        bench.iter(|| braid_from_r(&ctx, black_box(&v), black_box(&w)))
    });
}

fn rewriting(c: &mut Criterion) {
    let free = free_presentation();
    let nilpotent = nilpotent_presentation();
    let word = descending_word(12);
    let one = free.ctx().one();
    c.bench_function("normal-form/free-descending-12", |bench| {
        bench.iter(|| free.normal_form([(black_box(word.clone()), one.clone())]))
    });
    c.bench_function("normal-form/nilpotent-descending-12", |bench| {
        bench.iter(|| nilpotent.normal_form([(black_box(word.clone()), one.clone())]))
    });
    c.bench_function("confluence/free-len-3", |bench| {
        bench.iter(|| free.confluence_check(black_box(3)))
    });
}

fn hopf(c: &mut Criterion) {
    let hopf = HopfData::primitive(nilpotent_presentation());
    c.bench_function("hopf/verify-axioms-len-3", |bench| {
        bench.iter(|| hopf.verify_axioms(black_box(3)))
    });
}

fn quantum_lie(c: &mut Criterion) {
    let qla = nonabelian_qla();
    c.bench_function("qla/enveloping-presentation", |bench| {
        bench.iter(|| qla.enveloping_presentation().unwrap())
    });
    c.bench_function("qla/kernel-annihilation", |bench| {
        bench.iter(|| qla.check_bracket_kills_kernel())
    });
}

fn homology_kernels(c: &mut Criterion) {
    let nonabelian = nonabelian_qla();
    let abelian = abelian_qla();
    let delta_n = Character::zero(&nonabelian);
    let delta_a = Character::zero(&abelian);
    c.bench_function("homology/boundary-i4-nonabelian", |bench| {
        bench.iter(|| boundary(&nonabelian, &delta_n, black_box(4)).unwrap())
    });
    c.bench_function("homology/dims-to-4-nonabelian", |bench| {
        bench.iter(|| homology_dims(&nonabelian, &delta_n, black_box(4)).unwrap())
    });
    c.bench_function("homology/dims-to-6-abelian", |bench| {
        bench.iter(|| homology_dims(&abelian, &delta_a, black_box(6)).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default()
        .warm_up_time(Duration::from_millis(300))
        .measurement_time(Duration::from_millis(800))
        .sample_size(20);
    targets = scalar_ops, braiding, rewriting, hopf, quantum_lie, homology_kernels
}
criterion_main!(benches);
