use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use cohere_bench::{canonical_points, ginibre_states};
use cohere_core::{
    canonical_measures_numeric, concurrence, discriminate, hermitian_eigen, l1_coherence,
    observables_expectations, sampling, theorem1_chain,
};

fn bench_linalg(c: &mut Criterion) {
    let states = ginibre_states(64);
    c.bench_function("hermitian_eigen 4x4", |b| {
        let mut k = 0;
        b.iter(|| {
            k = (k + 1) % states.len();
            hermitian_eigen(black_box(states[k].matrix()), 1e-10).unwrap()
        })
    });
}

fn bench_two_qubit(c: &mut Criterion) {
    let states = ginibre_states(64);
    let mut group = c.benchmark_group("two-qubit");
    group.bench_function("concurrence", |b| {
        let mut k = 0;
        b.iter(|| {
            k = (k + 1) % states.len();
            concurrence(black_box(&states[k])).unwrap()
        })
    });
    group.bench_function("l1_coherence", |b| {
        b.iter(|| l1_coherence(black_box(&states[0])))
    });
    group.bench_function("theorem1_chain", |b| {
        b.iter(|| theorem1_chain(black_box(&states[1])).unwrap())
    });
    group.bench_function("sample ginibre rank 4", |b| {
        let mut k = 0;
        b.iter(|| {
            k += 1;
            sampling::sample_density_at(1, 4, 4, black_box(k)).unwrap()
        })
    });
    group.finish();
}

fn bench_three_qubit(c: &mut Criterion) {
    let points = canonical_points(64);
    let mut group = c.benchmark_group("canonical");
    group.bench_function("numeric measures", |b| {
        let mut k = 0;
        b.iter(|| {
            k = (k + 1) % points.len();
            canonical_measures_numeric(black_box(&points[k])).unwrap()
        })
    });
    group.bench_function("discriminate", |b| {
        b.iter(|| discriminate(black_box(&points[3])).unwrap())
    });
    group.bench_function("observables", |b| {
        b.iter(|| observables_expectations(black_box(&points[5])).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_linalg, bench_two_qubit, bench_three_qubit);
criterion_main!(benches);
