use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use eulergram::oracle;

fn enumerations(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("permutations/8", |b| {
        b.iter(|| oracle::permutation_distribution(black_box(8)))
    });
    group.bench_function("stirling/6", |b| {
        b.iter(|| oracle::stirling_distribution(black_box(6)))
    });
    group.bench_function("trees-bound-2/8", |b| {
        b.iter(|| oracle::tree_leaf_histogram(black_box(8), 2, true))
    });
    group.bench_function("trees-bound-3/7", |b| {
        b.iter(|| oracle::tree_profile_histogram(black_box(7)))
    });
    group.finish();
}

criterion_group!(benches, enumerations);
criterion_main!(benches);
