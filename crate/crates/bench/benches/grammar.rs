use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use eulergram::{egf, eulerian, parse, second_order, symexp, Preset};

fn iterate(c: &mut Criterion) {
    let mut group = c.benchmark_group("iterate");
    for n in [10u32, 20] {
        group.bench_with_input(BenchmarkId::new("eulerian", n), &n, |b, &n| {
            b.iter(|| eulerian(black_box(n)).unwrap())
        });
    }
    for n in [6u32, 10] {
        group.bench_with_input(BenchmarkId::new("second-order", n), &n, |b, &n| {
            b.iter(|| second_order(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn expansions(c: &mut Criterion) {
    let a20 = eulerian(20).unwrap();
    c.bench_function("gamma_expand/20", |b| {
        b.iter(|| symexp::gamma_expand(black_box(&a20)).unwrap())
    });

    let c8 = second_order(8).unwrap();
    c.bench_function("e_expand/8", |b| {
        b.iter(|| symexp::e_expand(black_box(&c8)).unwrap())
    });
    c.bench_function("e_table_via_recurrence/8", |b| {
        b.iter(|| symexp::e_table_via_recurrence(black_box(8)).unwrap())
    });
}

fn series(c: &mut Criterion) {
    let g = Preset::DumontEulerian.grammar();
    let y = parse("y").unwrap();
    let y_inv = parse("y^-1").unwrap();
    c.bench_function("gen_product/10", |b| {
        b.iter(|| {
            let s = egf::gen(&g, black_box(&y), 10);
            s.mul(&egf::gen(&g, black_box(&y_inv), 10)).unwrap()
        })
    });
}

criterion_group!(benches, iterate, expansions, series);
criterion_main!(benches);
