use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use neville::{newton_root, Domain, SolverSettings};
use neville_bench::{cosine_nodes, sin_table};

fn evaluate(c: &mut Criterion) {
    let mut group = c.benchmark_group("evaluate");
    for points in [4, 8, 16] {
        let nodes = cosine_nodes(points);
        group.bench_with_input(BenchmarkId::new("value", points), &nodes, |b, nodes| {
            b.iter(|| nodes.evaluate(black_box(0.123)).unwrap())
        });
        for order in [1, 3] {
            group.bench_with_input(
                BenchmarkId::new(format!("derivatives_m{order}"), points),
                &nodes,
                |b, nodes| b.iter(|| nodes.evaluate_derivatives(black_box(0.123), order).unwrap()),
            );
        }
    }
    group.finish();
}

fn table(c: &mut Criterion) {
    let table = sin_table();
    let mut group = c.benchmark_group("table");
    for degree in [2, 5] {
        group.bench_with_input(
            BenchmarkId::new("interpolate_at", degree),
            &degree,
            |b, &d| {
                b.iter(|| {
                    table
                        .interpolate_at(black_box(2.345), d, d, Domain::Extrapolate)
                        .unwrap()
                })
            },
        );
    }
    group.bench_function("newton_root_deg5", |b| {
        let settings = SolverSettings::default();
        b.iter(|| newton_root(&table, 5, 0.0, black_box(3.0), &settings).unwrap())
    });
    group.finish();
}

criterion_group!(benches, evaluate, table);
criterion_main!(benches);
