//! Parallel vs sequential comparison for the three data-parallel cores:
//! smaller-side enumeration, the brute-force oracle, and replacement-table
//! construction. The `*_seq` entry points are always available; the
//! parallel ones go through the default dispatch, so run this with the
//! default features to see both.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use bfvd::biclique::{enumerate_smaller_sides, enumerate_smaller_sides_seq};
use bfvd::gen::{random_degenerate, random_graph, rng_for};
use bfvd::instance::BfvdInstance;
use bfvd::solvers::oracle::{solve_oracle_seq, solve_oracle_with_limit};
use bfvd::wbdd::{build_replacement_table, build_replacement_table_seq};

fn bench_enumeration(c: &mut Criterion) {
    let g = random_degenerate(220, 6, &mut rng_for(11));
    let mut group = c.benchmark_group("enumerate_smaller_sides");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| enumerate_smaller_sides_seq(black_box(&g), 2, 3))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| enumerate_smaller_sides(black_box(&g), 2, 3))
    });
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let g = random_graph(14, 0.45, &mut rng_for(5));
    let inst = BfvdInstance::new(g, 2, 2, 3).unwrap();
    let mut group = c.benchmark_group("solve_oracle");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| solve_oracle_seq(black_box(&inst), 16).unwrap())
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| solve_oracle_with_limit(black_box(&inst), 16).unwrap())
    });
    group.finish();
}

fn bench_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("replacement_table");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| build_replacement_table_seq(black_box(2)).unwrap())
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| build_replacement_table(black_box(2)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_enumeration, bench_oracle, bench_table);
criterion_main!(benches);
