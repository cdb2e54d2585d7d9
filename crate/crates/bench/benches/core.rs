//! Benchmarks for the exact kernels: the two independent table-construction
//! routes, triangular-matrix assembly, and a full verification sweep.
//!
//! Run with `cargo bench -p daehee-bench`. Everything here is exact
//! rational/polynomial arithmetic, so the numbers mostly track BigInt
//! traffic; the interesting comparison is series route vs. Stirling route
//! as the table grows.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use daehee_core::{
    daehee_threeway_check, stirling_inverse_check, table_series, table_stirling, Family,
    FamilySpec, MatrixKind, TriMatrix,
};
use std::hint::black_box;

fn bench_table_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("table_routes");
    for &n in &[8usize, 16, 24] {
        let spec = FamilySpec::numbers(Family::Daehee1, 4);
        group.bench_with_input(BenchmarkId::new("daehee1_series", n), &n, |b, &n| {
            b.iter(|| table_series(black_box(&spec), n).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("daehee1_stirling", n), &n, |b, &n| {
            b.iter(|| table_stirling(black_box(&spec), n).unwrap())
        });
    }
    group.finish();
}

fn bench_symbolic_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("symbolic_tables");
    group.sample_size(20);
    let bern = FamilySpec::symbolic(Family::Bernoulli, 3);
    group.bench_function("bernoulli_poly_series_n10", |b| {
        b.iter(|| table_series(black_box(&bern), 10).unwrap())
    });
    group.bench_function("bernoulli_poly_stirling_n10", |b| {
        b.iter(|| table_stirling(black_box(&bern), 10).unwrap())
    });
    // Three free symbols (x, λ, ξ): the heaviest polynomial load per entry.
    let twisted = FamilySpec::symbolic(Family::TwistedDaehee1, 3);
    group.bench_function("twisted_poly_series_n6", |b| {
        b.iter(|| table_series(black_box(&twisted), 6).unwrap())
    });
    group.bench_function("twisted_poly_stirling_n6", |b| {
        b.iter(|| table_stirling(black_box(&twisted), 6).unwrap())
    });
    group.finish();
}

fn bench_matrix_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("matrix_build");
    for &dim in &[16usize, 32] {
        group.bench_with_input(BenchmarkId::new("stirling_first", dim), &dim, |b, &dim| {
            b.iter(|| TriMatrix::build(black_box(&MatrixKind::StirlingFirst), dim))
        });
        group.bench_with_input(BenchmarkId::new("stirling_second", dim), &dim, |b, &dim| {
            b.iter(|| TriMatrix::build(black_box(&MatrixKind::StirlingSecond), dim))
        });
    }
    group.finish();
}

fn bench_verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verification");
    group.sample_size(10);
    group.bench_function("stirling_inverse_dim20", |b| {
        b.iter(|| {
            let report = stirling_inverse_check(black_box(20));
            assert!(report.ok());
            report
        })
    });
    group.bench_function("daehee_threeway_n8_k4", |b| {
        b.iter(|| {
            let report = daehee_threeway_check(black_box(8), black_box(4));
            assert!(report.ok());
            report
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_table_routes,
    bench_symbolic_tables,
    bench_matrix_build,
    bench_verification
);
criterion_main!(benches);
