use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use motivic_bench::resolved_curves;
use motivic_core::bun::{bun_closed, bun_colimit, bun_compact, div_motive};
use motivic_core::curve::catalog::elliptic_f5;
use motivic_core::motive::{parse, realize_count, realize_series};
use motivic_core::oracle::split_bundle_count_p1;
use motivic_core::series::rat;

fn colimit_vs_closed(c: &mut Criterion) {
    let mut group = c.benchmark_group("bun");
    for n in [1u32, 2, 3] {
        group.bench_with_input(BenchmarkId::new("colimit_g2_N24", n), &n, |b, &n| {
            b.iter(|| bun_colimit(black_box(n), 0, 2, 24).unwrap())
        });
        let closed = bun_closed(n).unwrap();
        group.bench_with_input(BenchmarkId::new("closed_g2_N24", n), &closed, |b, e| {
            b.iter(|| realize_series(black_box(e), 2, 24).unwrap())
        });
    }
    group.finish();
}

fn count_realizations(c: &mut Criterion) {
    let curves = resolved_curves();
    let (_, elliptic) = &curves[2];
    c.bench_function("bun_compact_n3", |b| {
        let e = bun_compact(3, elliptic.genus()).unwrap();
        b.iter(|| realize_count(black_box(&e), elliptic).unwrap())
    });
    c.bench_function("sym_star_closed_form", |b| {
        let e = parse("SymStar(M(C){-2})").unwrap();
        b.iter(|| realize_count(black_box(&e), elliptic).unwrap())
    });
    c.bench_function("div_motive_len6_count", |b| {
        let e = div_motive(3, 0, 2).unwrap();
        b.iter(|| realize_count(black_box(&e), elliptic).unwrap())
    });
}

fn oracles(c: &mut Criterion) {
    let spec = elliptic_f5();
    c.bench_function("enumerate_f5_to_r6", |b| {
        b.iter(|| spec.enumerate_counts(black_box(6)).unwrap())
    });
    let eps = rat(1, 1_000_000_000);
    c.bench_function("splitting_oracle_n3_q2", |b| {
        b.iter(|| split_bundle_count_p1(black_box(3), 0, 2, &eps).unwrap())
    });
}

criterion_group!(benches, colimit_vs_closed, count_realizations, oracles);
criterion_main!(benches);
