use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hsumset_bench::{dense, triangular};
use hsumset_core::catalog::crosscheck;
use hsumset_core::{
    classify_by_cardinality, restricted_sumset, restricted_sumset_naive, verify_classification, Catalog, EngineConfig,
    SearchOptions, Theorem,
};

fn dp_vs_naive(c: &mut Criterion) {
    let cfg = EngineConfig::default();
    let mut group = c.benchmark_group("h3_sumset");
    for k in [8i64, 12, 16] {
        let sets = [("dense", dense(k, k / 2)), ("triangular", triangular(k))];
        for (name, a) in &sets {
            group.bench_with_input(BenchmarkId::new(format!("dp/{name}"), k), a, |b, a| {
                b.iter(|| restricted_sumset(black_box(a), 3, &cfg).unwrap())
            });
            group.bench_with_input(BenchmarkId::new(format!("naive/{name}"), k), a, |b, a| {
                b.iter(|| restricted_sumset_naive(black_box(a), 3, &cfg).unwrap())
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("dp_large_h");
    for h in [4usize, 8, 12] {
        let a = triangular(24);
        group.bench_with_input(BenchmarkId::from_parameter(h), &a, |b, a| {
            b.iter(|| restricted_sumset(black_box(a), h, &cfg).unwrap())
        });
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let single = SearchOptions { threads: 1, ..SearchOptions::default() };
    let mut group = c.benchmark_group("classify");
    group.sample_size(10);
    group.bench_function("three-element-h3/k13", |b| {
        b.iter(|| verify_classification(Theorem::ThreeElementH3, 3, 13, 18, &single).unwrap())
    });
    group.bench_function("one-element/h4k15", |b| b.iter(|| classify_by_cardinality(4, 15, 46, 18, &single).unwrap()));
    let unpruned = SearchOptions { prune: false, ..single };
    group.bench_function("one-element/h4k15/no-prune", |b| {
        b.iter(|| classify_by_cardinality(4, 15, 46, 18, &unpruned).unwrap())
    });
    group.finish();
}

fn catalog(c: &mut Criterion) {
    let catalog = Catalog::standard();
    let family = catalog.family("h4-general-triple").unwrap();
    let cfg = EngineConfig::default();
    let mut group = c.benchmark_group("catalog");
    group.sample_size(10);
    group.bench_function("h4-general-triple/h4k20", |b| b.iter(|| crosscheck(family, 4, 20, &cfg).unwrap()));
    group.finish();
}

criterion_group!(benches, dp_vs_naive, classification, catalog);
criterion_main!(benches);
