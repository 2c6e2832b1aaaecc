use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use cyclesat::construction::{self, ConstructionParams};
use cyclesat::search::{psi_search, SearchOptions};
use cyclesat::sumset::{fold_sumset, restricted_sumset, Ambient};
use cyclesat::verify;
use cyclesat::{Modulus, ResidueSet};

fn table_witness() -> ResidueSet {
    ResidueSet::from_members(Modulus::new(41), [1, 5, 11, 30, 36, 40]).unwrap()
}

fn bench_fold_sumset(c: &mut Criterion) {
    let mut group = c.benchmark_group("fold_sumset");
    for n in [401u32, 1097] {
        let params = ConstructionParams::derive(4, n).ok();
        let params = match params {
            Some(p) => p,
            None => ConstructionParams::derive(8, n).unwrap(),
        };
        let s = construction::build_full_set(&params);
        group.bench_with_input(BenchmarkId::from_parameter(n), &s, |b, s| {
            b.iter(|| fold_sumset(black_box(s), params.ell, Ambient::Modular).unwrap())
        });
    }
    group.finish();
}

fn bench_restricted_sumset(c: &mut Criterion) {
    let s = table_witness();
    c.bench_function("restricted_sumset_n41", |b| {
        b.iter(|| restricted_sumset(black_box(&s), 4).unwrap())
    });
}

fn bench_certificates(c: &mut Criterion) {
    let params = ConstructionParams::derive(4, 401).unwrap();
    let s = construction::build_full_set(&params);
    c.bench_function("certify_proposition_n401", |b| {
        b.iter(|| verify::certify_proposition(black_box(&s), 4).unwrap())
    });
}

fn bench_psi_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("psi_search");
    group.sample_size(10);
    for n in [41u32, 53, 65] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| {
                psi_search(
                    n,
                    4,
                    &SearchOptions {
                        threads: Some(1),
                        ..SearchOptions::default()
                    },
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_fold_sumset,
    bench_restricted_sumset,
    bench_certificates,
    bench_psi_search
);
criterion_main!(benches);
