//! Sequential vs parallel timings of the verification sweeps.
//!
//! Run with `cargo bench -p pi2`. The parallel variants need the
//! `parallel` feature (on by default); without it this bench target is
//! skipped entirely.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use pi2::enumerate::comb1_up_to;
use pi2::suite::{run_roundtrip_suite, ExecMode, SuiteConfig};
use pi2::theory::{canonical, check2};

fn config(mode: ExecMode) -> SuiteConfig {
    SuiteConfig {
        max_size: 7,
        random_samples: 300,
        mode,
        ..SuiteConfig::default()
    }
}

fn bench_roundtrip_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("roundtrip_suite");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let report = run_roundtrip_suite(black_box(&config(ExecMode::Sequential)));
            assert!(report.passed());
            report.total_checked()
        })
    });
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let report = run_roundtrip_suite(black_box(&config(ExecMode::Parallel)));
            assert!(report.passed());
            report.total_checked()
        })
    });
    group.finish();
}

fn bench_canonical_sweep(c: &mut Criterion) {
    let terms = comb1_up_to(9);
    let mut group = c.benchmark_group("canonical_sweep");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| {
            terms
                .iter()
                .map(|t| {
                    let cf = canonical(black_box(t));
                    check2(&cf.witness).is_ok() as usize
                })
                .sum::<usize>()
        })
    });
    group.bench_function("parallel", |b| {
        use rayon::prelude::*;
        b.iter(|| {
            terms
                .par_iter()
                .map(|t| {
                    let cf = canonical(black_box(t));
                    check2(&cf.witness).is_ok() as usize
                })
                .sum::<usize>()
        })
    });
    group.finish();
}

criterion_group!(benches, bench_roundtrip_suite, bench_canonical_sweep);
criterion_main!(benches);
