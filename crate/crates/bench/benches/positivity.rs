use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use posflag::{check_positivity_instance, flag_positivity_plucker, flag_positivity_wronskian, Mode, SolverOptions};
use posflag_bench::{negative_roots, tp_flag};

fn flag_tests(c: &mut Criterion) {
    let mut group = c.benchmark_group("flag");
    for n in [4, 6, 8] {
        let f = tp_flag(n, n as u64);
        group.bench_with_input(BenchmarkId::new("plucker", n), &f, |b, f| {
            b.iter(|| flag_positivity_plucker(black_box(f)))
        });
        group.bench_with_input(BenchmarkId::new("wronskian", n), &f, |b, f| {
            b.iter(|| flag_positivity_wronskian(black_box(f), Mode::Positive))
        });
    }
    group.finish();
}

fn solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("positivity_instance");
    group.sample_size(10);
    let opts = SolverOptions::default();
    for (k, n) in [(2, 4), (2, 5)] {
        let roots = negative_roots(k * (n - k));
        group.bench_with_input(BenchmarkId::from_parameter(format!("gr{k}{n}")), &roots, |b, roots| {
            b.iter(|| check_positivity_instance(k, n, black_box(roots), &opts).expect("valid instance"))
        });
    }
    group.finish();
}

criterion_group!(benches, flag_tests, solver);
criterion_main!(benches);
