use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use arrovian::axioms::check_unrestricted_domain_with;
use arrovian::search::{
    brute_force_cycle_search_with, monte_carlo_condorcet_with, sweep_candidates_with, symmetric_space, Culture,
    SweepPlan,
};
use arrovian::{dictator, pairwise_majority, Exec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn unrestricted_domain(c: &mut Criterion) {
    let mut group = c.benchmark_group("ud-dictator-6");
    group.sample_size(10);
    let w = dictator(1, 6).unwrap();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| check_unrestricted_domain_with(&w, exec).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle-majority-4");
    group.sample_size(10);
    let w = pairwise_majority(4).unwrap();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| brute_force_cycle_search_with(&w, exec).unwrap())
        });
    }
    group.finish();
}

fn symmetric_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep-symmetric-2");
    let space = symmetric_space(2).unwrap();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| sweep_candidates_with(&space, SweepPlan::Exhaustive, exec).unwrap())
        });
    }
    group.finish();
}

fn monte_carlo(c: &mut Criterion) {
    let mut group = c.benchmark_group("monte-carlo-3x200k");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| monte_carlo_condorcet_with(3, 200_000, 42, Culture::StrictImpartial, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, unrestricted_domain, oracle, symmetric_sweep, monte_carlo);
criterion_main!(benches);
