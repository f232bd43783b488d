use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use posp_core::algorithms::{bellman_solve, brute_force_frontier, Algorithm, OracleOptions, SolveOptions, Variant};
use posp_core::batch;
use posp_core::fixtures;
use posp_core::random::{generate, Structure};
use posp_core::weights::any::AnySpace;
use posp_core::Instance;

fn instances(structure: Structure, count: u64) -> Vec<Instance<AnySpace>> {
    (0..count).map(|seed| generate(structure, seed)).collect()
}

fn label_count(inst: &Instance<AnySpace>, algorithm: Algorithm) -> usize {
    let r = batch::solve(inst, algorithm, &SolveOptions::new(Variant::Min)).unwrap();
    r.label_count()
}

fn solve_batches(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_batch");
    for s in [Structure::Mosp3, Structure::Subset, Structure::Evsp] {
        let insts = instances(s, 100);
        for alg in [Algorithm::Bellman, Algorithm::Mda] {
            let id = format!("{s}/{alg}");
            group.bench_with_input(BenchmarkId::new("parallel", &id), &insts, |b, xs| {
                b.iter(|| batch::map(black_box(xs), |i| label_count(i, alg)))
            });
            group.bench_with_input(BenchmarkId::new("sequential", &id), &insts, |b, xs| {
                b.iter(|| batch::map_sequential(black_box(xs), |i| label_count(i, alg)))
            });
        }
    }
    group.finish();
}

fn oracle_batches(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_batch");
    group.sample_size(10);
    let insts = instances(Structure::Mosp2, 50);
    let run = |i: &Instance<AnySpace>| {
        brute_force_frontier(i, 8, Variant::Min, &OracleOptions::default())
            .unwrap()
            .enumerated
    };
    group.bench_function("parallel", |b| b.iter(|| batch::map(black_box(&insts), run)));
    group.bench_function("sequential", |b| {
        b.iter(|| batch::map_sequential(black_box(&insts), run))
    });
    group.finish();
}

fn kn_worst_case(c: &mut Criterion) {
    let mut group = c.benchmark_group("kn_worst_case");
    for (n, m) in [(3, 3), (4, 3), (3, 5)] {
        let inst = fixtures::kn(n, m);
        group.bench_function(format!("n{n}_m{m}"), |b| {
            b.iter(|| {
                bellman_solve(black_box(&inst), &SolveOptions::new(Variant::Min))
                    .unwrap()
                    .stats
                    .comparisons
            })
        });
    }
    group.finish();
}

criterion_group!(benches, solve_batches, oracle_batches, kn_worst_case);
criterion_main!(benches);
