//! Verification sweeps with and without the rayon pool.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tunedfs::corpus::{verify_bcc, verify_scc, Execution};

const TRIALS: usize = 200;

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        let name = format!("{exec:?}");
        group.bench_function(BenchmarkId::new("scc", &name), |b| {
            b.iter(|| assert!(verify_scc(TRIALS, 64, 1, exec).is_none()))
        });
        group.bench_function(BenchmarkId::new("bcc", &name), |b| {
            b.iter(|| assert!(verify_bcc(TRIALS, 10, 1, exec).is_none()))
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
