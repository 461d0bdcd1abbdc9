//! Sequential vs parallel construct-and-check sweeps.

use criterion::{criterion_group, criterion_main, Criterion};

use hamcay::constructor::Target;
use hamcay::par::Exec;
use hamcay::sweep::{sweep, SweepOptions};

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep_k8_auto");
    group.sample_size(10);
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        let options = SweepOptions {
            exec,
            ..SweepOptions::default()
        };
        group.bench_function(name, |b| b.iter(|| sweep(8, Target::Auto, &options)));
    }
    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
