use costas_core::density::{census, CensusKind, CensusOptions, ExpExpr};
use costas_core::{sweep, Execution};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn strategies() -> Vec<(&'static str, Execution)> {
    let mut v = vec![("sequential", Execution::Sequential)];
    #[cfg(feature = "parallel")]
    v.push(("parallel", Execution::Parallel));
    v
}

fn bench_census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    let one = ExpExpr::new(1, 0);
    let kinds = [
        ("t4", CensusKind::T4),
        ("g4", CensusKind::G4),
        ("equal", CensusKind::Trinomial(one, one)),
    ];
    for (label, kind) in kinds {
        for (name, exec) in strategies() {
            let opts = CensusOptions {
                exec,
                ..CensusOptions::default()
            };
            g.bench_with_input(BenchmarkId::new(label, name), &opts, |b, &opts| {
                b.iter(|| census(kind, 200_000, None, opts).unwrap())
            });
        }
    }
    g.finish();
}

fn bench_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweep");
    g.sample_size(10);
    for (name, exec) in strategies() {
        g.bench_function(BenchmarkId::new("q<=1024", name), |b| {
            b.iter(|| sweep(1024, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_census, bench_sweep);
criterion_main!(benches);
