use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use surfgroups::abelian::{nab_quotient_nonorientable, nab_quotient_orientable};
use surfgroups::embeddings::{certify_injectivity_ball_with, BallOptions};
use surfgroups::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn ball(c: &mut Criterion) {
    let mut group = c.benchmark_group("injectivity_ball");
    group.sample_size(10);
    for radius in [16u32, 32, 64] {
        for (label, execution) in MODES {
            let opts = BallOptions {
                execution,
                ..BallOptions::default()
            };
            group.bench_with_input(BenchmarkId::new(label, radius), &radius, |b, &r| {
                b.iter(|| certify_injectivity_ball_with(r, opts).unwrap())
            });
        }
    }
    group.finish();
}

fn nab_grid(c: &mut Criterion) {
    let grid: Vec<(u32, u32)> = (1..=10)
        .flat_map(|g| (1..=10).map(move |k| (g, k)))
        .collect();
    let mut group = c.benchmark_group("nab_grid_10x10");
    group.sample_size(10);
    for (label, execution) in MODES {
        group.bench_function(label, |b| {
            b.iter(|| {
                execution.map(&grid, |&(g, k)| {
                    let o = nab_quotient_orientable(g, k).unwrap();
                    let n = nab_quotient_nonorientable(g, k).unwrap();
                    (o, n)
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, ball, nab_grid);
criterion_main!(benches);
