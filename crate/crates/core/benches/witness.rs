use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use mwdraw::construct::draw_tree_pair;
use mwdraw::par::Exec;
use mwdraw::proximity::{extract_mw_graphs_with, verify_with};
use mwdraw::tree_model::{gen_random_tree, RootedTree};
use mwdraw::{Beta, DrawingPair, Mode, Point, TAU};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cloud(n: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

/// A drawn tree pair of roughly `n` vertices per side with height at most 4.
fn drawing(n: usize) -> DrawingPair {
    (0..)
        .find_map(|seed| {
            let t = gen_random_tree(n, seed).ok()?;
            let rt = RootedTree::new(t.clone(), t.center()).ok()?;
            (rt.height() <= 4)
                .then(|| draw_tree_pair(&rt, &rt).ok())
                .flatten()
        })
        .expect("some seed draws")
}

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn extract(c: &mut Criterion) {
    let mut g = c.benchmark_group("extract");
    g.sample_size(10);
    for n in [50, 100, 200] {
        let (p0, p1) = (cloud(n, 1), cloud(n, 2));
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, _| {
                b.iter(|| {
                    extract_mw_graphs_with(
                        black_box(&p0),
                        black_box(&p1),
                        Beta::GABRIEL,
                        true,
                        TAU,
                        exec,
                    )
                })
            });
        }
    }
    g.finish();
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for n in [15, 30] {
        let d = drawing(n);
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, _| {
                b.iter(|| verify_with(black_box(&d), Beta::Infinite, Mode::Strict, TAU, exec))
            });
        }
    }
    g.finish();
}

criterion_group!(benches, extract, verify);
criterion_main!(benches);
