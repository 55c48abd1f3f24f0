use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zf_core::corpus::random_tree;
use zf_core::reconfig::build_zfg;
use zf_core::trees::{enumerate_min_path_covers, find_gstar_center, leafy_min_path_cover};
use zf_core::{enumerate_min_zfs, families};

fn spider_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_zfs_spider_two_leaves");
    group.sample_size(10);
    for d in 1..=6 {
        let g = families::spider_tree_two_leaves(d).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(3 * d), &g, |b, g| {
            b.iter(|| enumerate_min_zfs(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn path_cover_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("path_covers_spider_three_leaves");
    group.sample_size(10);
    for n in 1..=5 {
        let g = families::spider_tree_three_leaves(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(4 * n), &g, |b, g| {
            b.iter(|| enumerate_min_path_covers(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn cycle_zfgs(c: &mut Criterion) {
    let mut group = c.benchmark_group("zfg_cycle");
    for n in (4..=20).step_by(4) {
        let g = families::cycle(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| build_zfg(black_box(g)).unwrap()));
    }
    group.finish();
}

fn polynomial_tree_algorithms(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut group = c.benchmark_group("tree_polynomial");
    for n in [16, 32, 64, 128, 256] {
        let t = random_tree(n, &mut rng);
        group.bench_with_input(BenchmarkId::new("leafy_cover", n), &t, |b, t| {
            b.iter(|| leafy_min_path_cover(black_box(t)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("gstar_center", n), &t, |b, t| {
            b.iter(|| find_gstar_center(black_box(t)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, spider_enumeration, path_cover_enumeration, cycle_zfgs, polynomial_tree_algorithms);
criterion_main!(benches);
