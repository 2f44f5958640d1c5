use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use corrsphere::rng::SplitMix64;
use corrsphere::{
    center_of_mass, distance_matrix, eigen_symmetric, fit, standardize, ClusteringConfig,
    InitMethod, SamplePoint, ScatterMatrix, StandardizedPoint,
};

fn random_points(seed: u64, dim: usize, n: usize) -> Vec<StandardizedPoint> {
    let mut rng = SplitMix64::new(seed);
    (0..n)
        .map(|_| {
            let values: Vec<f64> = (0..dim).map(|_| rng.next_in(-5.0, 5.0)).collect();
            standardize(&SamplePoint::new(values).unwrap()).unwrap()
        })
        .collect()
}

fn bench_standardize(c: &mut Criterion) {
    let mut group = c.benchmark_group("standardize");
    for dim in [16, 256, 4096] {
        let mut rng = SplitMix64::new(1);
        let raw = SamplePoint::new((0..dim).map(|_| rng.next_in(-5.0, 5.0)).collect()).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(dim), &raw, |b, raw| {
            b.iter(|| standardize(black_box(raw)).unwrap());
        });
    }
    group.finish();
}

fn bench_distance_matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("distance_matrix");
    for (dim, n) in [(16, 64), (64, 256)] {
        let points = random_points(2, dim, n);
        let id = format!("d{dim}_n{n}");
        group.bench_with_input(BenchmarkId::from_parameter(id), &points, |b, points| {
            b.iter(|| distance_matrix(black_box(points)).unwrap());
        });
    }
    group.finish();
}

fn bench_eigen(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigen_symmetric");
    for dim in [8, 24, 50] {
        let points = random_points(3, dim, 4 * dim);
        let matrix = ScatterMatrix::from_points(&points).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(dim), &matrix, |b, matrix| {
            b.iter(|| eigen_symmetric(black_box(matrix)).unwrap());
        });
    }
    group.finish();
}

fn bench_center_of_mass(c: &mut Criterion) {
    let mut group = c.benchmark_group("center_of_mass");
    for (dim, n) in [(8, 128), (32, 512)] {
        let points = random_points(4, dim, n);
        let id = format!("d{dim}_n{n}");
        group.bench_with_input(BenchmarkId::from_parameter(id), &points, |b, points| {
            b.iter(|| center_of_mass(black_box(points)).unwrap());
        });
    }
    group.finish();
}

fn bench_fit(c: &mut Criterion) {
    let mut group = c.benchmark_group("cluster_fit");
    group.sample_size(20);
    let points = random_points(5, 16, 400);
    for init in [InitMethod::FarthestPoint, InitMethod::RandomDistinct] {
        let cfg = ClusteringConfig::new(4).with_seed(9).with_init(init);
        let id = format!("{init:?}");
        group.bench_with_input(BenchmarkId::from_parameter(id), &cfg, |b, cfg| {
            b.iter(|| fit(black_box(&points), black_box(cfg)).unwrap());
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_standardize,
    bench_distance_matrix,
    bench_eigen,
    bench_center_of_mass,
    bench_fit
);
criterion_main!(benches);
