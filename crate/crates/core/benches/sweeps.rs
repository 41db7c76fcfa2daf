//! Sequential versus rayon-parallel execution of the random sweeps.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use zz_core::bicomplex::Bicomplex;
use zz_core::conditions::check_ddc3;
use zz_core::decomposition::multiplicities;
use zz_core::gen::{random_complex, ShapeParams};
use zz_core::par::Exec;

fn corpus(n: u64) -> Vec<Bicomplex> {
    (0..n).map(|seed| random_complex(seed, 12, &ShapeParams::default()).1).collect()
}

fn ddc3_sweep(c: &mut Criterion) {
    let complexes = corpus(32);
    let mut group = c.benchmark_group("ddc3_sweep");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &complexes, |b, cs| {
            b.iter(|| exec.map(cs.iter().collect(), |a| black_box(check_ddc3(a).unwrap().holds)))
        });
    }
    group.finish();
}

fn decomposition_sweep(c: &mut Criterion) {
    let complexes = corpus(64);
    let mut group = c.benchmark_group("decomposition_sweep");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &complexes, |b, cs| {
            b.iter(|| exec.map(cs.iter().collect(), |a| black_box(multiplicities(a).unwrap().count())))
        });
    }
    group.finish();
}

criterion_group!(benches, ddc3_sweep, decomposition_sweep);
criterion_main!(benches);
