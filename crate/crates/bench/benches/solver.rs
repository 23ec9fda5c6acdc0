use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use fracroot_bench::{coarse_sweep, solve_cases};
use fracroot_core::fixtures::DEGREE_10;
use fracroot_core::{durand_kerner, run_sweep, solve, Complex64, FractionalDerivative};

fn bench_derivative(c: &mut Criterion) {
    let p = DEGREE_10.polynomial();
    let op = FractionalDerivative::new(&p, 0.8395).unwrap();
    let z = Complex64::new(-0.7, 0.4);
    c.bench_function("frac_derivative/degree10", |b| {
        b.iter(|| op.eval(black_box(z)).unwrap())
    });
    c.bench_function("frac_derivative/build_degree10", |b| {
        b.iter(|| FractionalDerivative::new(&p, black_box(0.8395)).unwrap())
    });
}

fn bench_solve(c: &mut Criterion) {
    for (bench, cfg) in solve_cases() {
        let p = bench.polynomial();
        c.bench_function(&format!("solve/{}", bench.name), |b| {
            b.iter(|| solve(&p, black_box(&cfg)).unwrap())
        });
    }
}

fn bench_sweep(c: &mut Criterion) {
    let p = DEGREE_10.polynomial();
    let cfg = coarse_sweep(DEGREE_10.x0());
    c.bench_function("sweep/degree10_coarse", |b| {
        b.iter(|| run_sweep(&p, black_box(&cfg)).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let p = DEGREE_10.polynomial();
    c.bench_function("durand_kerner/degree10", |b| {
        b.iter(|| durand_kerner(black_box(&p), 1e-14, 1000).unwrap())
    });
}

criterion_group!(
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = bench_derivative, bench_solve, bench_sweep, bench_oracle
);
criterion_main!(benches);
