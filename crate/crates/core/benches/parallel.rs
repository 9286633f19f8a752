use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use satake_core::plattice::{enumerate_range_with, structure_constants_with};
use satake_core::symfunc::{hall_littlewood_t_with, schur};
use satake_core::tate::{tate_dimension_with, TateConfig};
use satake_core::{Exec, Weight};

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_range p=3 n=3 window=3");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_range_with(exec, black_box(3), 3, 0, 3).unwrap())
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let lam = Weight::new(vec![2, 1, 0]);
    let mut g = c.benchmark_group("structure_constants (2,1,0)^2 p=2");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| structure_constants_with(exec, black_box(&lam), &lam, 2).unwrap())
        });
    }
    g.finish();
}

fn multiply(c: &mut Criterion) {
    let a = schur(&Weight::new(vec![3, 2, 1, 0])).unwrap();
    let b = schur(&Weight::new(vec![2, 2, 1, 0])).unwrap();
    let mut g = c.benchmark_group("schur product GL_4");
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |bch| bch.iter(|| a.multiply_with(exec, black_box(&b)).unwrap()));
    }
    g.finish();
}

fn hall_littlewood(c: &mut Criterion) {
    let mu = Weight::new(vec![2, 1, 1, 0, 0]);
    let mut g = c.benchmark_group("hall_littlewood (2,1,1,0,0)");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| hall_littlewood_t_with(exec, black_box(&mu)).unwrap()));
    }
    g.finish();
}

fn tate(c: &mut Criterion) {
    let cfg = TateConfig::odd_unitary(7).unwrap();
    let mu = Weight::new(vec![2, 1, 1, 0, 0, 0, -1]);
    let mut g = c.benchmark_group("tate_dimension GL_7");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| tate_dimension_with(exec, black_box(&mu), &cfg).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, enumeration, oracle, multiply, hall_littlewood, tate);
criterion_main!(benches);
