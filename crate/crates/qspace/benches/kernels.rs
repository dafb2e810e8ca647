use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;

use qspace::basis::{permanent, permanent_seq};
use qspace::checks;

fn test_matrix(n: usize) -> Vec<Vec<Complex64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    Complex64::new(
                        ((i * 37 + j * 101) % 17) as f64 / 17.0,
                        ((i * 13 + j * 7) % 11) as f64 / 11.0,
                    )
                })
                .collect()
        })
        .collect()
}

fn bench_permanent(c: &mut Criterion) {
    let mut group = c.benchmark_group("permanent");
    for n in [8usize, 12] {
        let a = test_matrix(n);
        group.bench_function(format!("parallel/n{n}"), |b| {
            b.iter(|| permanent(black_box(&a)).unwrap())
        });
        group.bench_function(format!("sequential/n{n}"), |b| {
            b.iter(|| permanent_seq(black_box(&a)).unwrap())
        });
    }
    group.finish();
}

fn bench_relation_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("relation-suites");
    group.sample_size(10);
    group.bench_function("ccr/parallel/m4t3", |b| {
        b.iter(|| checks::ccr_report(black_box(4), black_box(3), 1e-12))
    });
    group.bench_function("ccr/sequential/m4t3", |b| {
        b.iter(|| checks::ccr_report_seq(black_box(4), black_box(3), 1e-12))
    });
    group.bench_function("car/parallel/m6", |b| {
        b.iter(|| checks::car_report(black_box(6)))
    });
    group.bench_function("car/sequential/m6", |b| {
        b.iter(|| checks::car_report_seq(black_box(6)))
    });
    group.finish();
}

criterion_group!(benches, bench_permanent, bench_relation_suites);
criterion_main!(benches);
