//! Sequential against rayon on the heavy kernels: the exact product through
//! brackets, the raw jet expansion, and the numeric period sums.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kronlab::exec::{with_strategy, Strategy};
use kronlab::kronecker::{kron_laurent, product_b};
use kronlab::numeric::{cusp_periods, PeriodOptions};
use kronlab::suites::periods::extracted_eigenform;
use kronlab::DirichletCharacter;
use std::hint::black_box;

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn bench_product(c: &mut Criterion) {
    let mut g = c.benchmark_group("product_b");
    g.sample_size(10);
    for (level, kmax) in [(1u64, 12u32), (5, 8)] {
        let chi = DirichletCharacter::even_primitive(level).remove(0);
        for (name, s) in STRATEGIES {
            g.bench_with_input(BenchmarkId::new(name, format!("N={level} kmax={kmax}")), &chi, |b, chi| {
                b.iter(|| with_strategy(s, || product_b(black_box(chi), kmax, 30, false).unwrap()))
            });
        }
    }
    g.finish();
}

fn bench_jets(c: &mut Criterion) {
    let mut g = c.benchmark_group("kron_laurent");
    g.sample_size(10);
    let chi = DirichletCharacter::even_primitive(13).remove(0);
    for (name, s) in STRATEGIES {
        g.bench_function(BenchmarkId::new(name, "N=13 P=20 D=10"), |b| {
            b.iter(|| with_strategy(s, || kron_laurent(black_box(&chi), 20, 10)))
        });
    }
    g.finish();
}

fn bench_periods(c: &mut Criterion) {
    let mut g = c.benchmark_group("cusp_periods");
    g.sample_size(10);
    let one = DirichletCharacter::trivial(1);
    let f = extracted_eigenform(&one, 12, 60).unwrap();
    let ns: Vec<u32> = (0..=10).collect();
    for (name, s) in STRATEGIES {
        g.bench_function(BenchmarkId::new(name, "Delta"), |b| {
            b.iter(|| with_strategy(s, || cusp_periods(black_box(f.coeffs()), 12, 1, 1, &ns, &PeriodOptions::default()).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_product, bench_jets, bench_periods);
criterion_main!(benches);
