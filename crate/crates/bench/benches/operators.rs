use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use dirac_bench::momenta;
use dirac_core::algebra::{boost, boost_for_momentum, Vec3};
use dirac_core::associated::{d_matrix, matrix_elements_offdiag};
use dirac_core::operators::{pauli_lubanski, pryce_e_spin, spin_type_operators};
use dirac_core::verify::{run_suite, VerifyConfig};
use dirac_core::{KernelKind, OscillatingKernel, PolarizationBasis};

fn matrices(c: &mut Criterion) {
    let qs = momenta(64);
    c.bench_function("boost_for_momentum x64", |b| {
        b.iter(|| {
            qs.iter().for_each(|q| {
                black_box(boost_for_momentum(black_box(q)));
            })
        })
    });
    c.bench_function("pryce_e_spin x64", |b| {
        b.iter(|| {
            qs.iter().for_each(|q| {
                black_box(pryce_e_spin(black_box(q)));
            })
        })
    });
    c.bench_function("spin_type_operators x64", |b| {
        b.iter(|| {
            qs.iter().for_each(|q| {
                black_box(spin_type_operators(black_box(q)));
            })
        })
    });
    c.bench_function("pauli_lubanski x64", |b| {
        b.iter(|| {
            qs.iter().for_each(|q| {
                black_box(pauli_lubanski(black_box(q)));
            })
        })
    });
}

fn associated(c: &mut Criterion) {
    let qs = momenta(64);
    let basis = PolarizationBasis::Helicity;
    let lambda = boost(&Vec3::new(0.3, -0.4, 0.5));
    c.bench_function("d_matrix helicity x64", |b| {
        b.iter(|| {
            qs.iter().for_each(|q| {
                black_box(d_matrix(&lambda, black_box(q), &basis).ok());
            })
        })
    });
    let k = OscillatingKernel::new(KernelKind::DeltaX, 0, basis).expect("valid kernel");
    c.bench_function("delta_x kernel closed form x64", |b| {
        b.iter(|| {
            qs.iter().for_each(|q| {
                black_box(k.eval(black_box(q), 0.7).ok());
            })
        })
    });
    let parent = KernelKind::DeltaX.parent(0).expect("valid parent");
    c.bench_function("delta_x kernel from parent x64", |b| {
        b.iter(|| {
            qs.iter().for_each(|q| {
                black_box(matrix_elements_offdiag(&parent, black_box(q), 0.7, &basis).ok());
            })
        })
    });
}

fn suites(c: &mut Criterion) {
    let cfg = VerifyConfig { samples: 20, ..Default::default() };
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for name in ["pryce_spin", "appendix_b"] {
        g.bench_function(name, |b| b.iter(|| run_suite(black_box(name), &cfg).map(|r| r.passed())));
    }
    g.finish();
}

criterion_group!(benches, matrices, associated, suites);
criterion_main!(benches);
