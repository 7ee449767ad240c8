use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use dirac_bench::reference_packet;
use dirac_core::packet::{figure_data, g_integral, statistics, Figure};
use dirac_core::Observable;

fn integrals(c: &mut Criterion) {
    c.bench_function("g_integral(2, 3/2; 2)", |b| b.iter(|| g_integral(black_box(2.0), 1.5, 2.0, 1.0)));
    c.bench_function("g_integral(0.3, 1; 0.3) singular", |b| {
        b.iter(|| g_integral(black_box(0.3), 1.0, 0.3, 1.0))
    });
}

fn packets(c: &mut Criterion) {
    let packet = reference_packet();
    let mut g = c.benchmark_group("packet");
    g.sample_size(10);
    for (label, sizes) in [("coarse", (64, 16, 32)), ("default", (128, 32, 64))] {
        let grid = packet.grid(sizes.0, sizes.1, sizes.2).expect("grid");
        g.bench_function(format!("energy+position {label}"), |b| {
            b.iter(|| statistics(&packet, black_box(&[Observable::Energy, Observable::Position(0)]), &grid))
        });
    }
    g.bench_function("figure 1, 60 points", |b| {
        b.iter(|| figure_data(Figure::Energy, 1.0, 7.0, black_box(60), 1.0))
    });
    g.finish();
}

criterion_group!(benches, integrals, packets);
criterion_main!(benches);
