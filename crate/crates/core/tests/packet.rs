#![allow(clippy::needless_range_loop)]

use std::f64::consts::PI;

use dirac_core::packet::{
    cone_filter, figure_data, position_dispersion_at_time, statistics, Figure, Observable,
};
use dirac_core::{make_isotropic, Error, PacketProfile, Vec3};
use gauss_quad::GaussLegendre;

/// 4π∫₀^{p_max} p²f(p)φ(p)²dp with a plain Gauss-Legendre rule on the closed-form profile.
fn radial_oracle(gamma: f64, pbar: f64, f: impl Fn(f64) -> f64) -> f64 {
    let q = gamma * pbar;
    let ln_n = q * (2.0 * gamma).ln() - 0.5 * (4.0 * PI * statrs::function::gamma::gamma(2.0 * q)).ln();
    let phi = |p: f64| (ln_n + (q - 1.5) * p.ln() - gamma * p).exp();
    let p_max = (q + 40.0) / gamma;
    let rule = GaussLegendre::new(std::num::NonZeroUsize::new(400).unwrap());
    4.0 * PI * rule.integrate(0.0, p_max, |p| p * p * f(p) * phi(p).powi(2))
}

#[test]
fn closed_forms_against_one_dimensional_oracle() {
    for (gamma, pbar) in [(1.0, 2.0), (0.7, 3.5), (2.0, 1.2)] {
        let iso = make_isotropic(gamma, pbar, 1.0).unwrap();
        let e = |p: f64| (p * p + 1.0).sqrt();
        assert!((radial_oracle(gamma, pbar, |_| 1.0) - 1.0).abs() < 1e-12);
        let h = radial_oracle(gamma, pbar, e);
        assert!((iso.mean_energy().unwrap() - h).abs() < 1e-10 * h);
        let v = radial_oracle(gamma, pbar, |p| p / e(p));
        assert!((iso.mean_velocity().unwrap() - v).abs() < 1e-10 * v);
        let h2 = radial_oracle(gamma, pbar, |p| e(p) * e(p));
        assert!((iso.mean_square_energy() - h2).abs() < 1e-10 * h2);
    }
}

#[test]
fn cartesian_second_moment_is_a_third_of_the_radial_one() {
    let iso = make_isotropic(1.0, 2.0, 1.0).unwrap();
    let packet = iso.packet(0.4, Vec3::zeros()).unwrap();
    let grid = packet.default_grid().unwrap();
    let obs: Vec<Observable> = (0..3).map(Observable::Momentum).collect();
    let r = statistics(&packet, &obs, &grid).unwrap();
    let want = (4.0 + 1.0) / 3.0;
    for row in &r.rows {
        let second = row.dispersion + row.expectation.powi(2);
        assert!((second - want).abs() < 1e-6 * want, "{} {second}", row.name());
    }
}

#[test]
fn spin_table_holds_for_any_angle() {
    let iso = make_isotropic(1.3, 2.0, 1.0).unwrap();
    for theta in [0.0, 0.3, PI / 2.0, 2.2, PI] {
        let packet = iso.packet(theta, Vec3::new(0.1, 0.2, 0.3)).unwrap();
        let grid = packet.grid(128, 8, 16).unwrap();
        let obs: Vec<Observable> = (0..3).map(Observable::Spin).collect();
        let r = statistics(&packet, &obs, &grid).unwrap();
        let (s, c) = (theta.sin(), theta.cos());
        let want = [(s / 2.0, c * c / 4.0), (0.0, 0.25), (c / 2.0, s * s / 4.0)];
        for (row, (mean, disp)) in r.rows.iter().zip(want) {
            assert!((row.expectation - mean).abs() < 1e-12, "{theta} {}", row.name());
            assert!((row.dispersion - disp).abs() < 1e-12, "{theta} {}", row.name());
        }
    }
}

#[test]
fn position_spread_grows_with_velocity_dispersion() {
    let iso = make_isotropic(1.0, 2.0, 1.0).unwrap();
    let packet = iso.packet(0.0, Vec3::zeros()).unwrap();
    let grid = packet.grid(128, 16, 32).unwrap();
    let obs: Vec<Observable> =
        (0..3).map(Observable::Position).chain((0..3).map(Observable::Velocity)).collect();
    let r = statistics(&packet, &obs, &grid).unwrap();
    let at_ten = position_dispersion_at_time(&packet, 10.0, &grid).unwrap();
    for i in 0..3 {
        let want = r.rows[i].dispersion + 100.0 * r.rows[3 + i].dispersion;
        assert!((at_ten[i] - want).abs() < 1e-12 * want);
        assert!((r.rows[i].dispersion - 1.0 / 6.0).abs() < 1e-6 / 6.0);
    }
}

#[test]
fn gaussian_profile_saturates_the_uncertainty_bound() {
    // φ = (2πσ²)^{-3/4}e^{-p²/4σ²}: disp(P^i) = σ², disp(X^i) = 1/(4σ²).
    let sigma: f64 = 0.8;
    let norm = (2.0 * PI * sigma * sigma).powf(-0.75);
    let packet = PacketProfile::new(1.0, 10.0 * sigma, move |p| {
        norm * (-p.norm_squared() / (4.0 * sigma * sigma)).exp()
    })
    .unwrap();
    let grid = packet.grid(64, 16, 32).unwrap();
    let needs = statistics(&packet, &[Observable::Position(0)], &grid);
    assert!(matches!(needs, Err(Error::MissingGradient(_))));

    let packet = packet.with_fd_gradient().with_x0(Vec3::new(1.0, -2.0, 0.5));
    let obs = [Observable::Momentum(0), Observable::Position(0), Observable::Position(1)];
    let r = statistics(&packet, &obs, &grid).unwrap();
    assert!((r.norm - 1.0).abs() < 1e-12);
    assert!((r.rows[0].dispersion - sigma * sigma).abs() < 1e-10);
    let x_disp = 1.0 / (4.0 * sigma * sigma);
    assert!((r.rows[1].dispersion - x_disp).abs() < 1e-5 * x_disp);
    assert!((r.rows[1].expectation - 1.0).abs() < 1e-6);
    assert!((r.rows[2].expectation + 2.0).abs() < 1e-6);
    assert!((r.rows[0].uncertainty * r.rows[1].uncertainty - 0.5).abs() < 1e-5);
}

#[test]
fn cone_filter_on_isotropic_packet() {
    let iso = make_isotropic(1.0, 2.0, 1.0).unwrap();
    let packet = iso.packet(0.0, Vec3::zeros()).unwrap();
    let n = Vec3::new(2.0, -1.0, 2.0) / 3.0;
    let f = cone_filter(&packet, n, 0.02).unwrap();
    assert!((f.kappa() - 1.0 / (4.0 * PI)).abs() < 1e-12);
    let r = f.radial_statistics();
    assert!((r.momentum.expectation - 2.0).abs() < 1e-10);
    assert!((r.momentum.dispersion - 1.0).abs() < 1e-10);
    assert!((r.energy.expectation - iso.mean_energy().unwrap()).abs() < 1e-10);
    assert!((f.momentum_vector() - n * 2.0).norm() < 1e-10);
    assert!(matches!(cone_filter(&packet, Vec3::new(1.0, 1.0, 0.0), 0.02), Err(Error::NotUnitVector(_))));
}

#[test]
fn figure_curves_approach_their_limits() {
    let one = figure_data(Figure::Energy, 1.0, 7.0, 60, 1.0).unwrap();
    let two = figure_data(Figure::Velocity, 1.0, 7.0, 60, 1.0).unwrap();
    for w in one.rows.windows(2) {
        assert!(w[1][1] < w[0][1] && w[1][1] > 1.0);
        assert!(w[1][2] > w[0][2] && w[1][2] < 1.0);
    }
    for w in two.rows.windows(2) {
        assert!(w[1][1] > w[0][1] && w[1][1] < 1.0);
        assert!(w[1][2] > 0.0);
    }
    let last = two.rows.last().unwrap();
    assert!(last[2] < two.rows[0][2] * 1e-2);
    assert!(figure_data(Figure::Energy, 0.5, 7.0, 10, 1.0).is_err());
}
