use crate::algebra::{Momentum, Vec3};
use crate::error::{Error, Result};

use super::g_integral::half_line_integral;
use super::profile::PacketProfile;

/// Packet seen through a small cone of solid angle ΔΩ around `n`.
///
/// Inside the cone the profile is replaced by its value along `n`, which leaves
/// the one-dimensional radial profile φ′(p) = pφ(np)/√κ.
#[derive(Debug, Clone)]
pub struct ConeFilter {
    profile: PacketProfile,
    direction: Vec3,
    d_omega: f64,
    kappa: f64,
    scale: f64,
}

/// Mean and dispersion of one radial observable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialMoment {
    pub expectation: f64,
    pub dispersion: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialStatistics {
    pub momentum: RadialMoment,
    pub velocity: RadialMoment,
    pub energy: RadialMoment,
}

pub fn cone_filter(profile: &PacketProfile, n: Vec3, d_omega: f64) -> Result<ConeFilter> {
    if ((n.norm() - 1.0).abs()) > 1e-12 {
        return Err(Error::NotUnitVector(n.norm()));
    }
    if !(d_omega > 0.0 && d_omega <= 4.0 * std::f64::consts::PI) {
        return Err(Error::InvalidParameter(format!("solid angle {d_omega}")));
    }
    profile.basis().direction(&Momentum::new(n, profile.mass())?)?;
    let scale = profile.p_max() / 8.0;
    let (kappa, _) = half_line_integral(|p| p * p * profile.phi(&(n * p)).powi(2), scale);
    if kappa.is_nan() || kappa <= 0.0 {
        return Err(Error::VanishingProfile);
    }
    Ok(ConeFilter { profile: profile.clone(), direction: n, d_omega, kappa, scale })
}

impl ConeFilter {
    /// κ = ∫_0^∞ p²φ(np)² dp.
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn direction(&self) -> &Vec3 {
        &self.direction
    }

    pub fn solid_angle(&self) -> f64 {
        self.d_omega
    }

    /// Detection probability P_Δ = |ΔΩ·κ|².
    pub fn probability(&self) -> f64 {
        (self.d_omega * self.kappa).powi(2)
    }

    /// φ′(p) = pφ(np)/√κ.
    pub fn radial_profile(&self, p: f64) -> f64 {
        p * self.profile.phi(&(self.direction * p)) / self.kappa.sqrt()
    }

    /// ∫_0^∞ φ′(p)² f(p) dp.
    pub fn radial_integral<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        half_line_integral(|p| self.radial_profile(p).powi(2) * f(p), self.scale).0
    }

    fn moment<F: Fn(f64) -> f64>(&self, f: F) -> RadialMoment {
        let mean = self.radial_integral(&f);
        let square = self.radial_integral(|p| f(p).powi(2));
        RadialMoment { expectation: mean, dispersion: square - mean * mean }
    }

    pub fn radial_statistics(&self) -> RadialStatistics {
        let m2 = self.profile.mass().powi(2);
        RadialStatistics {
            momentum: self.moment(|p| p),
            velocity: self.moment(|p| p / (p * p + m2).sqrt()),
            energy: self.moment(|p| (p * p + m2).sqrt()),
        }
    }

    /// ⟨P^i⟩′ = n^i⟨P⟩′.
    pub fn momentum_vector(&self) -> Vec3 {
        self.direction * self.radial_integral(|p| p)
    }

    /// disp(X^i)′ = (1/κ)∫p²(∂_iφ)²|_{np} dp.
    pub fn position_dispersion(&self) -> Result<[f64; 3]> {
        let n = self.direction;
        // The gradient either always exists or never does.
        self.profile.grad_phi(&n)?;
        let mut out = [0.0; 3];
        for (i, slot) in out.iter_mut().enumerate() {
            let f = |p: f64| {
                let g = self.profile.grad_phi(&(n * p)).map_or(0.0, |g| g[i]);
                p * p * g * g
            };
            *slot = half_line_integral(f, self.scale).0 / self.kappa;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::packet::make_isotropic;
    use std::f64::consts::PI;

    #[test]
    fn isotropic_filter_matches_unfiltered_radial_statistics() {
        let iso = make_isotropic(1.0, 2.0, 1.0).unwrap();
        let packet = iso.packet(0.2, Vec3::new(1.0, 0.0, 0.0)).unwrap();
        let n = Vec3::new(1.0, 2.0, -2.0) / 3.0;
        let f = cone_filter(&packet, n, 0.05).unwrap();
        assert!((f.kappa() - 1.0 / (4.0 * PI)).abs() < 1e-12);
        assert!((f.radial_integral(|_| 1.0) - 1.0).abs() < 1e-12);
        assert!((f.probability() - (0.05 / (4.0 * PI)).powi(2)).abs() < 1e-15);
        let r = f.radial_statistics();
        assert!((r.momentum.expectation - 2.0).abs() < 1e-10);
        assert!((r.momentum.dispersion - 1.0).abs() < 1e-10);
        assert!((r.energy.expectation - iso.mean_energy().unwrap()).abs() < 1e-10);
        assert!((r.energy.dispersion - iso.energy_dispersion().unwrap()).abs() < 1e-10);
        assert!((r.velocity.expectation - iso.mean_velocity().unwrap()).abs() < 1e-12);
        assert!((r.velocity.dispersion - iso.velocity_dispersion().unwrap()).abs() < 1e-12);
        let pv = f.momentum_vector();
        assert!((pv - n * 2.0).norm() < 1e-10);
        let dx = f.position_dispersion().unwrap();
        let total: f64 = dx.iter().sum();
        assert!((total - 3.0 * iso.position_dispersion()).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_input() {
        let iso = make_isotropic(1.0, 2.0, 1.0).unwrap();
        let packet = iso.packet(0.0, Vec3::zeros()).unwrap();
        assert!(matches!(cone_filter(&packet, Vec3::new(1.0, 1.0, 0.0), 0.1), Err(Error::NotUnitVector(_))));
        assert!(cone_filter(&packet, Vec3::z(), 0.0).is_err());
        let hollow = PacketProfile::new(1.0, 5.0, |p| if p.z > 0.0 { 0.0 } else { 1.0 }).unwrap();
        assert_eq!(cone_filter(&hollow, Vec3::z(), 0.1).err(), Some(Error::VanishingProfile));
    }
}
