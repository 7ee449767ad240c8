use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use statrs::function::gamma::{gamma_ur, ln_gamma};

use crate::algebra::{Momentum, PauliSpinor, Vec3, C64, I};
use crate::associated::WaveSpinor;
use crate::error::{Error, Result};
use crate::polarization::PolarizationBasis;

use super::grid::{QuadratureGrid, DEFAULT_AZIMUTH, DEFAULT_POLAR, DEFAULT_RADIAL};

type ScalarFn = Arc<dyn Fn(&Vec3) -> f64 + Send + Sync>;
type GradFn = Arc<dyn Fn(&Vec3) -> Vec3 + Send + Sync>;

/// Relative step of the finite-difference fallback for ∇φ.
const FD_STEP: f64 = 1e-3;

/// α_σ(p) = φ(p)e^{-i x₀·p}χ_σ(θ_s) with χ = (cos θ_s/2, sin θ_s/2).
#[derive(Clone)]
pub struct PacketProfile {
    phi: ScalarFn,
    grad: Option<GradFn>,
    fd_fallback: bool,
    theta_s: f64,
    x0: Vec3,
    basis: PolarizationBasis,
    mass: f64,
    p_max: f64,
    isotropic: Option<IsotropicProfile>,
}

impl fmt::Debug for PacketProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PacketProfile")
            .field("theta_s", &self.theta_s)
            .field("x0", &self.x0)
            .field("basis", &self.basis)
            .field("mass", &self.mass)
            .field("p_max", &self.p_max)
            .field("isotropic", &self.isotropic)
            .finish()
    }
}

impl PacketProfile {
    /// A profile supported (to quadrature accuracy) in the ball |p| ≤ `p_max`.
    pub fn new<F>(mass: f64, p_max: f64, phi: F) -> Result<Self>
    where
        F: Fn(&Vec3) -> f64 + Send + Sync + 'static,
    {
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::NonPositiveMass(mass));
        }
        if !(p_max > 0.0 && p_max.is_finite()) {
            return Err(Error::InvalidParameter(format!("p_max = {p_max}")));
        }
        Ok(Self {
            phi: Arc::new(phi),
            grad: None,
            fd_fallback: false,
            theta_s: 0.0,
            x0: Vec3::zeros(),
            basis: PolarizationBasis::momentum_spin(),
            mass,
            p_max,
            isotropic: None,
        })
    }

    pub fn with_gradient<G>(mut self, grad: G) -> Self
    where
        G: Fn(&Vec3) -> Vec3 + Send + Sync + 'static,
    {
        self.grad = Some(Arc::new(grad));
        self
    }

    /// Allows ∇φ by central differences when no analytic gradient is given.
    pub fn with_fd_gradient(mut self) -> Self {
        self.fd_fallback = true;
        self
    }

    pub fn with_theta_s(mut self, theta_s: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta_s) {
            return Err(Error::InvalidParameter(format!("theta_s = {theta_s} outside [0, pi]")));
        }
        self.theta_s = theta_s;
        Ok(self)
    }

    pub fn with_x0(mut self, x0: Vec3) -> Self {
        self.x0 = x0;
        self
    }

    pub fn with_basis(mut self, basis: PolarizationBasis) -> Self {
        self.basis = basis;
        self
    }

    pub fn theta_s(&self) -> f64 {
        self.theta_s
    }

    pub fn x0(&self) -> &Vec3 {
        &self.x0
    }

    pub fn basis(&self) -> &PolarizationBasis {
        &self.basis
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn p_max(&self) -> f64 {
        self.p_max
    }

    pub fn isotropic(&self) -> Option<&IsotropicProfile> {
        self.isotropic.as_ref()
    }

    pub fn has_gradient(&self) -> bool {
        self.grad.is_some() || self.fd_fallback
    }

    pub fn phi(&self, p: &Vec3) -> f64 {
        (self.phi)(p)
    }

    pub fn grad_phi(&self, p: &Vec3) -> Result<Vec3> {
        if let Some(g) = &self.grad {
            return Ok(g(p));
        }
        if !self.fd_fallback {
            return Err(Error::MissingGradient("grad phi".into()));
        }
        let h = FD_STEP * p.norm().max(self.mass);
        let mut out = Vec3::zeros();
        for i in 0..3 {
            let at = |t: f64| {
                let mut q = *p;
                q[i] += t;
                (self.phi)(&q)
            };
            let d = |h: f64| (8.0 * (at(h) - at(-h)) - (at(2.0 * h) - at(-2.0 * h))) / (12.0 * h);
            out[i] = (16.0 * d(0.5 * h) - d(h)) / 15.0;
        }
        Ok(out)
    }

    pub fn polarization_spinor(&self) -> PauliSpinor {
        let h = 0.5 * self.theta_s;
        PauliSpinor::new(C64::from(h.cos()), C64::from(h.sin()))
    }

    /// Grid covering the profile's support.
    pub fn grid(&self, n_radial: usize, n_polar: usize, n_azimuth: usize) -> Result<QuadratureGrid> {
        let grid = QuadratureGrid::new(self.p_max, n_radial, n_polar, n_azimuth)?;
        let tail = match &self.isotropic {
            Some(iso) => iso.tail_mass(self.p_max),
            None => self.tail_estimate(),
        };
        Ok(grid.with_tail(tail))
    }

    pub fn default_grid(&self) -> Result<QuadratureGrid> {
        self.grid(DEFAULT_RADIAL, DEFAULT_POLAR, DEFAULT_AZIMUTH)
    }

    /// Mass in the shell p_max < |p| < 3p_max along the coordinate axes,
    /// extrapolated to the sphere.
    fn tail_estimate(&self) -> f64 {
        let axes = [Vec3::x(), -Vec3::x(), Vec3::y(), -Vec3::y(), Vec3::z(), -Vec3::z()];
        let (a, b) = (self.p_max, 3.0 * self.p_max);
        let n = 64;
        let h = (b - a) / n as f64;
        let mut total = 0.0;
        for k in 0..n {
            let p = a + h * (k as f64 + 0.5);
            let mean: f64 = axes.iter().map(|d| (self.phi)(&(d * p)).powi(2)).sum::<f64>() / 6.0;
            total += 4.0 * PI * p * p * mean * h;
        }
        total
    }
}

impl WaveSpinor for PacketProfile {
    fn value(&self, q: &Momentum) -> Result<PauliSpinor> {
        let p = q.p();
        let phase = C64::from_polar(self.phi(p), -self.x0.dot(p));
        Ok(self.polarization_spinor() * phase)
    }

    fn gradient(&self, q: &Momentum) -> Result<[PauliSpinor; 3]> {
        let p = q.p();
        let g = self.grad_phi(p)?;
        let phi = self.phi(p);
        let e = C64::from_polar(1.0, -self.x0.dot(p));
        let chi = self.polarization_spinor();
        Ok(std::array::from_fn(|i| chi * ((C64::from(g[i]) - I * (self.x0[i] * phi)) * e)))
    }
}

/// φ(p) = N p^{q - 3/2} e^{-γp} with q = γp̄.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsotropicProfile {
    gamma: f64,
    pbar: f64,
    mass: f64,
    ln_n: f64,
}

/// Isotropic profile with ⟨P⟩ = p̄ and disp(P) = p̄/(2γ). Requires γp̄ > 1.
pub fn make_isotropic(gamma: f64, pbar: f64, m: f64) -> Result<IsotropicProfile> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::NonPositiveMass(m));
    }
    if !(gamma > 0.0 && gamma.is_finite() && pbar > 0.0 && pbar.is_finite()) {
        return Err(Error::InvalidParameter(format!("gamma = {gamma}, pbar = {pbar}")));
    }
    let q = gamma * pbar;
    if q <= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "gamma * pbar = {q} must exceed 1 for a finite position dispersion"
        )));
    }
    let ln_n = q * (2.0 * gamma).ln() - 2f64.ln() - 0.5 * (PI.ln() + ln_gamma(2.0 * q));
    Ok(IsotropicProfile { gamma, pbar, mass: m, ln_n })
}

impl IsotropicProfile {
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn pbar(&self) -> f64 {
        self.pbar
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// q = γp̄.
    pub fn q(&self) -> f64 {
        self.gamma * self.pbar
    }

    pub fn normalization(&self) -> f64 {
        self.ln_n.exp()
    }

    /// 4πN² = (2γ)^{2q}/Γ(2q).
    pub fn four_pi_n2(&self) -> f64 {
        let q = self.q();
        (2.0 * q * (2.0 * self.gamma).ln() - ln_gamma(2.0 * q)).exp()
    }

    pub fn phi(&self, p: f64) -> f64 {
        if p <= 0.0 {
            return 0.0;
        }
        (self.ln_n + (self.q() - 1.5) * p.ln() - self.gamma * p).exp()
    }

    /// dφ/dp.
    pub fn dphi(&self, p: f64) -> f64 {
        if p <= 0.0 {
            return 0.0;
        }
        self.phi(p) * ((self.q() - 1.5) / p - self.gamma)
    }

    /// Radius where e^{-2γp} has fallen by e^{-80} past the peak.
    pub fn p_max(&self) -> f64 {
        (self.q() + 40.0) / self.gamma
    }

    /// 4π∫_{p_max}^∞ p²φ² dp.
    pub fn tail_mass(&self, p_max: f64) -> f64 {
        gamma_ur(2.0 * self.q(), 2.0 * self.gamma * p_max)
    }

    /// Packet with polarization angle θ_s and preparation point x₀ in the
    /// common e₃ basis.
    pub fn packet(&self, theta_s: f64, x0: Vec3) -> Result<PacketProfile> {
        let (a, b) = (*self, *self);
        Ok(PacketProfile::new(self.mass, self.p_max(), move |p| a.phi(p.norm()))?
            .with_gradient(move |p| {
                let r = p.norm();
                if r == 0.0 {
                    Vec3::zeros()
                } else {
                    p * (b.dphi(r) / r)
                }
            })
            .with_theta_s(theta_s)?
            .with_x0(x0)
            .with_isotropic(*self))
    }
}

impl PacketProfile {
    fn with_isotropic(mut self, iso: IsotropicProfile) -> Self {
        self.isotropic = Some(iso);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::associated::fd_gradient;
    use crate::packet::g_integral::half_line_integral;

    #[test]
    fn normalization_closed_form() {
        let iso = make_isotropic(1.0, 2.0, 1.0).unwrap();
        let (v, _) = half_line_integral(|p| 4.0 * PI * p * p * iso.phi(p).powi(2), 1.0);
        assert!((v - 1.0).abs() < 1e-10);
        let n = iso.normalization();
        let want = 4.0 / (2.0 * (PI * 6.0).sqrt());
        assert!((n - want).abs() < 1e-14);
        assert!((iso.four_pi_n2() - 4.0 * PI * n * n).abs() < 1e-13);
        let grid = iso.packet(0.0, Vec3::zeros()).unwrap().default_grid().unwrap();
        let on_grid = grid.integrate(|p| Ok(iso.phi(p.norm()).powi(2))).unwrap();
        assert!((on_grid - 1.0).abs() < 1e-12);
        assert!(grid.tail() < 1e-25);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(make_isotropic(1.0, 1.0, 1.0).is_err());
        assert!(make_isotropic(0.5, 1.5, 1.0).is_err());
        assert!(make_isotropic(-1.0, 3.0, 1.0).is_err());
        assert!(make_isotropic(1.0, 3.0, 0.0).is_err());
        let iso = make_isotropic(1.0, 2.0, 1.0).unwrap();
        assert!(iso.packet(4.0, Vec3::zeros()).is_err());
    }

    #[test]
    fn analytic_and_fd_gradients_agree() {
        let iso = make_isotropic(1.5, 1.2, 1.0).unwrap();
        let packet = iso.packet(1.0, Vec3::new(0.4, -1.0, 2.0)).unwrap();
        let fd_only = PacketProfile::new(1.0, iso.p_max(), move |p| iso.phi(p.norm()))
            .unwrap()
            .with_fd_gradient()
            .with_theta_s(1.0)
            .unwrap()
            .with_x0(Vec3::new(0.4, -1.0, 2.0));
        for p in [Vec3::new(0.3, 0.2, -0.5), Vec3::new(1.0, 2.0, 0.1)] {
            let q = Momentum::new(p, 1.0).unwrap();
            let a = packet.gradient(&q).unwrap();
            let b = fd_gradient(&packet, &q).unwrap();
            let c = fd_only.gradient(&q).unwrap();
            for i in 0..3 {
                assert!((a[i] - b[i]).norm() < 1e-9);
                assert!((a[i] - c[i]).norm() < 1e-9);
            }
        }
        let bare = PacketProfile::new(1.0, 5.0, |_| 1.0).unwrap();
        let q = Momentum::from_components(0.1, 0.0, 0.0, 1.0).unwrap();
        assert!(matches!(bare.gradient(&q), Err(Error::MissingGradient(_))));
    }
}
