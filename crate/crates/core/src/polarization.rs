//! Polarization spinors for common (fixed direction) and helicity bases,
//! together with the Σ matrices and the Ω connection they induce.
//!
//! Row and column 0 correspond to σ = +½.

use crate::algebra::{pauli, sigma_dot, ComplexMatrix2, Conventions, Momentum, PauliSpinor, Vec3, C64, I};
use crate::error::{Error, Result};
use crate::numeric::central_difference;

/// Polarization label σ = ±½.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub const BOTH: [Spin; 2] = [Spin::Up, Spin::Down];

    pub fn value(self) -> f64 {
        match self {
            Spin::Up => 0.5,
            Spin::Down => -0.5,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Spin::Up => 0,
            Spin::Down => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Spin> {
        match i {
            0 => Some(Spin::Up),
            1 => Some(Spin::Down),
            _ => None,
        }
    }
}

fn spinor_along(n: &Vec3, sigma: Spin) -> PauliSpinor {
    // 1 + n_z without cancellation near the south pole
    let d = if n.z >= 0.0 { 1.0 + n.z } else { (n.x * n.x + n.y * n.y) / (1.0 - n.z) };
    let f = (d / 2.0).sqrt();
    match sigma {
        Spin::Up => PauliSpinor::new(C64::from(f), C64::new(n.x, n.y) * (f / d)),
        Spin::Down => PauliSpinor::new(C64::new(-n.x, n.y) * (f / d), C64::from(f)),
    }
}

fn pole(p: &Vec3) -> Error {
    Error::Pole([p.x, p.y, p.z])
}

/// ξ_σ(n) for a unit vector `n`.
pub fn common_spinor(n: &Vec3, sigma: Spin) -> Result<PauliSpinor> {
    let norm = n.norm();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::NotUnitVector(norm));
    }
    if 1.0 + n.z <= Conventions::POLE_EPS {
        return Err(pole(n));
    }
    Ok(spinor_along(n, sigma))
}

/// η = iσ₂ξ*.
pub fn conjugate_spinor(xi: &PauliSpinor) -> PauliSpinor {
    PauliSpinor::new(xi[1].conj(), -xi[0].conj())
}

fn check_helicity_chart(p: &Vec3) -> Result<f64> {
    let norm = p.norm();
    if norm == 0.0 {
        return Err(Error::ZeroMomentum);
    }
    if norm + p.z <= Conventions::POLE_EPS * norm {
        return Err(pole(p));
    }
    Ok(norm)
}

/// ξ_σ(p/|p|).
pub fn helicity_spinor(q: &Momentum, sigma: Spin) -> Result<PauliSpinor> {
    let norm = check_helicity_chart(q.p())?;
    Ok(spinor_along(&(q.p() / norm), sigma))
}

fn columns(a: &PauliSpinor, b: &PauliSpinor) -> ComplexMatrix2 {
    ComplexMatrix2::from_columns(&[*a, *b])
}

/// A polarization basis: common (fixed direction `n`) or helicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolarizationBasis {
    Common { n: Vec3 },
    Helicity,
}

impl Default for PolarizationBasis {
    fn default() -> Self {
        Self::momentum_spin()
    }
}

impl PolarizationBasis {
    /// Common basis along e₃.
    pub fn momentum_spin() -> Self {
        Self::Common { n: Vec3::z() }
    }

    pub fn common(n: Vec3) -> Result<Self> {
        common_spinor(&n, Spin::Up)?;
        Ok(Self::Common { n })
    }

    pub fn is_common(&self) -> bool {
        matches!(self, Self::Common { .. })
    }

    /// Direction along which polarization is measured at `q`.
    pub fn direction(&self, q: &Momentum) -> Result<Vec3> {
        match self {
            Self::Common { n } => Ok(*n),
            Self::Helicity => Ok(q.p() / check_helicity_chart(q.p())?),
        }
    }

    pub fn xi(&self, q: &Momentum, sigma: Spin) -> Result<PauliSpinor> {
        match self {
            Self::Common { n } => common_spinor(n, sigma),
            Self::Helicity => helicity_spinor(q, sigma),
        }
    }

    pub fn eta(&self, q: &Momentum, sigma: Spin) -> Result<PauliSpinor> {
        Ok(conjugate_spinor(&self.xi(q, sigma)?))
    }

    /// Matrix with columns ξ_{+½}, ξ_{-½}.
    pub fn xi_matrix(&self, q: &Momentum) -> Result<ComplexMatrix2> {
        Ok(columns(&self.xi(q, Spin::Up)?, &self.xi(q, Spin::Down)?))
    }

    /// Matrix with columns η_{+½}, η_{-½}.
    pub fn eta_matrix(&self, q: &Momentum) -> Result<ComplexMatrix2> {
        Ok(columns(&self.eta(q, Spin::Up)?, &self.eta(q, Spin::Down)?))
    }

    /// Σ_i = ξ†σ_iξ. The helicity basis uses its closed form.
    pub fn sigma_matrices(&self, q: &Momentum) -> Result<[ComplexMatrix2; 3]> {
        match self {
            Self::Common { .. } => self.sigma_from_spinors(q),
            Self::Helicity => helicity_sigma(q.p()),
        }
    }

    /// Σ_i by direct contraction of the spinors.
    pub fn sigma_from_spinors(&self, q: &Momentum) -> Result<[ComplexMatrix2; 3]> {
        let x = self.xi_matrix(q)?;
        Ok([0, 1, 2].map(|i| x.adjoint() * pauli(i) * x))
    }

    /// Ω_i = ξ†∂_iξ. Zero for common bases, closed form for helicity.
    pub fn omega_connection(&self, q: &Momentum) -> Result<[ComplexMatrix2; 3]> {
        match self {
            Self::Common { n } => {
                common_spinor(n, Spin::Up)?;
                Ok([ComplexMatrix2::zeros(); 3])
            }
            Self::Helicity => helicity_omega(q.p()),
        }
    }

    /// Ω_i from fourth-order central differences of ξ, step 1e-4·max(|p|, m).
    pub fn omega_connection_fd(&self, q: &Momentum) -> Result<[ComplexMatrix2; 3]> {
        let x = self.xi_matrix(q)?;
        let h = 1e-4 * q.magnitude().max(q.mass());
        let mut out = [ComplexMatrix2::zeros(); 3];
        for (i, slot) in out.iter_mut().enumerate() {
            let d = central_difference(
                |t| {
                    let mut p = *q.p();
                    p[i] += t;
                    self.xi_matrix(&q.with_p(p))
                },
                0.0,
                h,
            )?;
            *slot = x.adjoint() * d;
        }
        Ok(out)
    }
}

/// Closed-form helicity Σ matrices.
pub fn helicity_sigma(p: &Vec3) -> Result<[ComplexMatrix2; 3]> {
    let norm = check_helicity_chart(p)?;
    let (p1, p2, p3) = (p.x, p.y, p.z);
    let s = [pauli(0), pauli(1), pauli(2)];
    let transverse = s[0] * C64::from(p1) + s[1] * C64::from(p2);
    let d = norm * (norm + p3);
    Ok([
        s[2] * C64::from(p1 / norm) - transverse * C64::from(p1 / d) + s[0],
        s[2] * C64::from(p2 / norm) - transverse * C64::from(p2 / d) + s[1],
        s[2] * C64::from(p3 / norm) - transverse * C64::from(1.0 / norm),
    ])
}

/// Closed-form helicity connection Ω_i.
pub fn helicity_omega(p: &Vec3) -> Result<[ComplexMatrix2; 3]> {
    let norm = check_helicity_chart(p)?;
    let (p1, p2, p3) = (p.x, p.y, p.z);
    let s = [pauli(0), pauli(1), pauli(2)];
    let c = 1.0 / (2.0 * norm * norm * (norm + p3));
    let o1 = (s[0] * C64::from(p1 * p2)
        + s[2] * C64::from(norm * p2)
        + s[1] * C64::from(norm * p3 + p2 * p2 + p3 * p3))
        * (-I * c);
    let o2 = (s[1] * C64::from(p1 * p2)
        + s[2] * C64::from(norm * p1)
        + s[0] * C64::from(norm * p3 + p1 * p1 + p3 * p3))
        * (I * c);
    let o3 = (s[1] * C64::from(p1) - s[0] * C64::from(p2)) * (I / (2.0 * norm * norm));
    Ok([o1, o2, o3])
}

/// Σ_σ 2σ ξ_σξ_σ†; equals n·σ for ξ and -n·σ for η.
pub fn polarization_sum(a: &ComplexMatrix2) -> ComplexMatrix2 {
    let up = a.column(0);
    let down = a.column(1);
    up * up.adjoint() - down * down.adjoint()
}

/// n·σ.
pub fn direction_matrix(n: &Vec3) -> ComplexMatrix2 {
    sigma_dot(n)
}
