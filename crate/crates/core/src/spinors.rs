//! Rest-frame and boosted Dirac spinors and the plane-wave mode spinors U, V.

use std::f64::consts::PI;

use crate::algebra::{
    boost_for_momentum, charge_conjugation, gammas, ComplexMatrix4, DiracSpinor, Momentum, PauliSpinor, Vec3,
    C64,
};
use crate::error::Result;
use crate::polarization::{PolarizationBasis, Spin};

fn stack(a: &PauliSpinor, b: &PauliSpinor) -> DiracSpinor {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    DiracSpinor::new(a[0] * r, a[1] * r, b[0] * r, b[1] * r)
}

/// n(p) = sqrt(m/E(p)).
pub fn normalization(q: &Momentum) -> f64 {
    (q.mass() / q.energy()).sqrt()
}

/// (ů_σ(p), v̊_σ(p)) = ((ξ, ξ)/√2, (η, -η)/√2).
pub fn rest_spinors(
    basis: &PolarizationBasis,
    q: &Momentum,
    sigma: Spin,
) -> Result<(DiracSpinor, DiracSpinor)> {
    let xi = basis.xi(q, sigma)?;
    let eta = basis.eta(q, sigma)?;
    Ok((stack(&xi, &xi), stack(&eta, &(-eta))))
}

/// u_σ(p) = n(p) l_p ů_σ(p).
pub fn u_spinor(basis: &PolarizationBasis, q: &Momentum, sigma: Spin) -> Result<DiracSpinor> {
    let (u0, _) = rest_spinors(basis, q, sigma)?;
    Ok(boost_for_momentum(q) * u0 * C64::from(normalization(q)))
}

/// v_σ(p) = C u_σ(p)*.
pub fn v_spinor(basis: &PolarizationBasis, q: &Momentum, sigma: Spin) -> Result<DiracSpinor> {
    Ok(charge_conjugation() * u_spinor(basis, q, sigma)?.conjugate())
}

/// v_σ(p) built as n(p) l_p v̊_σ(p).
pub fn v_spinor_boosted(basis: &PolarizationBasis, q: &Momentum, sigma: Spin) -> Result<DiracSpinor> {
    let (_, v0) = rest_spinors(basis, q, sigma)?;
    Ok(boost_for_momentum(q) * v0 * C64::from(normalization(q)))
}

/// γ^μ p_μ = Eγ⁰ - γ^i p^i.
pub fn slash(q: &Momentum) -> ComplexMatrix4 {
    let g = gammas();
    let p = q.p();
    g[0] * C64::from(q.energy()) - g[1] * C64::from(p.x) - g[2] * C64::from(p.y) - g[3] * C64::from(p.z)
}

/// (Σ_σ u_σ(p)u_σ(p)†, Σ_σ v_σ(-p)v_σ(-p)†), which reproduce Π̂₊(p) and Π̂₋(p).
pub fn projector_from_spinors(
    basis: &PolarizationBasis,
    q: &Momentum,
) -> Result<(ComplexMatrix4, ComplexMatrix4)> {
    let minus = q.flipped();
    let mut plus_sum = ComplexMatrix4::zeros();
    let mut minus_sum = ComplexMatrix4::zeros();
    for sigma in Spin::BOTH {
        let u = u_spinor(basis, q, sigma)?;
        let v = v_spinor(basis, &minus, sigma)?;
        plus_sum += u * u.adjoint();
        minus_sum += v * v.adjoint();
    }
    Ok((plus_sum, minus_sum))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Species {
    Particle,
    Antiparticle,
}

/// Plane-wave mode spinor U_{p,σ} or V_{p,σ}.
#[derive(Debug, Clone, Copy)]
pub struct ModeSpinorField {
    q: Momentum,
    sigma: Spin,
    species: Species,
    amplitude: DiracSpinor,
}

impl ModeSpinorField {
    pub fn new(basis: PolarizationBasis, q: Momentum, sigma: Spin, species: Species) -> Result<Self> {
        let amplitude = match species {
            Species::Particle => u_spinor(&basis, &q, sigma)?,
            Species::Antiparticle => v_spinor(&basis, &q, sigma)?,
        };
        Ok(Self { q, sigma, species, amplitude })
    }

    pub fn momentum(&self) -> &Momentum {
        &self.q
    }

    pub fn spin(&self) -> Spin {
        self.sigma
    }

    pub fn species(&self) -> Species {
        self.species
    }

    /// Value at (t, x), including the (2π)^{-3/2} factor.
    pub fn evaluate(&self, t: f64, x: &Vec3) -> DiracSpinor {
        let phase = -self.q.energy() * t + self.q.p().dot(x);
        let sign = match self.species {
            Species::Particle => 1.0,
            Species::Antiparticle => -1.0,
        };
        let factor = C64::from_polar((2.0 * PI).powf(-1.5), sign * phase);
        self.amplitude * factor
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{max_abs, I};
    use crate::sampling::MomentumSampler;

    fn bases() -> [PolarizationBasis; 2] {
        [PolarizationBasis::momentum_spin(), PolarizationBasis::Helicity]
    }

    #[test]
    fn rest_spinor_sums_are_projectors() {
        let g0 = gammas()[0];
        let one = ComplexMatrix4::identity();
        let k = Momentum::from_components(0.3, -0.4, 1.2, 1.0).unwrap();
        for b in bases() {
            let mut su = ComplexMatrix4::zeros();
            let mut sv = ComplexMatrix4::zeros();
            for s in Spin::BOTH {
                let (u0, v0) = rest_spinors(&b, &k, s).unwrap();
                assert!((g0 * u0 - u0).norm() < 1e-15);
                assert!((g0 * v0 + v0).norm() < 1e-15);
                su += u0 * u0.adjoint();
                sv += v0 * v0.adjoint();
            }
            assert!(max_abs(&(su - (one + g0) * C64::from(0.5))) < 1e-15);
            assert!(max_abs(&(sv - (one - g0) * C64::from(0.5))) < 1e-15);
        }
        let (u0, _) = rest_spinors(&PolarizationBasis::momentum_spin(), &k, Spin::Up).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!(
            (u0 - DiracSpinor::new(C64::from(r), C64::from(0.0), C64::from(r), C64::from(0.0))).norm()
                < 1e-15
        );
    }

    #[test]
    fn dirac_equation_and_normalization() {
        let mut s = MomentumSampler::new(21, 1.0);
        for k in s.sample_n(100) {
            let d = slash(&k);
            let m = ComplexMatrix4::identity() * C64::from(k.mass());
            for b in bases() {
                for sigma in Spin::BOTH {
                    let u = u_spinor(&b, &k, sigma).unwrap();
                    let v = v_spinor(&b, &k, sigma).unwrap();
                    assert!(((d - m) * u).norm() < 1e-12);
                    assert!(((d + m) * v).norm() < 1e-12);
                    assert!((v - v_spinor_boosted(&b, &k, sigma).unwrap()).norm() < 1e-13);
                    let back = charge_conjugation() * v.conjugate();
                    assert!((back - u).norm() < 1e-15);
                    for tau in Spin::BOTH {
                        let u2 = u_spinor(&b, &k, tau).unwrap();
                        let expected = if sigma == tau { 1.0 } else { 0.0 };
                        assert!((u.dotc(&u2) - C64::from(expected)).norm() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn rest_frame_normalization() {
        let k = Momentum::at_rest(2.5).unwrap();
        assert_eq!(normalization(&k), 1.0);
        let b = PolarizationBasis::momentum_spin();
        let (u0, _) = rest_spinors(&b, &k, Spin::Down).unwrap();
        assert!((u_spinor(&b, &k, Spin::Down).unwrap() - u0).norm() < 1e-15);
    }

    #[test]
    fn mode_phases() {
        let k = Momentum::from_components(0.5, 0.0, 0.2, 1.0).unwrap();
        let b = PolarizationBasis::momentum_spin();
        let u = ModeSpinorField::new(b, k, Spin::Up, Species::Particle).unwrap();
        let v = ModeSpinorField::new(b, k, Spin::Up, Species::Antiparticle).unwrap();
        let x = Vec3::new(0.3, 1.0, -2.0);
        let t = 0.7;
        let phase = C64::from_polar(1.0, -k.energy() * t + k.p().dot(&x));
        let norm = C64::from((2.0 * PI).powf(-1.5));
        let u_ref = u_spinor(&b, &k, Spin::Up).unwrap() * phase * norm;
        let v_ref = v_spinor(&b, &k, Spin::Up).unwrap() * phase.conj() * norm;
        assert!((u.evaluate(t, &x) - u_ref).norm() < 1e-15);
        assert!((v.evaluate(t, &x) - v_ref).norm() < 1e-15);
        let dt = 1e-6;
        let deriv = (u.evaluate(t + dt, &x) - u.evaluate(t - dt, &x)) / C64::from(2.0 * dt);
        assert!((deriv - u.evaluate(t, &x) * (-I * k.energy())).norm() < 1e-8);
    }

    #[test]
    fn pole_errors_propagate() {
        let k = Momentum::from_components(0.0, 0.0, -1.0, 1.0).unwrap();
        assert!(u_spinor(&PolarizationBasis::Helicity, &k, Spin::Up).is_err());
    }
}
