//! Closed forms of the oscillating particle-antiparticle kernels.
//!
//! Every kernel is K(t, p) = e^{2iE(p)t}K(0, p) with K(0, p) built from
//! ξ_σ†(p)σ_jη_σ'(-p) or ξ_σ†(p)η_σ'(-p).

use crate::algebra::{
    gamma5, gammas, levi_civita, pauli, theta_tensor, theta_tensor_inverse, ComplexMatrix2, Momentum, C64, I,
};
use crate::error::{Error, Result};
use crate::operators::FourierOperator;
use crate::polarization::PolarizationBasis;

use super::matrix_elements_offdiag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    /// Position offset δX̂.
    DeltaX,
    /// Axial current 2s_i = -γ⁰γ⁵γ^i.
    AxialCurrent,
    /// Foldy-Wouthuysen generators -iγ^i.
    FwGenerator,
    /// Scalar charge γ⁰.
    ScalarCharge,
    /// Pseudoscalar γ⁰γ⁵.
    Pseudoscalar,
    /// Chakrabarti spin l_p s l_p⁻¹.
    Chakrabarti,
}

pub const KERNEL_NAMES: [&str; 6] = [
    "delta_x_osc",
    "axial_current_osc",
    "fw_generator_osc",
    "scalar_charge_osc",
    "pseudoscalar_osc",
    "chakrabarti_osc",
];

impl KernelKind {
    pub const ALL: [KernelKind; 6] = [
        KernelKind::DeltaX,
        KernelKind::AxialCurrent,
        KernelKind::FwGenerator,
        KernelKind::ScalarCharge,
        KernelKind::Pseudoscalar,
        KernelKind::Chakrabarti,
    ];

    pub fn from_name(name: &str) -> Result<Self> {
        KERNEL_NAMES
            .iter()
            .position(|n| *n == name)
            .map(|i| Self::ALL[i])
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn name(self) -> &'static str {
        KERNEL_NAMES[Self::ALL.iter().position(|k| *k == self).unwrap_or(0)]
    }

    pub fn components(self) -> usize {
        match self {
            KernelKind::ScalarCharge | KernelKind::Pseudoscalar => 1,
            _ => 3,
        }
    }

    /// The 4×4 Fourier transform whose off-diagonal part the kernel is.
    pub fn parent(self, component: usize) -> Result<FourierOperator> {
        if component >= self.components() {
            return Err(Error::IndexOutOfRange(component));
        }
        let g = gammas();
        let i = component;
        Ok(match self {
            KernelKind::DeltaX => FourierOperator::PositionOffset(i),
            KernelKind::AxialCurrent => FourierOperator::Constant(-(g[0] * gamma5() * g[i + 1])),
            KernelKind::FwGenerator => FourierOperator::Constant(g[i + 1] * (-I)),
            KernelKind::ScalarCharge => FourierOperator::Constant(g[0]),
            KernelKind::Pseudoscalar => FourierOperator::Constant(g[0] * gamma5()),
            KernelKind::Chakrabarti => FourierOperator::ChakrabartiSpin(i),
        })
    }
}

/// One component of a named oscillating kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatingKernel {
    kind: KernelKind,
    component: usize,
    basis: PolarizationBasis,
}

impl OscillatingKernel {
    pub fn new(kind: KernelKind, component: usize, basis: PolarizationBasis) -> Result<Self> {
        kind.parent(component)?;
        Ok(Self { kind, component, basis })
    }

    /// All components of a kernel given by name.
    pub fn by_name(name: &str, basis: PolarizationBasis) -> Result<Vec<Self>> {
        let kind = KernelKind::from_name(name)?;
        (0..kind.components()).map(|c| Self::new(kind, c, basis)).collect()
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    pub fn component(&self) -> usize {
        self.component
    }

    pub fn name(&self) -> String {
        if self.kind.components() == 1 {
            self.kind.name().to_string()
        } else {
            format!("{}[{}]", self.kind.name(), self.component + 1)
        }
    }

    pub fn frequency(&self, q: &Momentum) -> f64 {
        2.0 * q.energy()
    }

    /// Closed form K(t, p).
    pub fn eval(&self, q: &Momentum, t: f64) -> Result<ComplexMatrix2> {
        let x = self.basis.xi_matrix(q)?;
        let y = self.basis.eta_matrix(&q.flipped())?;
        let base: [ComplexMatrix2; 3] = std::array::from_fn(|j| x.adjoint() * pauli(j) * y);
        let (e, m, p) = (q.energy(), q.mass(), q.p());
        let i = self.component;
        let cross = || {
            let mut acc = ComplexMatrix2::zeros();
            for j in 0..3 {
                for k in 0..3 {
                    acc += base[k] * C64::from(levi_civita(i, j, k) * p[j]);
                }
            }
            acc
        };
        let k0 = match self.kind {
            KernelKind::DeltaX => {
                let t = theta_tensor_inverse(q);
                let v = (0..3).fold(ComplexMatrix2::zeros(), |a, j| a + base[j] * C64::from(t[(i, j)]));
                v * (-I / (2.0 * e))
            }
            KernelKind::AxialCurrent => cross() * (I / e),
            KernelKind::FwGenerator => {
                let t = theta_tensor(q);
                let v = (0..3).fold(ComplexMatrix2::zeros(), |a, j| a + base[j] * C64::from(t[(i, j)]));
                v * (I * (m / e))
            }
            KernelKind::ScalarCharge => {
                (0..3).fold(ComplexMatrix2::zeros(), |a, j| a + base[j] * C64::from(p[j] / e))
            }
            KernelKind::Pseudoscalar => -(x.adjoint() * y),
            KernelKind::Chakrabarti => cross() * (I / m),
        };
        Ok(k0 * (I * (self.frequency(q) * t)).exp())
    }

    /// The same kernel from the general off-diagonal matrix elements of its parent.
    pub fn from_parent(&self, q: &Momentum, t: f64) -> Result<ComplexMatrix2> {
        let parent = self.kind.parent(self.component)?;
        Ok(matrix_elements_offdiag(&parent, q, t, &self.basis)?.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{max_abs, spin_matrix};
    use crate::associated::matrix_elements_diag;
    use crate::sampling::MomentumSampler;

    fn bases() -> [PolarizationBasis; 2] {
        [PolarizationBasis::momentum_spin(), PolarizationBasis::Helicity]
    }

    #[test]
    fn closed_forms_match_parents() {
        for q in MomentumSampler::new(41, 1.0).sample_n(30) {
            for b in bases() {
                for name in KERNEL_NAMES {
                    for k in OscillatingKernel::by_name(name, b).unwrap() {
                        let a = k.eval(&q, 0.8).unwrap();
                        let c = k.from_parent(&q, 0.8).unwrap();
                        let scale = 1.0 + max_abs(&a);
                        assert!(max_abs(&(a - c)) < 1e-10 * scale, "{} {:?}", k.name(), b);
                    }
                }
            }
        }
    }

    #[test]
    fn axial_parent_is_twice_spin() {
        for i in 0..3 {
            let FourierOperator::Constant(m) = KernelKind::AxialCurrent.parent(i).unwrap() else { panic!() };
            assert!(max_abs(&(m - spin_matrix(i) * C64::from(2.0))) < 1e-15);
        }
    }

    #[test]
    fn pseudoscalar_has_no_diagonal_part() {
        let parent = KernelKind::Pseudoscalar.parent(0).unwrap();
        for q in MomentumSampler::new(42, 1.0).sample_n(20) {
            for b in bases() {
                let (p, c) = matrix_elements_diag(&parent, &q, &b).unwrap();
                assert!(max_abs(&p) < 1e-12 && max_abs(&c) < 1e-12);
            }
        }
    }

    #[test]
    fn axial_charge_kernel() {
        let parent = FourierOperator::Constant(gamma5());
        for q in MomentumSampler::new(43, 1.0).sample_n(20) {
            let b = PolarizationBasis::momentum_spin();
            let t = 0.25;
            let (k, _) = matrix_elements_offdiag(&parent, &q, t, &b).unwrap();
            let x = b.xi_matrix(&q).unwrap();
            let y = b.eta_matrix(&q.flipped()).unwrap();
            let phase = (I * (2.0 * q.energy() * t)).exp();
            let want = x.adjoint() * y * (phase * (-q.mass() / q.energy()));
            assert!(max_abs(&(k - want)) < 1e-12);
        }
    }

    #[test]
    fn modulus_is_time_independent() {
        let q = Momentum::from_components(0.4, -0.3, 1.1, 1.0).unwrap();
        let k = OscillatingKernel::new(KernelKind::DeltaX, 2, PolarizationBasis::Helicity).unwrap();
        let a = k.eval(&q, 0.0).unwrap();
        for t in [0.3, 1.7, -4.0] {
            let b = k.eval(&q, t).unwrap();
            assert!((a.norm() - b.norm()).abs() < 1e-14);
        }
        assert!(OscillatingKernel::by_name("nope", PolarizationBasis::Helicity).is_err());
        assert!(OscillatingKernel::new(KernelKind::ScalarCharge, 1, PolarizationBasis::Helicity).is_err());
        assert_eq!(KernelKind::from_name("chakrabarti_osc").unwrap(), KernelKind::Chakrabarti);
    }
}
