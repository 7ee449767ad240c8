//! Chiral Dirac representation: gamma matrices, SL(2,C) generators,
//! rotations and boosts, Lorentz boost matrices and the Foldy-Wouthuysen
//! transformation.
//!
//! Spatial indices are zero based in code, so `pauli(0)` is σ₁.

use nalgebra::{Matrix3, Matrix4, SMatrix, SVector, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type ComplexMatrix4 = SMatrix<C64, 4, 4>;
pub type ComplexMatrix2 = SMatrix<C64, 2, 2>;
pub type DiracSpinor = SVector<C64, 4>;
pub type PauliSpinor = SVector<C64, 2>;
pub type Vec3 = Vector3<f64>;
/// Three spatial components of a 4×4 operator.
pub type SpatialOperator = [ComplexMatrix4; 3];

pub const I: C64 = C64::new(0.0, 1.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const ZERO: C64 = C64::new(0.0, 0.0);

/// Global conventions shared by every module.
#[derive(Debug, Clone, Copy)]
pub struct Conventions;

impl Conventions {
    /// Diagonal of the Minkowski metric.
    pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];
    pub const EPSILON_0123: f64 = -1.0;
    pub const HBAR: f64 = 1.0;
    pub const SPEED_OF_LIGHT: f64 = 1.0;
    /// Default tolerance for closed-form matrix identities.
    pub const IDENTITY_TOL: f64 = 1e-12;
    /// Relative distance to a chart singularity below which a pole error is raised.
    pub const POLE_EPS: f64 = 1e-9;
}

/// η^{μν} for μ, ν in 0..=3.
pub fn metric(mu: usize, nu: usize) -> f64 {
    if mu == nu {
        Conventions::METRIC[mu]
    } else {
        0.0
    }
}

/// Three dimensional Levi-Civita symbol with ε₀₁₂ = 1.
pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// A three-momentum together with the mass that fixes the energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Momentum {
    p: Vec3,
    m: f64,
}

impl Momentum {
    pub fn new(p: Vec3, m: f64) -> Result<Self> {
        if !(m > 0.0 && m.is_finite()) {
            return Err(Error::NonPositiveMass(m));
        }
        if !p.iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidParameter("momentum must be finite".into()));
        }
        Ok(Self { p, m })
    }

    pub fn from_components(px: f64, py: f64, pz: f64, m: f64) -> Result<Self> {
        Self::new(Vec3::new(px, py, pz), m)
    }

    pub fn at_rest(m: f64) -> Result<Self> {
        Self::new(Vec3::zeros(), m)
    }

    pub fn p(&self) -> &Vec3 {
        &self.p
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn magnitude(&self) -> f64 {
        self.p.norm()
    }

    pub fn energy(&self) -> f64 {
        (self.p.norm_squared() + self.m * self.m).sqrt()
    }

    /// Same mass, momentum `-p`.
    pub fn flipped(&self) -> Self {
        Self { p: -self.p, m: self.m }
    }

    /// Same mass, new three-momentum.
    pub fn with_p(&self, p: Vec3) -> Self {
        Self { p, m: self.m }
    }

    /// Contravariant components (E, p¹, p², p³).
    pub fn four_vector(&self) -> [f64; 4] {
        [self.energy(), self.p.x, self.p.y, self.p.z]
    }
}

/// Pauli matrix σ_{i+1}.
pub fn pauli(i: usize) -> ComplexMatrix2 {
    match i {
        0 => ComplexMatrix2::new(ZERO, ONE, ONE, ZERO),
        1 => ComplexMatrix2::new(ZERO, -I, I, ZERO),
        2 => ComplexMatrix2::new(ONE, ZERO, ZERO, -ONE),
        _ => panic!("Pauli index {i} out of range"),
    }
}

/// v·σ for a real 3-vector.
pub fn sigma_dot(v: &Vec3) -> ComplexMatrix2 {
    (0..3).fold(ComplexMatrix2::zeros(), |acc, i| acc + pauli(i) * C64::from(v[i]))
}

/// Assemble a 4×4 matrix from 2×2 blocks.
pub fn from_blocks(
    a: &ComplexMatrix2,
    b: &ComplexMatrix2,
    c: &ComplexMatrix2,
    d: &ComplexMatrix2,
) -> ComplexMatrix4 {
    let mut m = ComplexMatrix4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(a);
    m.fixed_view_mut::<2, 2>(0, 2).copy_from(b);
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(c);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(d);
    m
}

pub fn block_diag(a: &ComplexMatrix2, d: &ComplexMatrix2) -> ComplexMatrix4 {
    let z = ComplexMatrix2::zeros();
    from_blocks(a, &z, &z, d)
}

/// Upper-left 2×2 block.
pub fn upper_block(m: &ComplexMatrix4) -> ComplexMatrix2 {
    m.fixed_view::<2, 2>(0, 0).into_owned()
}

/// γ^μ in the chiral representation.
pub fn gamma(mu: usize) -> Result<ComplexMatrix4> {
    let one = ComplexMatrix2::identity();
    let zero = ComplexMatrix2::zeros();
    match mu {
        0 => Ok(from_blocks(&zero, &one, &one, &zero)),
        1..=3 => {
            let s = pauli(mu - 1);
            Ok(from_blocks(&zero, &s, &(-s), &zero))
        }
        _ => Err(Error::IndexOutOfRange(mu)),
    }
}

/// All four γ^μ.
pub fn gammas() -> [ComplexMatrix4; 4] {
    [0, 1, 2, 3].map(|mu| gamma(mu).expect("index in range"))
}

/// γ⁵ = diag(-1, -1, 1, 1).
pub fn gamma5() -> ComplexMatrix4 {
    ComplexMatrix4::from_diagonal(&SVector::<C64, 4>::new(-ONE, -ONE, ONE, ONE))
}

/// Charge conjugation matrix C = iγ²; it is real, symmetric and C² = 1.
pub fn charge_conjugation() -> ComplexMatrix4 {
    gamma(2).expect("index in range") * I
}

pub fn commutator<const N: usize>(a: &SMatrix<C64, N, N>, b: &SMatrix<C64, N, N>) -> SMatrix<C64, N, N> {
    a * b - b * a
}

pub fn anticommutator<const N: usize>(a: &SMatrix<C64, N, N>, b: &SMatrix<C64, N, N>) -> SMatrix<C64, N, N> {
    a * b + b * a
}

/// Largest entry modulus.
pub fn max_abs<const R: usize, const C: usize>(m: &SMatrix<C64, R, C>) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// s^{μν} = (i/4)[γ^μ, γ^ν]. Returns zero for μ = ν.
pub fn sl2c_generator(mu: usize, nu: usize) -> Result<ComplexMatrix4> {
    let a = gamma(mu)?;
    let b = gamma(nu)?;
    Ok(commutator(&a, &b) * C64::new(0.0, 0.25))
}

/// Pauli-Dirac spin s_i = diag(σ_i/2, σ_i/2).
pub fn spin_matrix(i: usize) -> ComplexMatrix4 {
    let h = pauli(i) * C64::from(0.5);
    block_diag(&h, &h)
}

pub fn spin_matrices() -> SpatialOperator {
    [0, 1, 2].map(spin_matrix)
}

/// r̂(θ) = exp(-iθ·σ/2).
pub fn rotation_block(theta: &Vec3) -> ComplexMatrix2 {
    let angle = theta.norm();
    if angle == 0.0 {
        return ComplexMatrix2::identity();
    }
    let axis = theta / angle;
    let (s, c) = (angle / 2.0).sin_cos();
    ComplexMatrix2::identity() * C64::from(c) - sigma_dot(&axis) * (I * s)
}

/// r(θ) = diag(r̂, r̂).
pub fn rotation(theta: &Vec3) -> ComplexMatrix4 {
    let r = rotation_block(theta);
    block_diag(&r, &r)
}

/// SO(3) image of an SU(2) element, defined by r̂⁻¹σ_i r̂ = R_ij σ_j.
pub fn so3_matrix(rhat: &ComplexMatrix2) -> Matrix3<f64> {
    let inv = rhat.adjoint();
    Matrix3::from_fn(|i, j| 0.5 * (inv * pauli(i) * rhat * pauli(j)).trace().re)
}

/// l̂(τ) = exp(τ·σ/2).
pub fn boost_block(tau: &Vec3) -> ComplexMatrix2 {
    let rapidity = tau.norm();
    if rapidity == 0.0 {
        return ComplexMatrix2::identity();
    }
    let axis = tau / rapidity;
    let half = rapidity / 2.0;
    ComplexMatrix2::identity() * C64::from(half.cosh()) + sigma_dot(&axis) * C64::from(half.sinh())
}

/// l(τ) = diag(l̂, l̂⁻¹).
pub fn boost(tau: &Vec3) -> ComplexMatrix4 {
    block_diag(&boost_block(tau), &boost_block(&(-tau)))
}

/// γ^i p^i.
pub fn gamma_dot(p: &Vec3) -> ComplexMatrix4 {
    let g = gammas();
    (0..3).fold(ComplexMatrix4::zeros(), |acc, i| acc + g[i + 1] * C64::from(p[i]))
}

/// γ⁰γ^i p^i.
pub fn alpha_dot(p: &Vec3) -> ComplexMatrix4 {
    gammas()[0] * gamma_dot(p)
}

/// Rest-frame boost l_p = (E + m + γ⁰γ·p) / sqrt(2m(E+m)).
pub fn boost_for_momentum(q: &Momentum) -> ComplexMatrix4 {
    let (e, m) = (q.energy(), q.mass());
    let scale = 1.0 / (2.0 * m * (e + m)).sqrt();
    (ComplexMatrix4::identity() * C64::from(e + m) + alpha_dot(q.p())) * C64::from(scale)
}

/// Lorentz boost L_p with L_p (m,0,0,0) = (E, p).
pub fn lorentz_boost_matrix(q: &Momentum) -> Matrix4<f64> {
    let (e, m, p) = (q.energy(), q.mass(), q.p());
    let mut l = Matrix4::zeros();
    l[(0, 0)] = e / m;
    for i in 0..3 {
        l[(0, i + 1)] = p[i] / m;
        l[(i + 1, 0)] = p[i] / m;
        for j in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            l[(i + 1, j + 1)] = delta + p[i] * p[j] / (m * (e + m));
        }
    }
    l
}

/// Λ(λ) from λ⁻¹γ^αλ = Λ^α_β γ^β, computed as ¼Tr(λ⁻¹γ^αλγ_β).
pub fn lorentz_of(lambda: &ComplexMatrix4) -> Result<Matrix4<f64>> {
    let inv = lambda.try_inverse().ok_or(Error::NotBlockStructured)?;
    let g = gammas();
    Ok(Matrix4::from_fn(|a, b| 0.25 * (inv * g[a] * lambda * g[b]).trace().re * metric(b, b)))
}

/// Θ_ij = δ_ij + pⁱpʲ/(m(E+m)), the space block of L_p.
pub fn theta_tensor(q: &Momentum) -> Matrix3<f64> {
    let (e, m, p) = (q.energy(), q.mass(), q.p());
    Matrix3::identity() + p * p.transpose() / (m * (e + m))
}

/// Θ⁻¹_ij = δ_ij - pⁱpʲ/(E(E+m)).
pub fn theta_tensor_inverse(q: &Momentum) -> Matrix3<f64> {
    let (e, m, p) = (q.energy(), q.mass(), q.p());
    Matrix3::identity() - p * p.transpose() / (e * (e + m))
}

/// U_FW(p) = (E + m + γ·p) / sqrt(2E(E+m)).
pub fn foldy_wouthuysen(q: &Momentum) -> ComplexMatrix4 {
    let (e, m) = (q.energy(), q.mass());
    let scale = 1.0 / (2.0 * e * (e + m)).sqrt();
    (ComplexMatrix4::identity() * C64::from(e + m) + gamma_dot(q.p())) * C64::from(scale)
}

/// (p∧V)_i = ε_ijk pʲ V_k.
pub fn wedge<const N: usize>(p: &Vec3, v: &[SMatrix<C64, N, N>; 3]) -> [SMatrix<C64, N, N>; 3] {
    std::array::from_fn(|i| {
        let mut acc = SMatrix::<C64, N, N>::zeros();
        for j in 0..3 {
            for k in 0..3 {
                let e = levi_civita(i, j, k);
                if e != 0.0 {
                    acc += v[k] * C64::from(e * p[j]);
                }
            }
        }
        acc
    })
}

/// pⁱV_i.
pub fn dot<const N: usize>(p: &Vec3, v: &[SMatrix<C64, N, N>; 3]) -> SMatrix<C64, N, N> {
    (0..3).fold(SMatrix::<C64, N, N>::zeros(), |acc, i| acc + v[i] * C64::from(p[i]))
}

/// (T V)_i = T_ij V_j for a real 3×3 tensor.
pub fn contract<const N: usize>(t: &Matrix3<f64>, v: &[SMatrix<C64, N, N>; 3]) -> [SMatrix<C64, N, N>; 3] {
    std::array::from_fn(|i| {
        (0..3).fold(SMatrix::<C64, N, N>::zeros(), |acc, j| acc + v[j] * C64::from(t[(i, j)]))
    })
}
