use crate::algebra::{
    boost_for_momentum, lorentz_of, max_abs, upper_block, ComplexMatrix2, ComplexMatrix4, Momentum,
    PauliSpinor, Vec3, C64, I,
};
use crate::error::{Error, Result};
use crate::polarization::PolarizationBasis;
use nalgebra::{Matrix4, Vector4};

use super::WaveSpinor;

const BLOCK_TOL: f64 = 1e-10;

/// Checks λ = diag(λ̂, (λ̂†)⁻¹) in the chiral representation.
fn check_block_structure(lambda: &ComplexMatrix4) -> Result<()> {
    let a = upper_block(lambda);
    let b = lambda.fixed_view::<2, 2>(0, 2).into_owned();
    let c = lambda.fixed_view::<2, 2>(2, 0).into_owned();
    let d = lambda.fixed_view::<2, 2>(2, 2).into_owned();
    let scale = 1.0 + max_abs(lambda);
    let det = a.determinant();
    let paired = max_abs(&(d * a.adjoint() - ComplexMatrix2::identity()));
    if max_abs(&b) > BLOCK_TOL * scale
        || max_abs(&c) > BLOCK_TOL * scale
        || (det - C64::from(1.0)).norm() > BLOCK_TOL * scale
        || paired > BLOCK_TOL * scale * scale
    {
        return Err(Error::NotBlockStructured);
    }
    Ok(())
}

/// p' = spatial part of Λ(λ)⁻¹(E, p).
pub fn transformed_momentum(lambda: &ComplexMatrix4, q: &Momentum) -> Result<Momentum> {
    Ok(apply_inverse(&inverse_lorentz(lambda)?, q))
}

fn inverse_lorentz(lambda: &ComplexMatrix4) -> Result<Matrix4<f64>> {
    check_block_structure(lambda)?;
    lorentz_of(lambda)?.try_inverse().ok_or(Error::NotBlockStructured)
}

fn apply_inverse(inv: &Matrix4<f64>, q: &Momentum) -> Momentum {
    let out = inv * Vector4::from(q.four_vector());
    q.with_p(Vec3::new(out[1], out[2], out[3]))
}

fn d_matrix_with(
    lambda: &ComplexMatrix4,
    q: &Momentum,
    qp: &Momentum,
    basis: &PolarizationBasis,
) -> Result<ComplexMatrix2> {
    let w = upper_block(&(boost_for_momentum(&q.flipped()) * lambda * boost_for_momentum(qp)));
    Ok(basis.xi_matrix(q)?.adjoint() * w * basis.xi_matrix(qp)?)
}

/// Wigner rotation w(λ, p) = l_p⁻¹ λ l_{p'}.
pub fn wigner_little_group(lambda: &ComplexMatrix4, q: &Momentum) -> Result<ComplexMatrix4> {
    let qp = transformed_momentum(lambda, q)?;
    let l_inv = boost_for_momentum(&q.flipped());
    Ok(l_inv * lambda * boost_for_momentum(&qp))
}

/// D_σσ'(λ, p) = ξ_σ†(p) ŵ ξ_σ'(p').
pub fn d_matrix(lambda: &ComplexMatrix4, q: &Momentum, basis: &PolarizationBasis) -> Result<ComplexMatrix2> {
    let qp = transformed_momentum(lambda, q)?;
    d_matrix_with(lambda, q, &qp, basis)
}

/// The wave spinor T̃_{λ,a}α.
pub struct WignerTransformed<'a, W: ?Sized> {
    inner: &'a W,
    lambda: ComplexMatrix4,
    inverse: Matrix4<f64>,
    a: [f64; 4],
    basis: PolarizationBasis,
}

/// (T̃α)_σ(p) = sqrt(E(p')/E(p)) e^{ia·p} Σ_σ' D_σσ'(λ, p) α_σ'(p').
pub fn wigner_transform<'a, W: WaveSpinor + ?Sized>(
    alpha: &'a W,
    lambda: ComplexMatrix4,
    a: [f64; 4],
    basis: PolarizationBasis,
) -> Result<WignerTransformed<'a, W>> {
    let inverse = inverse_lorentz(&lambda)?;
    Ok(WignerTransformed { inner: alpha, lambda, inverse, a, basis })
}

impl<W: WaveSpinor + ?Sized> WaveSpinor for WignerTransformed<'_, W> {
    fn value(&self, q: &Momentum) -> Result<PauliSpinor> {
        let qp = apply_inverse(&self.inverse, q);
        let d = d_matrix_with(&self.lambda, q, &qp, &self.basis)?;
        let a = &self.a;
        let p = q.p();
        let ap = q.energy() * a[0] - (p.x * a[1] + p.y * a[2] + p.z * a[3]);
        let factor = (qp.energy() / q.energy()).sqrt();
        Ok(d * self.inner.value(&qp)? * ((I * ap).exp() * factor))
    }
}
