//! Passive-mode 2×2 operators acting on Pauli wave spinors α_σ(p).
//!
//! An [`AssociatedOperator`] is a first-order differential operator in momentum,
//! `(Ãα)(p) = M(p)α(p) + Σ_i D_i(p)(∂̃_iα)(p)` with the covariant derivative
//! `∂̃_i = ∂_{p^i} + Ω_i(p)` of the chosen polarization basis. Keeping the two
//! parts separate lets commutators of multiplicative operators be formed exactly.

mod elements;
mod kernels;
mod test_spinor;
mod wigner;

pub use elements::{matrix_elements_diag, matrix_elements_offdiag};
pub use kernels::{KernelKind, OscillatingKernel, KERNEL_NAMES};
pub use test_spinor::GaussianTestSpinor;
pub use wigner::{d_matrix, transformed_momentum, wigner_little_group, wigner_transform, WignerTransformed};

use std::fmt;
use std::sync::Arc;

use crate::algebra::{
    contract, levi_civita, pauli, theta_tensor, theta_tensor_inverse, ComplexMatrix2, Momentum, PauliSpinor,
    C64, I,
};
use crate::error::Result;
use crate::numeric::richardson_difference;
use crate::polarization::PolarizationBasis;

/// Relative FD step for gradients of wave spinors without an analytic form.
pub const GRADIENT_STEP: f64 = 1e-3;

/// A Pauli wave spinor p ↦ (α_{+½}(p), α_{-½}(p)).
pub trait WaveSpinor {
    fn value(&self, q: &Momentum) -> Result<PauliSpinor>;

    /// ∂α/∂p^i. Defaults to a Richardson-refined central difference.
    fn gradient(&self, q: &Momentum) -> Result<[PauliSpinor; 3]> {
        fd_gradient(self, q)
    }
}

/// Gradient by 4th-order central differences refined once, h = 1e-3·max(|p|, m).
pub fn fd_gradient<W: WaveSpinor + ?Sized>(w: &W, q: &Momentum) -> Result<[PauliSpinor; 3]> {
    let h = GRADIENT_STEP * q.magnitude().max(q.mass());
    let mut out = [PauliSpinor::zeros(); 3];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = richardson_difference(
            |t| {
                let mut p = *q.p();
                p[i] += t;
                w.value(&q.with_p(p))
            },
            0.0,
            h,
        )?;
    }
    Ok(out)
}

/// Wave spinor from a closure, gradient by finite differences.
pub struct FnSpinor<F>(pub F);

impl<F> WaveSpinor for FnSpinor<F>
where
    F: Fn(&Momentum) -> Result<PauliSpinor>,
{
    fn value(&self, q: &Momentum) -> Result<PauliSpinor> {
        (self.0)(q)
    }
}

type MatFn = Arc<dyn Fn(&Momentum) -> Result<ComplexMatrix2> + Send + Sync>;
type VecFn = Arc<dyn Fn(&Momentum) -> Result<[ComplexMatrix2; 3]> + Send + Sync>;

/// First-order momentum-space operator on Pauli wave spinors.
#[derive(Clone)]
pub struct AssociatedOperator {
    name: String,
    basis: PolarizationBasis,
    multiplicative: MatFn,
    derivative: Option<VecFn>,
    sign_c: Option<f64>,
    hermitian: bool,
}

impl fmt::Debug for AssociatedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AssociatedOperator")
            .field("name", &self.name)
            .field("basis", &self.basis)
            .field("multiplicative_only", &self.derivative.is_none())
            .field("sign_c", &self.sign_c)
            .finish()
    }
}

fn unit() -> ComplexMatrix2 {
    ComplexMatrix2::identity()
}

impl AssociatedOperator {
    pub fn multiplicative<F>(name: impl Into<String>, basis: PolarizationBasis, f: F) -> Self
    where
        F: Fn(&Momentum) -> Result<ComplexMatrix2> + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            basis,
            multiplicative: Arc::new(f),
            derivative: None,
            sign_c: None,
            hermitian: false,
        }
    }

    /// Adds the coefficients D_i of ∂̃_i.
    pub fn with_derivative<F>(mut self, f: F) -> Self
    where
        F: Fn(&Momentum) -> Result<[ComplexMatrix2; 3]> + Send + Sync + 'static,
    {
        self.derivative = Some(Arc::new(f));
        self
    }

    /// Declares Ã^c = sign·Ã.
    pub fn with_conjugate_sign(mut self, sign: f64) -> Self {
        self.sign_c = Some(sign);
        self
    }

    pub fn with_hermitian(mut self, hermitian: bool) -> Self {
        self.hermitian = hermitian;
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &PolarizationBasis {
        &self.basis
    }

    pub fn conjugate_sign(&self) -> Option<f64> {
        self.sign_c
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn is_multiplicative(&self) -> bool {
        self.derivative.is_none()
    }

    pub fn multiplicative_part(&self, q: &Momentum) -> Result<ComplexMatrix2> {
        (self.multiplicative)(q)
    }

    pub fn derivative_part(&self, q: &Momentum) -> Result<[ComplexMatrix2; 3]> {
        match &self.derivative {
            Some(d) => d(q),
            None => Ok([ComplexMatrix2::zeros(); 3]),
        }
    }

    /// The antiparticle operator Ã^c, when the relation Ã^c = ±Ã is known.
    pub fn conjugate(&self) -> Option<Self> {
        let s = self.sign_c?;
        Some(self.scaled(C64::from(s)).renamed(format!("{}^c", self.name)))
    }

    /// (Ãα)(p) = Mα + D_i(∂_iα + Ω_iα).
    pub fn apply<W: WaveSpinor + ?Sized>(&self, alpha: &W, q: &Momentum) -> Result<PauliSpinor> {
        let v = alpha.value(q)?;
        let mut out = self.multiplicative_part(q)? * v;
        if let Some(d) = &self.derivative {
            let coef = d(q)?;
            let grad = alpha.gradient(q)?;
            let omega = self.basis.omega_connection(q)?;
            for i in 0..3 {
                out += coef[i] * (grad[i] + omega[i] * v);
            }
        }
        Ok(out)
    }

    /// Ãα as a new wave spinor.
    pub fn applied_to<'a, W: WaveSpinor + ?Sized>(&'a self, alpha: &'a W) -> Applied<'a, W> {
        Applied { op: self, inner: alpha }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        let (ma, mb) = (a.multiplicative.clone(), b.multiplicative.clone());
        let deriv: Option<VecFn> = match (a.derivative.clone(), b.derivative.clone()) {
            (None, None) => None,
            (Some(d), None) | (None, Some(d)) => Some(d),
            (Some(da), Some(db)) => Some(Arc::new(move |q| {
                let (x, y) = (da(q)?, db(q)?);
                Ok(std::array::from_fn(|i| x[i] + y[i]))
            })),
        };
        Self {
            name: format!("({} + {})", a.name, b.name),
            basis: a.basis,
            multiplicative: Arc::new(move |q| Ok(ma(q)? + mb(q)?)),
            derivative: deriv,
            sign_c: if a.sign_c == b.sign_c { a.sign_c } else { None },
            hermitian: false,
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(C64::from(-1.0)))
    }

    pub fn scaled(&self, c: C64) -> Self {
        self.scaled_by(move |_| c)
    }

    /// Multiplies both parts by a scalar function f(p) on the left.
    pub fn scaled_by<F>(&self, f: F) -> Self
    where
        F: Fn(&Momentum) -> C64 + Send + Sync + 'static,
    {
        let f = Arc::new(f);
        let m = self.multiplicative.clone();
        let f1 = f.clone();
        let deriv: Option<VecFn> = self.derivative.clone().map(|d| {
            let f2 = f.clone();
            Arc::new(move |q: &Momentum| {
                let c = f2(q);
                Ok(d(q)?.map(|x| x * c))
            }) as VecFn
        });
        Self {
            name: format!("f·{}", self.name),
            basis: self.basis,
            multiplicative: Arc::new(move |q| Ok(m(q)? * f1(q))),
            derivative: deriv,
            sign_c: self.sign_c,
            hermitian: false,
        }
    }

    /// Exact commutator [A, B](p) when both operators are multiplicative.
    pub fn commutator_matrix(&self, other: &Self, q: &Momentum) -> Option<Result<ComplexMatrix2>> {
        if !(self.is_multiplicative() && other.is_multiplicative()) {
            return None;
        }
        Some((|| {
            let (a, b) = (self.multiplicative_part(q)?, other.multiplicative_part(q)?);
            Ok(a * b - b * a)
        })())
    }
}

/// The wave spinor Ãα, differentiated by finite differences.
pub struct Applied<'a, W: ?Sized> {
    op: &'a AssociatedOperator,
    inner: &'a W,
}

impl<W: WaveSpinor + ?Sized> WaveSpinor for Applied<'_, W> {
    fn value(&self, q: &Momentum) -> Result<PauliSpinor> {
        self.op.apply(self.inner, q)
    }
}

/// Result of applying [A, B] - C to a wave spinor at one momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutatorResidual {
    pub residual: PauliSpinor,
    /// Largest norm among ABα, BAα and Cα.
    pub scale: f64,
}

impl CommutatorResidual {
    pub fn absolute(&self) -> f64 {
        self.residual.norm()
    }

    /// Residual relative to the size of the terms being compared.
    pub fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            self.absolute()
        } else {
            self.absolute() / self.scale
        }
    }
}

/// Evaluates ([A, B] - C)α at `q`. Outer derivatives of Bα and Aα use
/// Richardson-refined central differences.
pub fn commutator_action<W: WaveSpinor + ?Sized>(
    a: &AssociatedOperator,
    b: &AssociatedOperator,
    rhs: &AssociatedOperator,
    alpha: &W,
    q: &Momentum,
) -> Result<CommutatorResidual> {
    let ab = a.apply(&b.applied_to(alpha), q)?;
    let ba = b.apply(&a.applied_to(alpha), q)?;
    let c = rhs.apply(alpha, q)?;
    let scale = ab.norm().max(ba.norm()).max(c.norm());
    Ok(CommutatorResidual { residual: ab - ba - c, scale })
}

fn energy(q: &Momentum) -> f64 {
    q.energy()
}

fn spin_vector(basis: PolarizationBasis, q: &Momentum) -> Result<[ComplexMatrix2; 3]> {
    Ok(basis.sigma_matrices(q)?.map(|s| s * C64::from(0.5)))
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i < n {
        Ok(())
    } else {
        Err(crate::error::Error::IndexOutOfRange(i))
    }
}

/// Constructors for the named associated operators.
impl AssociatedOperator {
    pub fn zero(basis: PolarizationBasis) -> Self {
        Self::multiplicative("0", basis, |_| Ok(ComplexMatrix2::zeros()))
    }

    pub fn identity(basis: PolarizationBasis) -> Self {
        Self::multiplicative("1", basis, |_| Ok(unit())).with_conjugate_sign(1.0).with_hermitian(true)
    }

    /// Ñ = 1, Ñ^c = -1.
    pub fn sign(basis: PolarizationBasis) -> Self {
        Self::identity(basis).renamed("N").with_conjugate_sign(-1.0)
    }

    /// H̃ = E(p).
    pub fn energy(basis: PolarizationBasis) -> Self {
        Self::multiplicative("H", basis, |q| Ok(unit() * C64::from(energy(q))))
            .with_conjugate_sign(-1.0)
            .with_hermitian(true)
    }

    /// P̃^i = p^i.
    pub fn momentum(basis: PolarizationBasis, i: usize) -> Result<Self> {
        check_index(i, 3)?;
        Ok(Self::multiplicative(format!("P{}", i + 1), basis, move |q| Ok(unit() * C64::from(q.p()[i])))
            .with_conjugate_sign(-1.0)
            .with_hermitian(true))
    }

    /// Ṽ^i = p^i/E.
    pub fn velocity(basis: PolarizationBasis, i: usize) -> Result<Self> {
        check_index(i, 3)?;
        Ok(Self::multiplicative(format!("V{}", i + 1), basis, move |q| {
            Ok(unit() * C64::from(q.p()[i] / q.energy()))
        })
        .with_conjugate_sign(1.0)
        .with_hermitian(true))
    }

    /// S̃_i = Σ_i(p)/2.
    pub fn spin(basis: PolarizationBasis, i: usize) -> Result<Self> {
        check_index(i, 3)?;
        Ok(Self::multiplicative(format!("S{}", i + 1), basis, move |q| Ok(spin_vector(basis, q)?[i]))
            .with_conjugate_sign(-1.0)
            .with_hermitian(true))
    }

    /// S̃^(+)_i = ½Θ_ij Σ_j.
    pub fn spin_plus(basis: PolarizationBasis, i: usize) -> Result<Self> {
        check_index(i, 3)?;
        Ok(Self::multiplicative(format!("S+{}", i + 1), basis, move |q| {
            Ok(contract(&theta_tensor(q), &spin_vector(basis, q)?)[i])
        })
        .with_conjugate_sign(-1.0)
        .with_hermitian(true))
    }

    /// S̃^(-)_i = ½Θ⁻¹_ij Σ_j.
    pub fn spin_minus(basis: PolarizationBasis, i: usize) -> Result<Self> {
        check_index(i, 3)?;
        Ok(Self::multiplicative(format!("S-{}", i + 1), basis, move |q| {
            Ok(contract(&theta_tensor_inverse(q), &spin_vector(basis, q)?)[i])
        })
        .with_conjugate_sign(-1.0)
        .with_hermitian(true))
    }

    /// W̃_s = σ₃/2.
    pub fn polarization(basis: PolarizationBasis) -> Self {
        Self::multiplicative("Ws", basis, |_| Ok(pauli(2) * C64::from(0.5)))
            .with_conjugate_sign(-1.0)
            .with_hermitian(true)
    }

    /// X̃^i = i∂̃_i.
    pub fn position(basis: PolarizationBasis, i: usize) -> Result<Self> {
        check_index(i, 3)?;
        Ok(Self::zero(basis)
            .renamed(format!("X{}", i + 1))
            .with_derivative(move |_| {
                let mut d = [ComplexMatrix2::zeros(); 3];
                d[i] = unit() * I;
                Ok(d)
            })
            .with_conjugate_sign(1.0)
            .with_hermitian(true))
    }

    /// L̃_i = -iε_ijk p^j ∂̃_k.
    pub fn orbital(basis: PolarizationBasis, i: usize) -> Result<Self> {
        check_index(i, 3)?;
        Ok(Self::zero(basis)
            .renamed(format!("L{}", i + 1))
            .with_derivative(move |q| {
                let p = q.p();
                Ok(std::array::from_fn(|k| {
                    let c: f64 = (0..3).map(|j| levi_civita(i, j, k) * p[j]).sum();
                    unit() * (-I * c)
                }))
            })
            .with_conjugate_sign(-1.0)
            .with_hermitian(true))
    }

    /// J̃_i = L̃_i + S̃_i.
    pub fn angular_momentum(basis: PolarizationBasis, i: usize) -> Result<Self> {
        Ok(Self::orbital(basis, i)?
            .plus(&Self::spin(basis, i)?)
            .renamed(format!("J{}", i + 1))
            .with_hermitian(true))
    }

    /// K̃ᵒ_i = iE∂̃_i + ip^i/(2E).
    pub fn boost_orbital(basis: PolarizationBasis, i: usize) -> Result<Self> {
        check_index(i, 3)?;
        Ok(Self::multiplicative(format!("Ko{}", i + 1), basis, move |q| {
            Ok(unit() * (I * (q.p()[i] / (2.0 * q.energy()))))
        })
        .with_derivative(move |q| {
            let mut d = [ComplexMatrix2::zeros(); 3];
            d[i] = unit() * (I * q.energy());
            Ok(d)
        })
        .with_conjugate_sign(-1.0)
        .with_hermitian(true))
    }

    /// K̃ˢ_i = ε_ijk p^j S̃_k/(E+m).
    pub fn boost_spin(basis: PolarizationBasis, i: usize) -> Result<Self> {
        check_index(i, 3)?;
        Ok(Self::multiplicative(format!("Ks{}", i + 1), basis, move |q| {
            let s = spin_vector(basis, q)?;
            let p = q.p();
            let mut acc = ComplexMatrix2::zeros();
            for j in 0..3 {
                for k in 0..3 {
                    acc += s[k] * C64::from(levi_civita(i, j, k) * p[j]);
                }
            }
            Ok(acc / C64::from(q.energy() + q.mass()))
        })
        .with_conjugate_sign(-1.0)
        .with_hermitian(true))
    }

    /// K̃_i = K̃ᵒ_i + K̃ˢ_i.
    pub fn boost(basis: PolarizationBasis, i: usize) -> Result<Self> {
        Ok(Self::boost_orbital(basis, i)?
            .plus(&Self::boost_spin(basis, i)?)
            .renamed(format!("K{}", i + 1))
            .with_hermitian(true))
    }

    /// W̃⁰ = p·S̃ and W̃^i = mS̃^(+)_i.
    pub fn pauli_lubanski(basis: PolarizationBasis, mu: usize) -> Result<Self> {
        check_index(mu, 4)?;
        let op = if mu == 0 {
            Self::multiplicative("W0", basis, move |q| {
                let s = spin_vector(basis, q)?;
                let p = q.p();
                Ok((0..3).fold(ComplexMatrix2::zeros(), |a, i| a + s[i] * C64::from(p[i])))
            })
        } else {
            let sp = Self::spin_plus(basis, mu - 1)?;
            sp.scaled_by(|q| C64::from(q.mass())).renamed(format!("W{mu}"))
        };
        Ok(op.with_conjugate_sign(1.0).with_hermitian(true))
    }

    /// X̃^i_c = i∂̃_i + ε_ijk p^j S̃_k/(E(E+m)).
    pub fn pryce_c_position(basis: PolarizationBasis, i: usize) -> Result<Self> {
        let offset = Self::boost_spin(basis, i)?.scaled_by(|q| C64::from(1.0 / q.energy()));
        Ok(Self::position(basis, i)?
            .plus(&offset)
            .renamed(format!("Xc{}", i + 1))
            .with_conjugate_sign(1.0)
            .with_hermitian(true))
    }

    /// X̃^i_d = i∂̃_i - ε_ijk p^j S̃_k/(m(E+m)).
    pub fn pryce_d_position(basis: PolarizationBasis, i: usize) -> Result<Self> {
        let offset = Self::boost_spin(basis, i)?.scaled_by(|q| C64::from(-1.0 / q.mass()));
        Ok(Self::position(basis, i)?
            .plus(&offset)
            .renamed(format!("Xd{}", i + 1))
            .with_conjugate_sign(1.0)
            .with_hermitian(true))
    }

    /// Ỹ^i_c = (m/E³)S̃^(+)_i.
    pub fn pryce_c_y(basis: PolarizationBasis, i: usize) -> Result<Self> {
        Ok(Self::spin_plus(basis, i)?
            .scaled_by(|q| C64::from(q.mass() / q.energy().powi(3)))
            .renamed(format!("Yc{}", i + 1))
            .with_conjugate_sign(-1.0)
            .with_hermitian(true))
    }

    /// Ỹ^i_d = S̃^(+)_i/(mE).
    pub fn pryce_d_y(basis: PolarizationBasis, i: usize) -> Result<Self> {
        Ok(Self::spin_plus(basis, i)?
            .scaled_by(|q| C64::from(1.0 / (q.mass() * q.energy())))
            .renamed(format!("Yd{}", i + 1))
            .with_conjugate_sign(-1.0)
            .with_hermitian(true))
    }
}

/// (X̃_c, X̃_d, Ỹ_c, Ỹ_d) component triples.
pub type PryceCdAssociated =
    ([AssociatedOperator; 3], [AssociatedOperator; 3], [AssociatedOperator; 3], [AssociatedOperator; 3]);

pub fn pryce_cd_associated(basis: PolarizationBasis) -> Result<PryceCdAssociated> {
    let make =
        |f: fn(PolarizationBasis, usize) -> Result<AssociatedOperator>| -> Result<[AssociatedOperator; 3]> {
            Ok([f(basis, 0)?, f(basis, 1)?, f(basis, 2)?])
        };
    Ok((
        make(AssociatedOperator::pryce_c_position)?,
        make(AssociatedOperator::pryce_d_position)?,
        make(AssociatedOperator::pryce_c_y)?,
        make(AssociatedOperator::pryce_d_y)?,
    ))
}
