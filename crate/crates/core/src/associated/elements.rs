use nalgebra::SMatrix;

use crate::algebra::{boost_for_momentum, charge_conjugation, ComplexMatrix2, Momentum, C64, I};
use crate::error::Result;
use crate::operators::FourierOperator;
use crate::polarization::{PolarizationBasis, Spin};
use crate::spinors::rest_spinors;

type RestFrame = SMatrix<C64, 4, 2>;

fn rest_frames(basis: &PolarizationBasis, q: &Momentum) -> Result<(RestFrame, RestFrame)> {
    let (u0, v0) = rest_spinors(basis, q, Spin::Up)?;
    let (u1, v1) = rest_spinors(basis, q, Spin::Down)?;
    Ok((RestFrame::from_columns(&[u0, u1]), RestFrame::from_columns(&[v0, v1])))
}

/// Diagonal associated matrices (Ã^(+), Ã^(-)) of a Fourier operator.
///
/// Ã^(+) = (m/E)ů†l_p Â(p) l_p ů and Ã^(-) = (m/E)ů†l_p C Â(-p)ᵀ C l_p ů.
pub fn matrix_elements_diag(
    a: &FourierOperator,
    q: &Momentum,
    basis: &PolarizationBasis,
) -> Result<(ComplexMatrix2, ComplexMatrix2)> {
    let (u, _) = rest_frames(basis, q)?;
    let l = boost_for_momentum(q);
    let c = charge_conjugation();
    let r = C64::from(q.mass() / q.energy());
    let plus = u.adjoint() * l * a.eval(q) * l * u * r;
    let minus = u.adjoint() * l * c * a.eval(&q.flipped()).transpose() * c * l * u * r;
    Ok((plus, minus))
}

/// Off-diagonal associated matrices at time `t`.
///
/// The first is Ã^(±)_{σσ'} = (m/E)ů_σ†(p)l_p Â l_{-p} v̊_σ'(-p) e^{2iEt}. The second,
/// Ã^(∓), is returned with rows labelled by the antiparticle index and columns by
/// the particle index, so that for Hermitian Â it is the adjoint of the first.
pub fn matrix_elements_offdiag(
    a: &FourierOperator,
    q: &Momentum,
    t: f64,
    basis: &PolarizationBasis,
) -> Result<(ComplexMatrix2, ComplexMatrix2)> {
    let minus_q = q.flipped();
    let (u, _) = rest_frames(basis, q)?;
    let (_, v) = rest_frames(basis, &minus_q)?;
    let lp = boost_for_momentum(q);
    let lm = boost_for_momentum(&minus_q);
    let ahat = a.eval(q);
    let r = q.mass() / q.energy();
    let phase = (I * (2.0 * q.energy() * t)).exp();
    let pm = u.adjoint() * lp * ahat * lm * v * (phase * r);
    let mp = v.adjoint() * lm * ahat * lp * u * (phase.conj() * r);
    Ok((pm, mp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gamma5, gammas, max_abs, theta_tensor};
    use crate::associated::AssociatedOperator;
    use crate::sampling::MomentumSampler;

    fn bases() -> [PolarizationBasis; 3] {
        [
            PolarizationBasis::momentum_spin(),
            PolarizationBasis::common(crate::algebra::Vec3::new(0.6, 0.0, 0.8)).unwrap(),
            PolarizationBasis::Helicity,
        ]
    }

    fn close(a: &ComplexMatrix2, b: &ComplexMatrix2, tol: f64) -> bool {
        max_abs(&(a - b)) <= tol
    }

    #[test]
    fn projector_and_sign_elements() {
        let one = ComplexMatrix2::identity();
        let zero = ComplexMatrix2::zeros();
        for q in MomentumSampler::new(31, 1.0).sample_n(20) {
            for b in bases() {
                let (p, c) = matrix_elements_diag(&FourierOperator::ProjectorPlus, &q, &b).unwrap();
                assert!(close(&p, &one, 1e-12) && close(&c, &zero, 1e-12));
                let (p, c) = matrix_elements_diag(&FourierOperator::ProjectorMinus, &q, &b).unwrap();
                assert!(close(&p, &zero, 1e-12) && close(&c, &one, 1e-12));
                let (p, c) = matrix_elements_diag(&FourierOperator::Sign, &q, &b).unwrap();
                assert!(close(&p, &one, 1e-12) && close(&c, &(-one), 1e-12));
                let (p, c) = matrix_elements_diag(&FourierOperator::DiracHamiltonian, &q, &b).unwrap();
                let e = one * C64::from(q.energy());
                assert!(close(&p, &e, 1e-11) && close(&c, &(-e), 1e-11));
            }
        }
    }

    #[test]
    fn spin_and_pauli_lubanski_elements() {
        for q in MomentumSampler::new(32, 1.0).sample_n(20) {
            for b in bases() {
                let sigma = b.sigma_matrices(&q).unwrap();
                let theta = theta_tensor(&q);
                for i in 0..3 {
                    let (p, c) = matrix_elements_diag(&FourierOperator::PryceSpin(i), &q, &b).unwrap();
                    let half = sigma[i] * C64::from(0.5);
                    assert!(close(&p, &half, 1e-12) && close(&c, &(-half), 1e-12));
                    let (p, c) =
                        matrix_elements_diag(&FourierOperator::PauliLubanski(i + 1), &q, &b).unwrap();
                    let sp = (0..3).fold(ComplexMatrix2::zeros(), |a, j| {
                        a + sigma[j] * C64::from(0.5 * q.mass() * theta[(i, j)])
                    });
                    let tol = 1e-11 * (1.0 + q.energy() * q.energy());
                    // The E-based transform is even; the generator form with Ĥ_D is odd.
                    assert!(close(&p, &sp, tol) && close(&c, &(-sp), tol));
                    let (p, c) = matrix_elements_diag(&FourierOperator::Momentum(i), &q, &b).unwrap();
                    let pi = ComplexMatrix2::identity() * C64::from(q.p()[i]);
                    assert!(close(&p, &pi, 1e-12) && close(&c, &(-pi), 1e-12));
                    let pc = AssociatedOperator::spin_plus(b, i).unwrap().multiplicative_part(&q).unwrap();
                    assert!(close(&sp, &(pc * C64::from(q.mass())), 1e-12));
                }
                let (w0, w0c) = matrix_elements_diag(&FourierOperator::PauliLubanski(0), &q, &b).unwrap();
                let ps =
                    (0..3).fold(ComplexMatrix2::zeros(), |a, j| a + sigma[j] * C64::from(0.5 * q.p()[j]));
                assert!(close(&w0, &ps, 1e-11) && close(&w0c, &ps, 1e-11));
            }
        }
    }

    #[test]
    fn helicity_polarization_is_diagonal() {
        let q = Momentum::from_components(0.3, -0.4, 0.5, 1.0).unwrap();
        let (w0, _) =
            matrix_elements_diag(&FourierOperator::PauliLubanski(0), &q, &PolarizationBasis::Helicity)
                .unwrap();
        let want = crate::algebra::pauli(2) * C64::from(0.5 * q.magnitude());
        assert!(close(&w0, &want, 1e-13));
    }

    #[test]
    fn conserved_operators_have_no_oscillating_part() {
        for q in MomentumSampler::new(33, 1.0).sample_n(20) {
            for b in bases() {
                for op in [
                    FourierOperator::PryceSpin(0),
                    FourierOperator::PryceSpin(2),
                    FourierOperator::Sign,
                    FourierOperator::FrankelSpin(1),
                ] {
                    let (pm, mp) = matrix_elements_offdiag(&op, &q, 0.4, &b).unwrap();
                    assert!(max_abs(&pm) < 1e-12 && max_abs(&mp) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn hermitian_parents_give_adjoint_pairs() {
        let g = gammas();
        let ops = [
            FourierOperator::Constant(g[0]),
            FourierOperator::Constant(g[0] * g[1]),
            FourierOperator::PositionOffset(1),
            FourierOperator::Constant(gamma5()),
        ];
        for q in MomentumSampler::new(34, 1.0).sample_n(20) {
            for b in bases() {
                for op in &ops {
                    let (pm, mp) = matrix_elements_offdiag(op, &q, 1.3, &b).unwrap();
                    assert!(close(&pm.adjoint(), &mp, 1e-12));
                }
            }
        }
    }

    #[test]
    fn offdiag_time_dependence() {
        let q = Momentum::from_components(0.2, 0.9, -0.1, 1.0).unwrap();
        let b = PolarizationBasis::momentum_spin();
        let op = FourierOperator::Constant(gammas()[2]);
        let k = |t: f64| matrix_elements_offdiag(&op, &q, t, &b).unwrap().0;
        let (t, h) = (0.37, 1e-5);
        let deriv = (k(t + h) - k(t - h)) / C64::from(2.0 * h);
        let want = k(t) * (I * 2.0 * q.energy());
        assert!(max_abs(&(deriv - want)) < 1e-8);
        assert!((k(0.0).norm() - k(5.0).norm()).abs() < 1e-12);
    }
}
