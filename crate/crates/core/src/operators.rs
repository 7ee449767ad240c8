//! Momentum-space (Fourier) 4×4 transforms of the free Dirac operators:
//! Hamiltonian, Pryce projectors, the conserved spin and position offset,
//! the other spin-type families and the Pauli-Lubanski vector.
//!
//! Where two equivalent forms exist both are provided. The rational form is
//! the production path; the other is kept for cross-checks.

use crate::algebra::{
    alpha_dot, boost_for_momentum, contract, dot, gamma_dot, gammas, spin_matrices, theta_tensor,
    theta_tensor_inverse, wedge, ComplexMatrix4, Momentum, SpatialOperator, Vec3, C64, I,
};
use crate::error::{Error, Result};
use crate::numeric::central_difference;
use crate::spinors::normalization;

fn scale(a: &SpatialOperator, c: f64) -> SpatialOperator {
    a.map(|m| m * C64::from(c))
}

/// Ĥ_D(p) = mγ⁰ + γ⁰γ·p.
pub fn dirac_hamiltonian(q: &Momentum) -> ComplexMatrix4 {
    gammas()[0] * C64::from(q.mass()) + alpha_dot(q.p())
}

/// Pryce projectors (Π̂₊, Π̂₋) = ½(1 ± Ĥ_D/E).
pub fn projectors(q: &Momentum) -> (ComplexMatrix4, ComplexMatrix4) {
    let one = ComplexMatrix4::identity();
    let h = dirac_hamiltonian(q) / C64::from(q.energy());
    ((one + h) * C64::from(0.5), (one - h) * C64::from(0.5))
}

/// Sign operator N̂ = Ĥ_D/E = Π̂₊ - Π̂₋.
pub fn n_operator(q: &Momentum) -> ComplexMatrix4 {
    dirac_hamiltonian(q) / C64::from(q.energy())
}

/// Projectors in boost form: (m/E) l_p (1+γ⁰)/2 l_p and (m/E) l_p⁻¹ (1-γ⁰)/2 l_p⁻¹.
pub fn projectors_from_boosts(q: &Momentum) -> (ComplexMatrix4, ComplexMatrix4) {
    let one = ComplexMatrix4::identity();
    let g0 = gammas()[0];
    let l = boost_for_momentum(q);
    let li = boost_for_momentum(&q.flipped());
    let r = C64::from(q.mass() / q.energy());
    let half = C64::from(0.5);
    (l * (one + g0) * half * l * r, li * (one - g0) * half * li * r)
}

/// Conserved spin Ŝ = (m/E)s + p(s·p)/(E(E+m)) + (i/2E)p∧γ.
pub fn pryce_e_spin(q: &Momentum) -> SpatialOperator {
    let (e, m, p) = (q.energy(), q.mass(), q.p());
    let s = spin_matrices();
    let sp = dot(p, &s);
    let g = gammas();
    let gv = [g[1], g[2], g[3]];
    let pg = wedge(p, &gv);
    std::array::from_fn(|i| {
        s[i] * C64::from(m / e) + sp * C64::from(p[i] / (e * (e + m))) + pg[i] * (I / (2.0 * e))
    })
}

/// Conserved spin as (m/E)[l_p s (1+γ⁰)/2 l_p + l_p⁻¹ s (1-γ⁰)/2 l_p⁻¹].
pub fn pryce_e_spin_sandwich(q: &Momentum) -> SpatialOperator {
    let one = ComplexMatrix4::identity();
    let g0 = gammas()[0];
    let l = boost_for_momentum(q);
    let li = boost_for_momentum(&q.flipped());
    let r = C64::from(q.mass() / q.energy());
    let up = (one + g0) * C64::from(0.5);
    let down = (one - g0) * C64::from(0.5);
    spin_matrices().map(|s| (l * s * up * l + li * s * down * li) * r)
}

/// Chakrabarti spin s(p) = l_p s l_p⁻¹.
pub fn chakrabarti_spin(q: &Momentum) -> SpatialOperator {
    let l = boost_for_momentum(q);
    let li = boost_for_momentum(&q.flipped());
    spin_matrices().map(|s| l * s * li)
}

/// Position offset δX̂ = iγ/(2E) + p∧s/(E(E+m)) - ip(γ·p)/(2E²(E+m)).
pub fn pryce_e_position_offset(q: &Momentum) -> SpatialOperator {
    let (e, m, p) = (q.energy(), q.mass(), q.p());
    let g = gammas();
    let ps = wedge(p, &spin_matrices());
    let gp = gamma_dot(p);
    std::array::from_fn(|i| {
        g[i + 1] * (I / (2.0 * e)) + ps[i] * C64::from(1.0 / (e * (e + m)))
            - gp * (I * (p[i] / (2.0 * e * e * (e + m))))
    })
}

/// δx^i = -i n⁻¹ ∂_i(n(p) l_{sign·p}) l_{sign·p}⁻¹, differentiated with respect to p.
fn delta_x_component(q: &Momentum, i: usize, sign: f64, h: f64) -> Result<ComplexMatrix4> {
    let nl = |t: f64| -> Result<ComplexMatrix4> {
        let mut p = *q.p();
        p[i] += t;
        let k = q.with_p(p);
        let signed = k.with_p(k.p() * sign);
        Ok(boost_for_momentum(&signed) * C64::from(normalization(&k)))
    };
    let d = central_difference(nl, 0.0, h)?;
    let signed = q.with_p(q.p() * sign);
    let inv = boost_for_momentum(&signed.flipped());
    Ok(d * inv * (-I / normalization(q)))
}

/// Position offset assembled as δx(p)Π̂₊ + δx(-p)Π̂₋ with δx from finite differences.
///
/// δx(-p) is the derivative with respect to p of n(p)l_{-p}, which carries the
/// chain-rule sign relative to evaluating δx at -p.
pub fn position_offset_from_boost(q: &Momentum) -> Result<SpatialOperator> {
    let (pp, pm) = projectors(q);
    let h = 1e-5 * q.magnitude().max(q.mass());
    let mut out = [ComplexMatrix4::zeros(); 3];
    for (i, slot) in out.iter_mut().enumerate() {
        let plus = delta_x_component(q, i, 1.0, h)?;
        let minus = delta_x_component(q, i, -1.0, h)?;
        *slot = plus * pp + minus * pm;
    }
    Ok(out)
}

/// Spin-type operator families derived from Ŝ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinTypeOperators {
    /// Ŝ_Fr = (E/m)Ŝ^(-).
    pub frankel: SpatialOperator,
    /// Ĉ_Fr = (E/m)Ŝ^(+).
    pub frankel_companion: SpatialOperator,
    /// Ŝ_PC = (m/E)Ŝ^(+).
    pub pryce_czochor: SpatialOperator,
    /// Ĉ_PC = (m/E)Ŝ^(-).
    pub pryce_czochor_companion: SpatialOperator,
    /// Ŝ_FG = ŜN̂.
    pub fradkin_good: SpatialOperator,
    /// Ŝ^(+) = ΘŜ.
    pub s_plus: SpatialOperator,
    /// Ŝ^(-) = Θ⁻¹Ŝ.
    pub s_minus: SpatialOperator,
}

pub fn spin_type_operators(q: &Momentum) -> SpinTypeOperators {
    let (e, m) = (q.energy(), q.mass());
    let s = pryce_e_spin(q);
    let s_plus = contract(&theta_tensor(q), &s);
    let s_minus = contract(&theta_tensor_inverse(q), &s);
    let n = n_operator(q);
    SpinTypeOperators {
        frankel: scale(&s_minus, e / m),
        frankel_companion: scale(&s_plus, e / m),
        pryce_czochor: scale(&s_plus, m / e),
        pryce_czochor_companion: scale(&s_minus, m / e),
        fradkin_good: s.map(|x| x * n),
        s_plus,
        s_minus,
    }
}

/// Ŝ_Fr = s + (i/2m)p∧γ.
pub fn frankel_spin_rational(q: &Momentum) -> SpatialOperator {
    let g = gammas();
    let pg = wedge(q.p(), &[g[1], g[2], g[3]]);
    let s = spin_matrices();
    std::array::from_fn(|i| s[i] + pg[i] * (I / (2.0 * q.mass())))
}

/// Ŝ_PC = (m²/E²)s + p(p·s)/E² + (im/2E²)p∧γ.
pub fn pryce_czochor_rational(q: &Momentum) -> SpatialOperator {
    let (e, m, p) = (q.energy(), q.mass(), q.p());
    let g = gammas();
    let pg = wedge(p, &[g[1], g[2], g[3]]);
    let s = spin_matrices();
    let sp = dot(p, &s);
    let e2 = e * e;
    std::array::from_fn(|i| {
        s[i] * C64::from(m * m / e2) + sp * C64::from(p[i] / e2) + pg[i] * (I * (m / (2.0 * e2)))
    })
}

/// Ŝ_PC as the diagonal part Π̂₊sΠ̂₊ + Π̂₋sΠ̂₋ of the Pauli-Dirac spin.
pub fn pryce_czochor_diagonal(q: &Momentum) -> SpatialOperator {
    let (pp, pm) = projectors(q);
    spin_matrices().map(|s| pp * s * pp + pm * s * pm)
}

/// Ŝ_FG = γ⁰s + p(p·s)/p² (N̂ - γ⁰); needs p ≠ 0.
pub fn fradkin_good_rational(q: &Momentum) -> Result<SpatialOperator> {
    let p = q.p();
    let p2 = p.norm_squared();
    if p2 == 0.0 {
        return Err(Error::ZeroMomentum);
    }
    let g0 = gammas()[0];
    let s = spin_matrices();
    let sp = dot(p, &s);
    let tail = sp * (n_operator(q) - g0);
    Ok(std::array::from_fn(|i| g0 * s[i] + tail * C64::from(p[i] / p2)))
}

/// Pauli-Lubanski components (Ŵ⁰, Ŵ¹, Ŵ², Ŵ³) with Ŵ⁰ = p·s and Ŵⁱ = mΘŜ.
pub fn pauli_lubanski(q: &Momentum) -> [ComplexMatrix4; 4] {
    let w0 = dot(q.p(), &spin_matrices());
    let wi = contract(&theta_tensor(q), &pryce_e_spin(q));
    let m = C64::from(q.mass());
    [w0, wi[0] * m, wi[1] * m, wi[2] * m]
}

/// (δX̂_c - δX̂, δX̂_d - δX̂) = (p∧Ŝ/(E(E+m)), -p∧Ŝ/(m(E+m))).
pub fn pryce_cd_offsets(q: &Momentum) -> (SpatialOperator, SpatialOperator) {
    let (e, m) = (q.energy(), q.mass());
    let ps = wedge(q.p(), &pryce_e_spin(q));
    (scale(&ps, 1.0 / (e * (e + m))), scale(&ps, -1.0 / (m * (e + m))))
}

/// Projector sandwiches of a 4×4 transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagOscParts {
    /// Π̂₊ÂΠ̂₊
    pub plus: ComplexMatrix4,
    /// Π̂₋ÂΠ̂₋
    pub minus: ComplexMatrix4,
    /// Π̂₊ÂΠ̂₋
    pub plus_minus: ComplexMatrix4,
    /// Π̂₋ÂΠ̂₊
    pub minus_plus: ComplexMatrix4,
}

impl DiagOscParts {
    pub fn diagonal(&self) -> ComplexMatrix4 {
        self.plus + self.minus
    }

    pub fn oscillating(&self) -> ComplexMatrix4 {
        self.plus_minus + self.minus_plus
    }

    pub fn reconstruct(&self) -> ComplexMatrix4 {
        self.diagonal() + self.oscillating()
    }
}

pub fn decompose_diag_osc(a: &ComplexMatrix4, q: &Momentum) -> DiagOscParts {
    let (pp, pm) = projectors(q);
    DiagOscParts { plus: pp * a * pp, minus: pm * a * pm, plus_minus: pp * a * pm, minus_plus: pm * a * pp }
}

/// A named momentum-space operator component, evaluable at any momentum.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FourierOperator {
    DiracHamiltonian,
    ProjectorPlus,
    ProjectorMinus,
    Sign,
    Momentum(usize),
    PryceSpin(usize),
    PryceCzochorSpin(usize),
    FrankelSpin(usize),
    FradkinGoodSpin(usize),
    ChakrabartiSpin(usize),
    PauliLubanski(usize),
    PositionOffset(usize),
    /// A momentum independent matrix such as γ^μ or s_i.
    Constant(ComplexMatrix4),
}

impl FourierOperator {
    pub fn eval(&self, q: &Momentum) -> ComplexMatrix4 {
        use FourierOperator::*;
        match *self {
            DiracHamiltonian => dirac_hamiltonian(q),
            ProjectorPlus => projectors(q).0,
            ProjectorMinus => projectors(q).1,
            Sign => n_operator(q),
            Momentum(i) => ComplexMatrix4::identity() * C64::from(q.p()[i]),
            PryceSpin(i) => pryce_e_spin(q)[i],
            PryceCzochorSpin(i) => spin_type_operators(q).pryce_czochor[i],
            FrankelSpin(i) => spin_type_operators(q).frankel[i],
            FradkinGoodSpin(i) => spin_type_operators(q).fradkin_good[i],
            ChakrabartiSpin(i) => chakrabarti_spin(q)[i],
            PauliLubanski(mu) => pauli_lubanski(q)[mu],
            PositionOffset(i) => pryce_e_position_offset(q)[i],
            Constant(m) => m,
        }
    }

    pub fn name(&self) -> String {
        use FourierOperator::*;
        match *self {
            DiracHamiltonian => "h_dirac".into(),
            ProjectorPlus => "projector_plus".into(),
            ProjectorMinus => "projector_minus".into(),
            Sign => "n_op".into(),
            Momentum(i) => format!("momentum[{}]", i + 1),
            PryceSpin(i) => format!("pryce_e_spin[{}]", i + 1),
            PryceCzochorSpin(i) => format!("pc_spin[{}]", i + 1),
            FrankelSpin(i) => format!("frankel_spin[{}]", i + 1),
            FradkinGoodSpin(i) => format!("fradkin_good[{}]", i + 1),
            ChakrabartiSpin(i) => format!("chakrabarti[{}]", i + 1),
            PauliLubanski(mu) => format!("pauli_lubanski[{mu}]"),
            PositionOffset(i) => format!("delta_x[{}]", i + 1),
            Constant(_) => "constant".into(),
        }
    }

    /// Whether the operator commutes with Ĥ_D at every momentum.
    pub fn is_conserved(&self) -> bool {
        use FourierOperator::*;
        !matches!(self, ChakrabartiSpin(_) | PositionOffset(_) | Constant(_))
    }

    /// Intrinsic parity π with γ⁰Â(-p)γ⁰ = πÂ(p), when defined.
    pub fn parity(&self) -> Option<f64> {
        use FourierOperator::*;
        match self {
            Momentum(_) | PositionOffset(_) | PauliLubanski(0) => Some(-1.0),
            Constant(_) => None,
            _ => Some(1.0),
        }
    }
}

/// Operator components registered under a catalog name.
pub fn catalog(name: &str) -> Result<Vec<FourierOperator>> {
    use FourierOperator::*;
    let spatial = |f: fn(usize) -> FourierOperator| (0..3).map(f).collect();
    Ok(match name {
        "pryce_e_spin" => spatial(PryceSpin),
        "pc_spin" => spatial(PryceCzochorSpin),
        "frankel_spin" => spatial(FrankelSpin),
        "fradkin_good" => spatial(FradkinGoodSpin),
        "chakrabarti" => spatial(ChakrabartiSpin),
        "pauli_lubanski" => (0..4).map(PauliLubanski).collect(),
        "delta_x" => spatial(PositionOffset),
        "momentum" => spatial(Momentum),
        "projector_plus" => vec![ProjectorPlus],
        "projector_minus" => vec![ProjectorMinus],
        "n_op" => vec![Sign],
        "h_dirac" => vec![DiracHamiltonian],
        _ => return Err(Error::UnknownName(name.into())),
    })
}

pub const CATALOG_NAMES: [&str; 11] = [
    "pryce_e_spin",
    "pc_spin",
    "frankel_spin",
    "fradkin_good",
    "chakrabarti",
    "pauli_lubanski",
    "delta_x",
    "projector_plus",
    "projector_minus",
    "n_op",
    "h_dirac",
];

/// Three-vector of operator components p^i·1.
pub fn momentum_vector(p: &Vec3) -> SpatialOperator {
    std::array::from_fn(|i| ComplexMatrix4::identity() * C64::from(p[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{anticommutator, commutator, levi_civita, max_abs, spin_matrix};
    use crate::polarization::PolarizationBasis;
    use crate::sampling::MomentumSampler;
    use crate::spinors::{projector_from_spinors, u_spinor};

    fn samples(seed: u64) -> Vec<Momentum> {
        MomentumSampler::new(seed, 1.0).sample_n(40)
    }

    fn close(a: &ComplexMatrix4, b: &ComplexMatrix4, tol: f64) -> bool {
        max_abs(&(a - b)) <= tol
    }

    #[test]
    fn hamiltonian_spectrum_and_projectors() {
        for q in samples(1) {
            let h = dirac_hamiltonian(&q);
            let (pp, pm) = projectors(&q);
            let e = C64::from(q.energy());
            assert!(close(&h, &h.adjoint(), 1e-14));
            assert!(close(&h, &((pp - pm) * e), 1e-12));
            assert!(close(&(pp * pp), &pp, 1e-13));
            assert!(close(&(pp * pm), &ComplexMatrix4::zeros(), 1e-13));
            assert!(close(&(pp + pm), &ComplexMatrix4::identity(), 1e-15));
            let n = n_operator(&q);
            assert!(close(&(n * n), &ComplexMatrix4::identity(), 1e-13));
            let (bp, bm) = projectors_from_boosts(&q);
            assert!(close(&bp, &pp, 1e-12) && close(&bm, &pm, 1e-12));
            let u = u_spinor(&PolarizationBasis::Helicity, &q, crate::polarization::Spin::Up).unwrap();
            assert!((h * u - u * e).norm() < 1e-12);
            for b in [PolarizationBasis::momentum_spin(), PolarizationBasis::Helicity] {
                let (sp, sm) = projector_from_spinors(&b, &q).unwrap();
                assert!(close(&sp, &pp, 1e-12) && close(&sm, &pm, 1e-12));
            }
        }
        let rest = Momentum::at_rest(1.5).unwrap();
        assert_eq!(n_operator(&rest), gammas()[0]);
    }

    #[test]
    fn conserved_spin_forms_agree() {
        for q in samples(2) {
            let a = pryce_e_spin(&q);
            let b = pryce_e_spin_sandwich(&q);
            let h = dirac_hamiltonian(&q);
            let mut square = ComplexMatrix4::zeros();
            for i in 0..3 {
                assert!(close(&a[i], &b[i], 1e-12));
                assert!(close(&a[i], &a[i].adjoint(), 1e-14));
                assert!(max_abs(&commutator(&h, &a[i])) < 1e-12);
                square += a[i] * a[i];
                for j in 0..3 {
                    let c = commutator(&a[i], &a[j]);
                    let rhs = (0..3)
                        .fold(ComplexMatrix4::zeros(), |acc, k| acc + a[k] * (I * levi_civita(i, j, k)));
                    assert!(close(&c, &rhs, 1e-12));
                    let delta = if i == j { 0.5 } else { 0.0 };
                    assert!(close(
                        &anticommutator(&a[i], &a[j]),
                        &(ComplexMatrix4::identity() * C64::from(delta)),
                        1e-12
                    ));
                }
            }
            assert!(close(&square, &(ComplexMatrix4::identity() * C64::from(0.75)), 1e-12));
        }
        let rest = Momentum::at_rest(1.0).unwrap();
        for (i, s) in pryce_e_spin(&rest).iter().enumerate() {
            assert_eq!(*s, spin_matrix(i));
        }
    }

    #[test]
    fn position_offset_identities() {
        for q in samples(3) {
            let dx = pryce_e_position_offset(&q);
            let s = pryce_e_spin(&q);
            let p = q.p();
            let lhs = wedge(p, &dx).map(|m| -m);
            for i in 0..3 {
                assert!(close(&lhs[i], &(spin_matrix(i) - s[i]), 1e-12));
            }
        }
        let rest = Momentum::at_rest(2.0).unwrap();
        let g = gammas();
        for (i, d) in pryce_e_position_offset(&rest).iter().enumerate() {
            assert!(close(d, &(g[i + 1] * (I / 4.0)), 1e-15));
        }
    }

    #[test]
    fn boost_form_of_position_offset() {
        for q in samples(4).into_iter().take(10) {
            let a = pryce_e_position_offset(&q);
            let b = position_offset_from_boost(&q).unwrap();
            for i in 0..3 {
                assert!(close(&a[i], &b[i], 1e-6), "{}", max_abs(&(a[i] - b[i])));
            }
        }
    }

    #[test]
    fn chakrabarti_relations() {
        for q in samples(5) {
            let sp = chakrabarti_spin(&q);
            let sm = chakrabarti_spin(&q.flipped());
            let (pp, pm) = projectors(&q);
            let s = pryce_e_spin(&q);
            for i in 0..3 {
                assert!(close(&sp[i], &sm[i].adjoint(), 1e-13));
                assert!(close(&(sp[i] * pp), &(pp * sm[i]), 1e-12));
                assert!(close(&(sm[i] * pm), &(pm * sp[i]), 1e-12));
                assert!(close(&(sp[i] * pp + sm[i] * pm), &s[i], 1e-12));
            }
        }
        let q = Momentum::from_components(0.7, -0.2, 0.4, 1.0).unwrap();
        let h = dirac_hamiltonian(&q);
        assert!(chakrabarti_spin(&q).iter().any(|s| max_abs(&commutator(&h, s)) > 1e-6));
    }

    #[test]
    fn spin_type_identities() {
        for q in samples(6) {
            let (e, m) = (q.energy(), q.mass());
            let t = spin_type_operators(&q);
            let one = ComplexMatrix4::identity();
            let fr = frankel_spin_rational(&q);
            let pc = pryce_czochor_rational(&q);
            let pcd = pryce_czochor_diagonal(&q);
            let fg = fradkin_good_rational(&q).unwrap();
            let h = dirac_hamiltonian(&q);
            let n = n_operator(&q);
            let mut fr2 = ComplexMatrix4::zeros();
            let mut pc2 = ComplexMatrix4::zeros();
            for i in 0..3 {
                assert!(close(&t.frankel[i], &fr[i], 1e-12));
                assert!(close(&t.pryce_czochor[i], &pc[i], 1e-12));
                assert!(close(&t.pryce_czochor[i], &pcd[i], 1e-12));
                assert!(close(&t.fradkin_good[i], &fg[i], 1e-12));
                assert!(close(
                    &t.pryce_czochor_companion[i],
                    &(t.frankel[i] * C64::from(m * m / (e * e))),
                    1e-12
                ));
                assert!(close(
                    &t.frankel_companion[i],
                    &(t.pryce_czochor[i] * C64::from(e * e / (m * m))),
                    1e-10
                ));
                for op in [
                    &t.frankel,
                    &t.pryce_czochor,
                    &t.fradkin_good,
                    &t.frankel_companion,
                    &t.pryce_czochor_companion,
                ] {
                    assert!(max_abs(&commutator(&h, &op[i])) < 1e-10);
                }
                fr2 += t.frankel[i] * t.frankel[i];
                pc2 += t.pryce_czochor[i] * t.pryce_czochor[i];
                for j in 0..3 {
                    let eps = |v: &SpatialOperator| {
                        (0..3).fold(ComplexMatrix4::zeros(), |acc, k| acc + v[k] * (I * levi_civita(i, j, k)))
                    };
                    assert!(close(
                        &commutator(&t.frankel[i], &t.frankel[j]),
                        &eps(&t.frankel_companion),
                        1e-10
                    ));
                    assert!(close(
                        &commutator(&t.pryce_czochor[i], &t.pryce_czochor[j]),
                        &eps(&t.pryce_czochor_companion),
                        1e-12
                    ));
                    let fg_rhs = n * eps(&t.fradkin_good);
                    assert!(close(&commutator(&t.fradkin_good[i], &t.fradkin_good[j]), &fg_rhs, 1e-12));
                }
            }
            assert!(close(&fr2, &(one * C64::from(0.25 * (1.0 + 2.0 * e * e / (m * m)))), 1e-10));
            assert!(close(&pc2, &(one * C64::from(0.25 * (1.0 + 2.0 * m * m / (e * e)))), 1e-12));
            let ps = dot(q.p(), &spin_matrices());
            for v in [&t.frankel, &t.pryce_czochor, &pryce_e_spin(&q)] {
                assert!(close(&dot(q.p(), v), &ps, 1e-11));
            }
        }
        let q = Momentum::from_components(0.0, 0.0, 1.0, 1.0).unwrap();
        let fr = spin_type_operators(&q).frankel;
        let sq = fr.iter().fold(ComplexMatrix4::zeros(), |a, x| a + x * x);
        assert!(close(&sq, &(ComplexMatrix4::identity() * C64::from(1.25)), 1e-14));
    }

    #[test]
    fn pauli_lubanski_invariants() {
        for q in samples(7) {
            let w = pauli_lubanski(&q);
            let e = q.energy();
            let p = q.p();
            let contraction =
                w[0] * C64::from(e) - w[1] * C64::from(p.x) - w[2] * C64::from(p.y) - w[3] * C64::from(p.z);
            let scale = 1.0 + e * e;
            assert!(max_abs(&contraction) < 1e-12 * scale);
            let square = w[0] * w[0] - w[1] * w[1] - w[2] * w[2] - w[3] * w[3];
            let target = ComplexMatrix4::identity() * C64::from(-0.75 * q.mass() * q.mass());
            assert!(max_abs(&(square - target)) < 1e-12 * scale);
            assert!(close(&w[0], &dot(p, &pryce_e_spin(&q)), 1e-12));
        }
        let rest = Momentum::at_rest(2.0).unwrap();
        let w = pauli_lubanski(&rest);
        assert_eq!(w[0], ComplexMatrix4::zeros());
        assert!(close(&w[1], &(spin_matrix(0) * C64::from(2.0)), 1e-15));
    }

    #[test]
    fn pryce_cd_splittings() {
        for q in samples(8) {
            let (c, d) = pryce_cd_offsets(&q);
            let dx = pryce_e_position_offset(&q);
            let t = spin_type_operators(&q);
            let ratio = -q.energy() / q.mass();
            let xc: SpatialOperator = std::array::from_fn(|i| dx[i] + c[i]);
            let xd: SpatialOperator = std::array::from_fn(|i| dx[i] + d[i]);
            let jc = wedge(q.p(), &xc);
            let jd = wedge(q.p(), &xd);
            for i in 0..3 {
                assert!(close(&d[i], &(c[i] * C64::from(ratio)), 1e-13));
                assert!(close(&(-jc[i]), &(spin_matrix(i) - t.pryce_czochor[i]), 1e-12));
                assert!(close(&(-jd[i]), &(spin_matrix(i) - t.frankel[i]), 1e-11));
            }
        }
        let (c, d) = pryce_cd_offsets(&Momentum::at_rest(1.0).unwrap());
        assert!(c.iter().chain(d.iter()).all(|m| max_abs(m) == 0.0));
    }

    #[test]
    fn decomposition() {
        for q in samples(9) {
            let s = pryce_e_spin(&q);
            let parts = decompose_diag_osc(&s[0], &q);
            assert!(max_abs(&parts.oscillating()) < 1e-12);
            let pd = decompose_diag_osc(&spin_matrix(1), &q);
            assert!(close(&pd.diagonal(), &spin_type_operators(&q).pryce_czochor[1], 1e-12));
            let g1 = gammas()[1];
            let p = decompose_diag_osc(&g1, &q);
            assert!(close(&p.reconstruct(), &g1, 1e-13));
            let h = dirac_hamiltonian(&q);
            let e = C64::from(2.0 * q.energy());
            assert!(close(&commutator(&h, &p.plus_minus), &(p.plus_minus * e), 1e-11));
            let herm = gammas()[0];
            let hp = decompose_diag_osc(&herm, &q);
            assert!(close(&hp.plus_minus.adjoint(), &hp.minus_plus, 1e-13));
        }
    }

    #[test]
    fn catalog_metadata() {
        let g0 = gammas()[0];
        for q in samples(10).into_iter().take(10) {
            for name in CATALOG_NAMES {
                for op in catalog(name).unwrap() {
                    let a = op.eval(&q);
                    let b = op.eval(&q.flipped());
                    if let Some(par) = op.parity() {
                        assert!(close(&(g0 * b * g0), &(a * C64::from(par)), 1e-12), "{}", op.name());
                    }
                    let h = dirac_hamiltonian(&q);
                    let conserved = max_abs(&commutator(&h, &a)) < 1e-10;
                    assert_eq!(conserved, op.is_conserved(), "{}", op.name());
                }
            }
        }
        assert!(catalog("nope").is_err());
        assert_eq!(catalog("pauli_lubanski").unwrap().len(), 4);
    }
}
