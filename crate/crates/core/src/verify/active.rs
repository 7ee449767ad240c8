//! Closed-form identities of the 4×4 transforms, the polarization bases and the
//! mode spinors.

use nalgebra::{Matrix3, Matrix4, SMatrix, Vector4};

use crate::algebra::{
    anticommutator, boost_for_momentum, charge_conjugation, commutator, dot, foldy_wouthuysen, gamma5,
    gammas, levi_civita, lorentz_boost_matrix, lorentz_of, max_abs, metric, pauli, sigma_dot, spin_matrices,
    spin_matrix, theta_tensor, theta_tensor_inverse, wedge, ComplexMatrix2, ComplexMatrix4, Conventions,
    Momentum, SpatialOperator, Vec3, C64, I,
};
use crate::error::Error;
use crate::operators::{
    chakrabarti_spin, decompose_diag_osc, dirac_hamiltonian, fradkin_good_rational, frankel_spin_rational,
    n_operator, pauli_lubanski as pl_transform, position_offset_from_boost, projectors as projector_pair,
    projectors_from_boosts, pryce_cd_offsets, pryce_czochor_diagonal, pryce_czochor_rational,
    pryce_e_position_offset, pryce_e_spin, pryce_e_spin_sandwich, spin_type_operators,
};
use crate::polarization::{
    common_spinor, conjugate_spinor, direction_matrix, helicity_spinor, polarization_sum, PolarizationBasis,
    Spin,
};
use crate::spinors::{
    normalization, projector_from_spinors, rest_spinors, slash, u_spinor, v_spinor, v_spinor_boosted,
};

use super::{Ledger, VerifyConfig, EXACT_TOL};

type M4 = ComplexMatrix4;

fn c(x: f64) -> C64 {
    C64::from(x)
}

fn one() -> M4 {
    M4::identity()
}

/// Σ_k iε_ijk v_k.
fn eps<const N: usize>(v: &[SMatrix<C64, N, N>; 3], i: usize, j: usize) -> SMatrix<C64, N, N> {
    (0..3).fold(SMatrix::zeros(), |acc, k| acc + v[k] * (I * levi_civita(i, j, k)))
}

fn real_relative<const N: usize>(a: &SMatrix<f64, N, N>, b: &SMatrix<f64, N, N>) -> f64 {
    (a - b).abs().max() / b.abs().max().max(1.0)
}

fn bases() -> [PolarizationBasis; 3] {
    [
        PolarizationBasis::momentum_spin(),
        PolarizationBasis::Common { n: Vec3::new(0.6, 0.0, 0.8) },
        PolarizationBasis::Helicity,
    ]
}

pub(super) fn clifford(l: &mut Ledger, cfg: &VerifyConfig) {
    let g = gammas();
    for mu in 0..4 {
        for nu in 0..4 {
            let want = one() * c(2.0 * metric(mu, nu));
            l.matrix("{γ^μ, γ^ν} = 2η^μν", 1e-15, &anticommutator(&g[mu], &g[nu]), &want);
        }
        let g5 = gamma5();
        l.matrix("{γ^μ, γ⁵} = 0", 1e-15, &anticommutator(&g[mu], &g5), &M4::zeros());
    }
    l.matrix("γ⁵ = iγ⁰γ¹γ²γ³", 1e-15, &(g[0] * g[1] * g[2] * g[3] * I), &gamma5());
    let cc = charge_conjugation();
    l.matrix("C = C⁻¹", 1e-15, &(cc * cc), &one());
    for mu in 0..4 {
        // C γ^μ* C = -γ^μ
        l.matrix("Cγ^μ*C = -γ^μ", 1e-15, &(cc * g[mu].conjugate() * cc), &(-g[mu]));
    }
    let s = spin_matrices();
    for i in 0..3 {
        for j in 0..3 {
            l.matrix("[s_i, s_j] = iε_ijk s_k", 1e-15, &commutator(&s[i], &s[j]), &eps(&s, i, j));
        }
    }
    for q in cfg.momenta(1) {
        let n = q.p() / q.magnitude();
        let ns = sigma_dot(&n);
        l.matrix("(n·σ)² = 1", EXACT_TOL, &(ns * ns), &ComplexMatrix2::identity());
        let g_dot = (0..3).fold(M4::zeros(), |a, i| a + g[i + 1] * c(q.p()[i]));
        let sl = slash(&q);
        l.matrix("(γ·p)² = m²", EXACT_TOL, &(sl * sl), &(one() * c(q.mass().powi(2))));
        l.matrix("γ^i p^i = slash decomposition", EXACT_TOL, &(g[0] * c(q.energy()) - g_dot), &sl);
    }
}

pub(super) fn boosts(l: &mut Ledger, cfg: &VerifyConfig) {
    let g = gammas();
    let g0 = g[0];
    let half = c(0.5);
    let eta = Matrix4::from_diagonal(&Vector4::from(Conventions::METRIC));
    for q in cfg.momenta(2) {
        let (e, m) = (q.energy(), q.mass());
        let lp = boost_for_momentum(&q);
        let lm = boost_for_momentum(&q.flipped());
        l.matrix("l_p Hermitian", EXACT_TOL, &lp.adjoint(), &lp);
        l.matrix("l_p l_-p = 1", EXACT_TOL, &(lp * lm), &one());
        let l2 = (one() * c(e) + g0 * (0..3).fold(M4::zeros(), |a, i| a + g[i + 1] * c(q.p()[i]))) / c(m);
        l.matrix("l_p² = (E + γ⁰γ·p)/m", EXACT_TOL, &(lp * lp), &l2);
        for sign in [1.0, -1.0] {
            let proj = (one() + g0 * c(sign)) * half;
            l.matrix(
                "(1±γ⁰)/2 l_p² (1±γ⁰)/2 = (E/m)(1±γ⁰)/2",
                EXACT_TOL,
                &(proj * lp * lp * proj),
                &(proj * c(e / m)),
            );
        }
        let big = lorentz_boost_matrix(&q);
        for a in 0..4 {
            let lhs = lm * g[a] * lp;
            let rhs = (0..4).fold(M4::zeros(), |acc, b| acc + g[b] * c(big[(a, b)]));
            l.matrix("l_p⁻¹γ^α l_p = (L_p)^α_β γ^β", EXACT_TOL, &lhs, &rhs);
        }
        l.record("L_p η L_pᵀ = η", EXACT_TOL, real_relative(&(big * eta * big.transpose()), &eta));
        let rest = Vector4::new(m, 0.0, 0.0, 0.0);
        let image = big * rest;
        let four = Vector4::from(q.four_vector());
        l.record("L_p (m, 0) = (E, p)", EXACT_TOL, (image - four).abs().max() / four.abs().max().max(1.0));
        if let Some(lam) = l.guard("Λ(l_p) = L_p", lorentz_of(&lp)) {
            l.record("Λ(l_p) = L_p", EXACT_TOL, real_relative(&lam, &big));
        }
        let t = theta_tensor(&q);
        let ti = theta_tensor_inverse(&q);
        l.record("ΘΘ⁻¹ = 1", EXACT_TOL, real_relative(&(t * ti), &Matrix3::identity()));
        let space = big.fixed_view::<3, 3>(1, 1).into_owned();
        l.record("Θ = space block of L_p", EXACT_TOL, real_relative(&space, &t));
        let u = foldy_wouthuysen(&q);
        let um = foldy_wouthuysen(&q.flipped());
        l.matrix("U_FW unitary", EXACT_TOL, &(u * u.adjoint()), &one());
        l.matrix("U_FW(p)† = U_FW(-p)", EXACT_TOL, &u.adjoint(), &um);
        let h = dirac_hamiltonian(&q);
        l.matrix("U_FW(p)Ĥ_D U_FW(-p) = γ⁰E", EXACT_TOL, &(u * h * um), &(g0 * c(e)));
        let s = pryce_e_spin(&q);
        let s0 = spin_matrices();
        for i in 0..3 {
            l.matrix("U_FW(p)Ŝ U_FW(-p) = s", EXACT_TOL, &(u * s[i] * um), &s0[i]);
        }
    }
    let rest = Momentum::at_rest(cfg.mass).expect("mass validated");
    l.matrix("l_0 = 1", 0.0, &boost_for_momentum(&rest), &one());
}

pub(super) fn projectors(l: &mut Ledger, cfg: &VerifyConfig) {
    for q in cfg.momenta(3) {
        let h = dirac_hamiltonian(&q);
        let (pp, pm) = projector_pair(&q);
        let e = c(q.energy());
        l.matrix("Ĥ_D Hermitian", EXACT_TOL, &h.adjoint(), &h);
        l.matrix("Ĥ_D² = E²", EXACT_TOL, &(h * h), &(one() * e * e));
        l.matrix("Π₊² = Π₊", EXACT_TOL, &(pp * pp), &pp);
        l.matrix("Π₋² = Π₋", EXACT_TOL, &(pm * pm), &pm);
        l.matrix("Π₊Π₋ = 0", EXACT_TOL, &(pp * pm), &M4::zeros());
        l.matrix("Π₊ + Π₋ = 1", EXACT_TOL, &(pp + pm), &one());
        l.matrix("Ĥ_D = E(Π₊ - Π₋)", EXACT_TOL, &h, &((pp - pm) * e));
        let n = n_operator(&q);
        l.matrix("N̂² = 1", EXACT_TOL, &(n * n), &one());
        let (bp, bm) = projectors_from_boosts(&q);
        l.matrix("Π₊ = (m/E) l_p(1+γ⁰)/2 l_p", EXACT_TOL, &bp, &pp);
        l.matrix("Π₋ = (m/E) l_-p(1-γ⁰)/2 l_-p", EXACT_TOL, &bm, &pm);
        let g1 = gammas()[1];
        let parts = decompose_diag_osc(&g1, &q);
        l.matrix("diagonal + oscillating parts reconstruct", EXACT_TOL, &parts.reconstruct(), &g1);
        l.matrix(
            "[Ĥ_D, Π₊AΠ₋] = 2EΠ₊AΠ₋",
            EXACT_TOL,
            &commutator(&h, &parts.plus_minus),
            &(parts.plus_minus * e * c(2.0)),
        );
    }
    let rest = Momentum::at_rest(cfg.mass).expect("mass validated");
    l.matrix("N̂(0) = γ⁰", 0.0, &n_operator(&rest), &gammas()[0]);
}

pub(super) fn pryce_spin(l: &mut Ledger, cfg: &VerifyConfig) {
    let s0 = spin_matrices();
    let quarter3 = one() * c(0.75);
    for q in cfg.momenta(4) {
        let s = pryce_e_spin(&q);
        let sw = pryce_e_spin_sandwich(&q);
        let h = dirac_hamiltonian(&q);
        let mut square = M4::zeros();
        for i in 0..3 {
            l.matrix("Ŝ rational = boost sandwich", EXACT_TOL, &s[i], &sw[i]);
            l.matrix("Ŝ Hermitian", EXACT_TOL, &s[i].adjoint(), &s[i]);
            l.matrix("[Ĥ_D, Ŝ_i] = 0", EXACT_TOL, &commutator(&h, &s[i]), &M4::zeros());
            square += s[i] * s[i];
            for j in 0..3 {
                l.matrix("[Ŝ_i, Ŝ_j] = iε_ijk Ŝ_k", EXACT_TOL, &commutator(&s[i], &s[j]), &eps(&s, i, j));
                let delta = if i == j { 0.5 } else { 0.0 };
                l.matrix(
                    "{Ŝ_i, Ŝ_j} = δ_ij/2",
                    EXACT_TOL,
                    &anticommutator(&s[i], &s[j]),
                    &(one() * c(delta)),
                );
            }
        }
        l.matrix("Ŝ² = 3/4", EXACT_TOL, &square, &quarter3);
        let dx = pryce_e_position_offset(&q);
        let pdx = wedge(q.p(), &dx);
        for i in 0..3 {
            // (δX̂∧p)_i = -(p∧δX̂)_i
            l.matrix("δX̂∧p = s - Ŝ", EXACT_TOL, &(-pdx[i]), &(s0[i] - s[i]));
            l.matrix("δX̂ Hermitian", EXACT_TOL, &dx[i].adjoint(), &dx[i]);
        }
        let sp = chakrabarti_spin(&q);
        let sm = chakrabarti_spin(&q.flipped());
        let (pp, pm) = projector_pair(&q);
        for i in 0..3 {
            l.matrix("s(p) = s†(-p)", EXACT_TOL, &sp[i], &sm[i].adjoint());
            l.matrix("s(p)Π₊ = Π₊s(-p)", EXACT_TOL, &(sp[i] * pp), &(pp * sm[i]));
            l.matrix("s(-p)Π₋ = Π₋s(p)", EXACT_TOL, &(sm[i] * pm), &(pm * sp[i]));
            l.matrix("Ŝ = s(p)Π₊ + s(-p)Π₋", EXACT_TOL, &(sp[i] * pp + sm[i] * pm), &s[i]);
        }
        let parts = decompose_diag_osc(&s[0], &q);
        l.matrix("Ŝ has no oscillating part", EXACT_TOL, &parts.oscillating(), &M4::zeros());
    }
    for q in cfg.fd_momenta(5) {
        let a = pryce_e_position_offset(&q);
        if let Some(b) = l.guard("δX̂ closed form = boost derivative form", position_offset_from_boost(&q))
        {
            for i in 0..3 {
                l.matrix("δX̂ closed form = boost derivative form", 1e-6, &b[i], &a[i]);
            }
        }
    }
    let rest = Momentum::at_rest(cfg.mass).expect("mass validated");
    let s = pryce_e_spin(&rest);
    for i in 0..3 {
        l.matrix("Ŝ(0) = s", 0.0, &s[i], &s0[i]);
    }
    let witness = Momentum::from_components(0.7, -0.2, 0.4, cfg.mass).expect("finite");
    let h = dirac_hamiltonian(&witness);
    let moving = chakrabarti_spin(&witness).iter().any(|s| max_abs(&commutator(&h, s)) > 1e-6);
    l.expect("s(p) is not conserved", moving);
}

pub(super) fn spin_types(l: &mut Ledger, cfg: &VerifyConfig) {
    for q in cfg.momenta(6) {
        let (e, m) = (q.energy(), q.mass());
        let t = spin_type_operators(&q);
        let fr = frankel_spin_rational(&q);
        let pc = pryce_czochor_rational(&q);
        let pcd = pryce_czochor_diagonal(&q);
        let h = dirac_hamiltonian(&q);
        let n = n_operator(&q);
        let (xc, xd) = pryce_cd_offsets(&q);
        let dx = pryce_e_position_offset(&q);
        let s0 = spin_matrices();
        let mut fr2 = M4::zeros();
        let mut pc2 = M4::zeros();
        let fg = l.guard("Ŝ_FG = ŜN̂", fradkin_good_rational(&q));
        for i in 0..3 {
            l.matrix("Ŝ_Fr = s + (i/2m)p∧γ", EXACT_TOL, &t.frankel[i], &fr[i]);
            l.matrix("Ŝ_PC rational form", EXACT_TOL, &t.pryce_czochor[i], &pc[i]);
            l.matrix("Ŝ_PC = Π₊sΠ₊ + Π₋sΠ₋", EXACT_TOL, &t.pryce_czochor[i], &pcd[i]);
            if let Some(fg) = &fg {
                l.matrix("Ŝ_FG = ŜN̂", EXACT_TOL, &t.fradkin_good[i], &fg[i]);
            }
            l.matrix(
                "Ĉ_PC = (m²/E²)Ŝ_Fr",
                EXACT_TOL,
                &t.pryce_czochor_companion[i],
                &(t.frankel[i] * c(m * m / (e * e))),
            );
            l.matrix(
                "Ĉ_Fr = (E²/m²)Ŝ_PC",
                EXACT_TOL,
                &t.frankel_companion[i],
                &(t.pryce_czochor[i] * c(e * e / (m * m))),
            );
            for (name, op) in [
                ("[Ĥ_D, Ŝ_Fr] = 0", &t.frankel),
                ("[Ĥ_D, Ŝ_PC] = 0", &t.pryce_czochor),
                ("[Ĥ_D, Ŝ_FG] = 0", &t.fradkin_good),
            ] {
                let scale = max_abs(&h) * max_abs(&op[i]);
                l.record(name, EXACT_TOL, max_abs(&commutator(&h, &op[i])) / scale.max(1.0));
            }
            fr2 += t.frankel[i] * t.frankel[i];
            pc2 += t.pryce_czochor[i] * t.pryce_czochor[i];
            for j in 0..3 {
                l.matrix(
                    "[Ŝ_Fr,i, Ŝ_Fr,j] = iε_ijk Ĉ_Fr,k",
                    EXACT_TOL,
                    &commutator(&t.frankel[i], &t.frankel[j]),
                    &eps(&t.frankel_companion, i, j),
                );
                l.matrix(
                    "[Ŝ_PC,i, Ŝ_PC,j] = iε_ijk Ĉ_PC,k",
                    EXACT_TOL,
                    &commutator(&t.pryce_czochor[i], &t.pryce_czochor[j]),
                    &eps(&t.pryce_czochor_companion, i, j),
                );
                l.matrix(
                    "[Ŝ_FG,i, Ŝ_FG,j] = iε_ijk N̂Ŝ_FG,k",
                    EXACT_TOL,
                    &commutator(&t.fradkin_good[i], &t.fradkin_good[j]),
                    &(n * eps(&t.fradkin_good, i, j)),
                );
            }
            let jc: SpatialOperator = std::array::from_fn(|k| dx[k] + xc[k]);
            let jd: SpatialOperator = std::array::from_fn(|k| dx[k] + xd[k]);
            l.matrix("δX̂_c∧p = s - Ŝ_PC", EXACT_TOL, &(-wedge(q.p(), &jc)[i]), &(s0[i] - t.pryce_czochor[i]));
            l.matrix("δX̂_d∧p = s - Ŝ_Fr", EXACT_TOL, &(-wedge(q.p(), &jd)[i]), &(s0[i] - t.frankel[i]));
            l.matrix("δX̂_d - δX̂ = -(E/m)(δX̂_c - δX̂)", EXACT_TOL, &xd[i], &(xc[i] * c(-e / m)));
        }
        l.matrix(
            "Ŝ_Fr² = ¼(1 + 2E²/m²)",
            EXACT_TOL,
            &fr2,
            &(one() * c(0.25 * (1.0 + 2.0 * e * e / (m * m)))),
        );
        l.matrix(
            "Ŝ_PC² = ¼(1 + 2m²/E²)",
            EXACT_TOL,
            &pc2,
            &(one() * c(0.25 * (1.0 + 2.0 * m * m / (e * e)))),
        );
        let ps = dot(q.p(), &spin_matrices());
        for v in [&t.frankel, &t.pryce_czochor, &pryce_e_spin(&q)] {
            l.matrix("p·Ŝ_X = p·s", EXACT_TOL, &dot(q.p(), v), &ps);
        }
    }
}

pub(super) fn pauli_lubanski(l: &mut Ledger, cfg: &VerifyConfig) {
    for q in cfg.momenta(7) {
        let w = pl_transform(&q);
        let (e, m, p) = (q.energy(), q.mass(), q.p());
        let scale = 1.0 + e * e;
        let contraction = w[0] * c(e) - w[1] * c(p.x) - w[2] * c(p.y) - w[3] * c(p.z);
        l.record("p^μŴ_μ = 0", EXACT_TOL, max_abs(&contraction) / scale);
        let square = w[0] * w[0] - w[1] * w[1] - w[2] * w[2] - w[3] * w[3];
        let target = one() * c(-0.75 * m * m);
        l.record("Ŵ^μŴ_μ = -¾m²", EXACT_TOL, max_abs(&(square - target)) / scale);
        l.matrix("Ŵ⁰ = p·Ŝ", EXACT_TOL, &w[0], &dot(p, &pryce_e_spin(&q)));
        let h = dirac_hamiltonian(&q);
        for wm in &w {
            let r = max_abs(&commutator(&h, wm)) / (max_abs(&h) * max_abs(wm)).max(1.0);
            l.record("[Ĥ_D, Ŵ^μ] = 0", EXACT_TOL, r);
        }
        let g0 = gammas()[0];
        let wf = pl_transform(&q.flipped());
        l.matrix("γ⁰Ŵ⁰(-p)γ⁰ = -Ŵ⁰(p)", EXACT_TOL, &(g0 * wf[0] * g0), &(-w[0]));
        for i in 1..4 {
            l.matrix("γ⁰Ŵ^i(-p)γ⁰ = Ŵ^i(p)", EXACT_TOL, &(g0 * wf[i] * g0), &w[i]);
        }
    }
    let rest = Momentum::at_rest(cfg.mass).expect("mass validated");
    let w = pl_transform(&rest);
    l.matrix("Ŵ⁰(0) = 0", 0.0, &w[0], &M4::zeros());
    for i in 0..3 {
        l.matrix("Ŵ^i(0) = m s_i", EXACT_TOL, &w[i + 1], &(spin_matrix(i) * c(cfg.mass)));
    }
}

pub(super) fn polarization(l: &mut Ledger, cfg: &VerifyConfig) {
    let id2 = ComplexMatrix2::identity();
    for q in cfg.momenta(8) {
        for b in bases() {
            let Some(x) = l.guard("ξ basis available", b.xi_matrix(&q)) else { continue };
            let Some(y) = l.guard("η basis available", b.eta_matrix(&q)) else { continue };
            l.matrix("ξ_σ†ξ_σ' = δ", 1e-14, &(x.adjoint() * x), &id2);
            l.matrix("Σ_σ ξ_σξ_σ† = 1", 1e-14, &(x * x.adjoint()), &id2);
            l.matrix("η_σ†η_σ' = δ", 1e-14, &(y.adjoint() * y), &id2);
            l.matrix("Σ_σ η_ση_σ† = 1", 1e-14, &(y * y.adjoint()), &id2);
            let Some(n) = l.guard("direction defined", b.direction(&q)) else { continue };
            let nsig = direction_matrix(&n);
            l.matrix("Σ_σ 2σξ_σξ_σ† = n·σ", 1e-14, &polarization_sum(&x), &nsig);
            l.matrix("Σ_σ 2ση_ση_σ† = -n·σ", 1e-14, &polarization_sum(&y), &(-nsig));
            for (k, sigma) in Spin::BOTH.into_iter().enumerate() {
                let xi = x.column(k).into_owned();
                let lhs = nsig * xi * c(0.5);
                l.record("(n·σ/2)ξ_σ = σξ_σ", 1e-14, (lhs - xi * c(sigma.value())).norm());
                let eta = conjugate_spinor(&xi);
                l.record("η_σ = iσ₂ξ_σ*", 0.0, (eta - y.column(k)).norm());
            }
            let Some(sig) = l.guard("Σ defined", b.sigma_matrices(&q)) else { continue };
            let Some(direct) = l.guard("Σ defined", b.sigma_from_spinors(&q)) else { continue };
            for i in 0..3 {
                l.matrix("Σ_i closed form = ξ†σ_iξ", EXACT_TOL, &sig[i], &direct[i]);
                l.matrix("Σ_i² = 1", EXACT_TOL, &(sig[i] * sig[i]), &id2);
                for j in 0..3 {
                    let want = eps(&sig, i, j) * c(2.0);
                    l.matrix("[Σ_i, Σ_j] = 2iε_ijk Σ_k", EXACT_TOL, &commutator(&sig[i], &sig[j]), &want);
                }
            }
            if b == PolarizationBasis::Helicity {
                let psig = dot(q.p(), &sig);
                l.matrix("p^iΣ_i = |p|σ₃", EXACT_TOL, &psig, &(pauli(2) * c(q.magnitude())));
            }
            let Some(om) = l.guard("Ω defined", b.omega_connection(&q)) else { continue };
            let po = dot(q.p(), &om);
            l.record(
                "p·Ω = 0",
                EXACT_TOL,
                max_abs(&po) / (1.0 + q.magnitude() * om.iter().map(max_abs).fold(0.0, f64::max)),
            );
            for o in &om {
                l.matrix("Ω_i anti-Hermitian", EXACT_TOL, &(-o.adjoint()), o);
            }
        }
    }
    // The FD cross-check needs a step small against |p|.
    let mut sampler = cfg.sampler(9).with_ratio_range(0.1, 10.0);
    for q in sampler.sample_n(cfg.samples.min(super::FD_SAMPLES)) {
        for b in bases() {
            let (Ok(a), Ok(f)) = (b.omega_connection(&q), b.omega_connection_fd(&q)) else {
                l.record("Ω closed form = finite differences", 1e-6, f64::INFINITY);
                continue;
            };
            for i in 0..3 {
                l.matrix("Ω closed form = finite differences", 1e-6, &f[i], &a[i]);
            }
        }
    }
    let eps_pole = Conventions::POLE_EPS;
    let m = cfg.mass;
    let inside = Momentum::from_components(1e-5, 0.0, -1.0, m).expect("finite");
    let outside = Momentum::from_components(1e-3, 0.0, -1.0, m).expect("finite");
    l.expect(
        "helicity pole raised on the p+p³ = 0 ray",
        matches!(helicity_spinor(&inside, Spin::Up), Err(Error::Pole(_))),
    );
    l.expect("helicity chart valid off the pole", helicity_spinor(&outside, Spin::Up).is_ok());
    let south = Vec3::new(0.0, (2.0 * eps_pole).sqrt() * 0.5, -1.0).normalize();
    l.expect("common pole raised near -e₃", matches!(common_spinor(&south, Spin::Up), Err(Error::Pole(_))));
    let zero = Momentum::at_rest(m).expect("mass validated");
    l.expect("helicity undefined at p = 0", helicity_spinor(&zero, Spin::Up) == Err(Error::ZeroMomentum));
    l.expect(
        "non-unit direction rejected",
        matches!(common_spinor(&Vec3::new(1.0, 1.0, 0.0), Spin::Up), Err(Error::NotUnitVector(_))),
    );
}

pub(super) fn mode_spinors(l: &mut Ledger, cfg: &VerifyConfig) {
    let g0 = gammas()[0];
    for q in cfg.momenta(10) {
        let d = slash(&q);
        let mm = one() * c(q.mass());
        let (pp, pm) = projector_pair(&q);
        for b in [PolarizationBasis::momentum_spin(), PolarizationBasis::Helicity] {
            let mut su = M4::zeros();
            let mut sv = M4::zeros();
            for sigma in Spin::BOTH {
                let Some(u) = l.guard("u_σ(p) defined", u_spinor(&b, &q, sigma)) else { continue };
                let Some(v) = l.guard("v_σ(p) defined", v_spinor(&b, &q, sigma)) else { continue };
                let scale = max_abs(&d).max(1.0);
                l.record("(γp - m)u = 0", EXACT_TOL, ((d - mm) * u).norm() / scale);
                l.record("(γp + m)v = 0", EXACT_TOL, ((d + mm) * v).norm() / scale);
                if let Some(vb) = l.guard("v = n l_p v̊", v_spinor_boosted(&b, &q, sigma)) {
                    l.record("v = n l_p v̊", EXACT_TOL, (vb - v).norm());
                }
                l.record("u = Cv*", EXACT_TOL, (charge_conjugation() * v.conjugate() - u).norm());
                for tau in Spin::BOTH {
                    if let Ok(u2) = u_spinor(&b, &q, tau) {
                        let want = if sigma == tau { 1.0 } else { 0.0 };
                        l.record("u_σ†u_σ' = δ", EXACT_TOL, (u.dotc(&u2) - c(want)).norm());
                    }
                }
                su += u * u.adjoint();
                sv += v * v.adjoint();
                if let Some((u0, v0)) = l.guard("rest spinors", rest_spinors(&b, &q, sigma)) {
                    l.record("γ⁰ů = ů", 1e-15, (g0 * u0 - u0).norm());
                    l.record("γ⁰v̊ = -v̊", 1e-15, (g0 * v0 + v0).norm());
                }
            }
            l.matrix("Σ_σ u_σ(p)u_σ(p)† = Π₊", EXACT_TOL, &su, &pp);
            let (_, pm_flip) = projector_pair(&q.flipped());
            l.matrix("Σ_σ v_σ(p)v_σ(p)† = Π₋(-p)", EXACT_TOL, &sv, &pm_flip);
            if let Some((a, bm)) = l.guard("projector_from_spinors", projector_from_spinors(&b, &q)) {
                l.matrix("projector_from_spinors = (Π₊, Π₋)", EXACT_TOL, &a, &pp);
                l.matrix("projector_from_spinors = (Π₊, Π₋)", EXACT_TOL, &bm, &pm);
            }
        }
    }
    let rest = Momentum::at_rest(cfg.mass).expect("mass validated");
    l.record("n(0) = 1", 0.0, (normalization(&rest) - 1.0).abs());
}
