//! Passive-mode identities: associated operators, their commutators, Wigner
//! transformations and the oscillating kernels.

use rand::Rng;

use crate::algebra::{
    boost, lorentz_of, max_abs, rotation, ComplexMatrix2, Momentum, PauliSpinor, Vec3, C64, I,
};
use crate::associated::{
    commutator_action, d_matrix, matrix_elements_diag, matrix_elements_offdiag, transformed_momentum,
    wigner_little_group, wigner_transform, AssociatedOperator, FnSpinor, GaussianTestSpinor, KernelKind,
    OscillatingKernel, WaveSpinor,
};
use crate::error::Result;
use crate::operators::FourierOperator;
use crate::packet::QuadratureGrid;
use crate::polarization::PolarizationBasis;

use super::{relative, Ledger, VerifyConfig, EXACT_TOL, FD_SAMPLES, FD_TOL};

type Op = AssociatedOperator;

fn c(x: f64) -> C64 {
    C64::from(x)
}

fn delta(i: usize, j: usize) -> f64 {
    if i == j {
        1.0
    } else {
        0.0
    }
}

fn eps(i: usize, j: usize, k: usize) -> f64 {
    crate::algebra::levi_civita(i, j, k)
}

fn common_tilted() -> PolarizationBasis {
    PolarizationBasis::Common { n: Vec3::new(0.6, 0.0, 0.8) }
}

/// Scalar multiple of the unit matrix.
fn scalar<F>(b: PolarizationBasis, f: F) -> Op
where
    F: Fn(&Momentum) -> C64 + Send + Sync + 'static,
{
    Op::multiplicative("f", b, move |q| Ok(ComplexMatrix2::identity() * f(q)))
}

/// Σ_k z·ε_ijk A_k.
fn eps_sum(ops: &[Op; 3], i: usize, j: usize, z: C64) -> Op {
    let b = *ops[0].basis();
    (0..3)
        .filter(|&k| eps(i, j, k) != 0.0)
        .fold(Op::zero(b), |acc, k| acc.plus(&ops[k].scaled(z * eps(i, j, k))))
}

fn triple(f: fn(PolarizationBasis, usize) -> Result<Op>, b: PolarizationBasis) -> [Op; 3] {
    std::array::from_fn(|i| f(b, i).expect("index in range"))
}

struct Family {
    b: PolarizationBasis,
    e: Op,
    p: [Op; 3],
    v: [Op; 3],
    x: [Op; 3],
    xt: [Op; 3],
    s: [Op; 3],
    s_minus: [Op; 3],
    l: [Op; 3],
    j: [Op; 3],
    ko: [Op; 3],
    ks: [Op; 3],
    k: [Op; 3],
    w: [Op; 4],
    xc: [Op; 3],
    xd: [Op; 3],
    yc: [Op; 3],
    yd: [Op; 3],
}

/// Time used for the free-evolution identities X(t) = X + tV.
const T_EVOLVE: f64 = 0.7;

impl Family {
    fn new(b: PolarizationBasis) -> Self {
        let x = triple(Op::position, b);
        let v = triple(Op::velocity, b);
        let xt = std::array::from_fn(|i| x[i].plus(&v[i].scaled(c(T_EVOLVE))));
        Self {
            b,
            e: Op::energy(b),
            p: triple(Op::momentum, b),
            v,
            x,
            xt,
            s: triple(Op::spin, b),
            s_minus: triple(Op::spin_minus, b),
            l: triple(Op::orbital, b),
            j: triple(Op::angular_momentum, b),
            ko: triple(Op::boost_orbital, b),
            ks: triple(Op::boost_spin, b),
            k: triple(Op::boost, b),
            w: std::array::from_fn(|mu| Op::pauli_lubanski(b, mu).expect("index in range")),
            xc: triple(Op::pryce_c_position, b),
            xd: triple(Op::pryce_d_position, b),
            yc: triple(Op::pryce_c_y, b),
            yd: triple(Op::pryce_d_y, b),
        }
    }

    /// (label, A, B, C) with [A, B] = C.
    fn commutators(&self) -> Vec<(&'static str, Op, Op, Op)> {
        let b = self.b;
        let zero = Op::zero(b);
        let mut out = Vec::new();
        let mut push =
            |label: &'static str, a: &Op, bb: &Op, rhs: Op| out.push((label, a.clone(), bb.clone(), rhs));
        for i in 0..3 {
            let pi = move |q: &Momentum| q.p()[i];
            push("[L_i, E] = 0", &self.l[i], &self.e, zero.clone());
            push("[K^o_i, E] = ip^i", &self.ko[i], &self.e, scalar(b, move |q| I * pi(q)));
            push("[X^i(t), E] = iV^i", &self.xt[i], &self.e, self.v[i].scaled(I));
            push("[V^i, E] = 0", &self.v[i], &self.e, zero.clone());
            push(
                "[S_i, W⁰] = i(E+m)K^s_i",
                &self.s[i],
                &self.w[0],
                self.ks[i].scaled_by(|q| I * (q.energy() + q.mass())),
            );
            push("[X^i, W⁰] = iS_i", &self.x[i], &self.w[0], self.s[i].scaled(I));
            push("[E, X_c^i] = -iV^i", &self.e, &self.xc[i], self.v[i].scaled(-I));
            for mu in 0..4 {
                push("[V^i, W^μ] = 0", &self.v[i], &self.w[mu], zero.clone());
            }
            for j in 0..3 {
                let pj = move |q: &Momentum| q.p()[j];
                let d = delta(i, j);
                push("[L_i, L_j] = iε_ijk L_k", &self.l[i], &self.l[j], eps_sum(&self.l, i, j, I));
                push("[S_i, S_j] = iε_ijk S_k", &self.s[i], &self.s[j], eps_sum(&self.s, i, j, I));
                push("[L_i, S_j] = 0", &self.l[i], &self.s[j], zero.clone());
                let kiks = eps_sum(&self.s, i, j, c(1.0))
                    .scaled_by(|q| c(q.energy()))
                    .plus(&self.ks[j].scaled_by(move |q| c(pi(q))))
                    .scaled_by(|q| -I / (q.energy() + q.mass()));
                push("[K^o_i, K^s_j] = -i/(E+m)[Eε_ijk S_k + p^i K^s_j]", &self.ko[i], &self.ks[j], kiks);
                push("[L_i, K^o_j] = iε_ijk K^o_k", &self.l[i], &self.ko[j], eps_sum(&self.ko, i, j, I));
                push("[K^o_i, K^o_j] = -iε_ijk L_k", &self.ko[i], &self.ko[j], eps_sum(&self.l, i, j, -I));
                push("[L_i, p^j] = iε_ijk p^k", &self.l[i], &self.p[j], eps_sum(&self.p, i, j, I));
                push(
                    "[K^o_i, p^j] = iδ_ij E",
                    &self.ko[i],
                    &self.p[j],
                    scalar(b, move |q| I * (d * q.energy())),
                );
                let ksss = self.s[j].scaled_by(move |q| c(pi(q)));
                let ksss = if i == j { ksss.minus(&self.w[0]) } else { ksss };
                push(
                    "[S_i, K^s_j] = i/(E+m)[p^i S_j - δ_ij p·S]",
                    &self.s[i],
                    &self.ks[j],
                    ksss.scaled_by(|q| I / (q.energy() + q.mass())),
                );
                let kkss = self.w[0].scaled_by(move |q| {
                    let pk: f64 = (0..3).map(|k| eps(i, j, k) * q.p()[k]).sum();
                    I * pk / (q.energy() + q.mass()).powi(2)
                });
                push("[K^s_i, K^s_j] = i/(E+m)² ε_ijk p^k p·S", &self.ks[i], &self.ks[j], kkss);
                push("[X^i(t), X^j(t)] = 0", &self.xt[i], &self.xt[j], zero.clone());
                push("[X^i(t), p^j] = iδ_ij", &self.xt[i], &self.p[j], scalar(b, move |_| I * d));
                push("[L_i, X^j(t)] = iε_ijk X^k(t)", &self.l[i], &self.xt[j], eps_sum(&self.xt, i, j, I));
                push("[S_i, X^j(t)] = 0", &self.s[i], &self.xt[j], zero.clone());
                let transverse = move |q: &Momentum| d - pi(q) * pj(q) / (q.energy() * q.energy());
                push(
                    "[K^o_i, V^j] = i(δ_ij - p^ip^j/E²)",
                    &self.ko[i],
                    &self.v[j],
                    scalar(b, move |q| I * transverse(q)),
                );
                push(
                    "[X^i, V^j] = (i/E)(δ_ij - p^ip^j/E²)",
                    &self.x[i],
                    &self.v[j],
                    scalar(b, move |q| I * transverse(q) / q.energy()),
                );
                let b14 = scalar(b, move |q| {
                    let e = q.energy();
                    c(d / (2.0 * e) - pi(q) * pj(q) / (2.0 * e.powi(3)))
                })
                .plus(&self.x[i].scaled_by(move |q| -I * pj(q) / q.energy()));
                push("[K^o_i, X^j] = δ_ij/2E - i(p^j/E)X^i - p^ip^j/2E³", &self.ko[i], &self.x[j], b14);
                let b17 = eps_sum(&self.s, i, j, c(-1.0))
                    .plus(&self.ks[i].scaled_by(move |q| c(pj(q) / q.energy())))
                    .scaled_by(|q| I / (q.energy() + q.mass()));
                push("[K^s_i, X^j] = i/(E+m)[-ε_ijk S_k + (p^j/E)K^s_i]", &self.ks[i], &self.x[j], b17);
                let swj = eps_sum(&self.s, i, j, I)
                    .scaled_by(|q| c(q.mass()))
                    .plus(&self.ks[i].scaled_by(move |q| I * pj(q)));
                push("[S_i, W^j] = imε_ijk S_k + ip^j K^s_i", &self.s[i], &self.w[j + 1], swj);
                let xwj = self.s_minus[i].scaled_by(move |q| c(pj(q)));
                let xwj = if i == j { xwj.plus(&self.w[0]) } else { xwj };
                push(
                    "[X^i, W^j] = i/(E+m)[δ_ij W⁰ + p^j S^(-)_i]",
                    &self.x[i],
                    &self.w[j + 1],
                    xwj.scaled_by(|q| I / (q.energy() + q.mass())),
                );
                push("[X_c^i, X_c^j] = -iε_ijk Y_c^k", &self.xc[i], &self.xc[j], eps_sum(&self.yc, i, j, -I));
                push("[X_d^i, X_d^j] = iε_ijk Y_d^k", &self.xd[i], &self.xd[j], eps_sum(&self.yd, i, j, I));
                push("[p^i, X_c^j] = -iδ_ij", &self.p[i], &self.xc[j], scalar(b, move |_| -I * d));
                push("[J_i, X_c^j] = iε_ijk X_c^k", &self.j[i], &self.xc[j], eps_sum(&self.xc, i, j, I));
                let kxc = scalar(b, move |q| c(transverse(q) / (2.0 * q.energy())))
                    .plus(&self.xc[j].scaled_by(move |q| -I * pi(q) / q.energy()))
                    .plus(&eps_sum(&self.j, i, j, c(1.0)).scaled_by(|q| -I / q.energy()));
                push(
                    "[K_i, X_c^j] = (δ_ij - p^ip^j/E²)/2E - (i/E)p^iX_c^j - (i/E)ε_ijk J_k",
                    &self.k[i],
                    &self.xc[j],
                    kxc,
                );
                let kxd = scalar(b, move |q| c(transverse(q) / (2.0 * q.energy())))
                    .plus(&self.xd[i].scaled_by(move |q| -I * pj(q) / q.energy()));
                push("[K_i, X_d^j] = (δ_ij - p^ip^j/E²)/2E - (i/E)p^jX_d^i", &self.k[i], &self.xd[j], kxd);
                push("[J_i, J_j] = iε_ijk J_k", &self.j[i], &self.j[j], eps_sum(&self.j, i, j, I));
                push("[J_i, K_j] = iε_ijk K_k", &self.j[i], &self.k[j], eps_sum(&self.k, i, j, I));
                push("[K_i, K_j] = -iε_ijk J_k", &self.k[i], &self.k[j], eps_sum(&self.j, i, j, -I));
            }
        }
        out
    }
}

/// α/E(p), differentiated by finite differences.
fn over_energy<W: WaveSpinor + ?Sized>(
    alpha: &W,
) -> FnSpinor<impl Fn(&Momentum) -> Result<PauliSpinor> + '_> {
    FnSpinor(move |q: &Momentum| Ok(alpha.value(q)? / c(q.energy())))
}

/// Momenta away from the helicity pole, where finite-difference stencils stay
/// inside one chart.
fn chart_momenta(cfg: &VerifyConfig, stream: u64, n: usize) -> Vec<Momentum> {
    let mut s = cfg.sampler(stream).with_ratio_range(0.1, 5.0);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let q = s.sample();
        if q.magnitude() + q.p().z > 0.05 * q.magnitude() {
            out.push(q);
        }
    }
    out
}

fn test_bases() -> [PolarizationBasis; 3] {
    [PolarizationBasis::momentum_spin(), PolarizationBasis::Helicity, common_tilted()]
}

pub(super) fn appendix_b(l: &mut Ledger, cfg: &VerifyConfig) {
    let n = cfg.samples.min(FD_SAMPLES);
    for (k, b) in test_bases().into_iter().enumerate() {
        let alpha =
            GaussianTestSpinor::new(cfg.seed.wrapping_mul(0x9e37_79b9).wrapping_add(k as u64), cfg.mass);
        let fam = Family::new(b);
        let table = fam.commutators();
        for q in chart_momenta(cfg, 20 + k as u64, n) {
            for (label, a, bb, rhs) in &table {
                if let Some(Ok(m)) = a.commutator_matrix(bb, &q) {
                    if let (true, Ok(want)) = (rhs.is_multiplicative(), rhs.multiplicative_part(&q)) {
                        l.matrix(&format!("{label} (exact)"), EXACT_TOL, &m, &want);
                    }
                }
                match commutator_action(a, bb, rhs, &alpha, &q) {
                    Ok(r) => l.record(label, FD_TOL, r.relative()),
                    Err(_) => l.record(label, FD_TOL, f64::INFINITY),
                }
            }
            extra_identities(l, &fam, &alpha, &q);
        }
    }
}

fn extra_identities(l: &mut Ledger, fam: &Family, alpha: &GaussianTestSpinor, q: &Momentum) {
    let part = |o: &Op| o.multiplicative_part(q);
    let (Ok(w0), Ok(w1), Ok(w2), Ok(w3)) =
        (part(&fam.w[0]), part(&fam.w[1]), part(&fam.w[2]), part(&fam.w[3]))
    else {
        l.record("W^μW_μ = -¾m²", EXACT_TOL, f64::INFINITY);
        return;
    };
    let (e, m, p) = (q.energy(), q.mass(), q.p());
    let scale = 1.0 + e * e;
    let square = w0 * w0 - w1 * w1 - w2 * w2 - w3 * w3;
    let target = ComplexMatrix2::identity() * c(-0.75 * m * m);
    l.record("W^μW_μ = -¾m²", EXACT_TOL, max_abs(&(square - target)) / scale);
    let pw = w0 * c(e) - w1 * c(p.x) - w2 * c(p.y) - w3 * c(p.z);
    l.record("p^μW_μ = 0", EXACT_TOL, max_abs(&pw) / scale);
    let w = [w1, w2, w3];
    let inv = over_energy(alpha);
    for i in 0..3 {
        if let Ok(yc) = part(&fam.yc[i]) {
            l.matrix("Y_c = W/E³", EXACT_TOL, &yc, &(w[i] / c(e.powi(3))));
        }
        // X_c = ½{K, 1/E}
        let lhs = fam.xc[i].apply(alpha, q);
        let k_inv = fam.k[i].apply(&inv, q);
        let inv_k = fam.k[i].apply(alpha, q);
        match (lhs, k_inv, inv_k) {
            (Ok(a), Ok(b1), Ok(b2)) => {
                let rhs = (b1 + b2 / c(e)) * c(0.5);
                let r = (a - rhs).norm() / a.norm().max(rhs.norm()).max(f64::MIN_POSITIVE);
                l.record("X_c = ½{K, 1/E}", FD_TOL, r);
            }
            _ => l.record("X_c = ½{K, 1/E}", FD_TOL, f64::INFINITY),
        }
    }
}

fn bases() -> [PolarizationBasis; 3] {
    [PolarizationBasis::momentum_spin(), common_tilted(), PolarizationBasis::Helicity]
}

pub(super) fn associated(l: &mut Ledger, cfg: &VerifyConfig) {
    for q in cfg.momenta(30) {
        for b in bases() {
            let mut pairs: Vec<(FourierOperator, Op, Option<f64>)> = vec![
                (FourierOperator::ProjectorPlus, Op::identity(b), Some(0.0)),
                (FourierOperator::Sign, Op::sign(b), Some(-1.0)),
                (FourierOperator::DiracHamiltonian, Op::energy(b), Some(-1.0)),
                (FourierOperator::PauliLubanski(0), fam_pl(b, 0), Some(1.0)),
            ];
            for i in 0..3 {
                pairs.push((FourierOperator::Momentum(i), Op::momentum(b, i).expect("index"), Some(-1.0)));
                pairs.push((FourierOperator::PryceSpin(i), Op::spin(b, i).expect("index"), Some(-1.0)));
                pairs.push((FourierOperator::PauliLubanski(i + 1), fam_pl(b, i + 1), None));
            }
            for (four, op, sign) in &pairs {
                let Some((plus, minus)) =
                    l.guard("matrix elements defined", matrix_elements_diag(four, &q, &b))
                else {
                    continue;
                };
                let Some(want) = l.guard("matrix elements defined", op.multiplicative_part(&q)) else {
                    continue;
                };
                let scale = 1.0 + q.energy();
                l.record("Ã^(+) = associated operator", EXACT_TOL, relative(&plus, &want) / scale);
                if let Some(s) = sign {
                    l.record("Ã^(-) = ±Ã^(+)", EXACT_TOL, relative(&minus, &(plus * c(*s))) / scale);
                    if *s != 0.0 {
                        l.expect("conjugate sign matches Ã^(-)", op.conjugate_sign() == Some(*s));
                    }
                }
            }
            let minus = matrix_elements_diag(&FourierOperator::ProjectorMinus, &q, &b);
            if let Some((pm, mm)) = l.guard("matrix elements defined", minus) {
                l.matrix("Π₋ elements = (0, 1)", EXACT_TOL, &pm, &ComplexMatrix2::zeros());
                l.matrix("Π₋ elements = (0, 1)", EXACT_TOL, &mm, &ComplexMatrix2::identity());
            }
            for op in [FourierOperator::PryceSpin(0), FourierOperator::Sign, FourierOperator::FrankelSpin(1)]
            {
                if let Some((pm, mp)) = l.guard("offdiag defined", matrix_elements_offdiag(&op, &q, 0.4, &b))
                {
                    l.record(
                        "conserved operators do not oscillate",
                        EXACT_TOL,
                        max_abs(&pm).max(max_abs(&mp)),
                    );
                }
            }
        }
    }
    let alpha = GaussianTestSpinor::new(cfg.seed, cfg.mass);
    for q in chart_momenta(cfg, 31, cfg.samples.min(FD_SAMPLES)) {
        for b in bases() {
            let zero = Op::zero(b);
            for i in 0..3 {
                let v = Op::velocity(b, i).expect("index");
                if let (Ok(got), Ok(a)) = (v.apply(&alpha, &q), alpha.value(&q)) {
                    l.record(
                        "Ṽ^i = p^i/E multiplicative",
                        1e-15,
                        (got - a * c(q.p()[i] / q.energy())).norm() / a.norm().max(1e-300),
                    );
                }
                for j in 0..3 {
                    let d = Op::position(b, i).expect("index");
                    let s = Op::spin(b, j).expect("index");
                    match commutator_action(&d, &s, &zero, &alpha, &q) {
                        Ok(r) => l.record("[∂̃_i, S̃_j] = 0", FD_TOL, r.relative()),
                        Err(_) => l.record("[∂̃_i, S̃_j] = 0", FD_TOL, f64::INFINITY),
                    }
                }
            }
        }
    }
    hermitian_forms(l, cfg);
}

fn fam_pl(b: PolarizationBasis, mu: usize) -> Op {
    Op::pauli_lubanski(b, mu).expect("index in range")
}

/// ⟨β, Ãα⟩ = ⟨Ãβ, α⟩ in d³p for the Hermitian operators.
fn hermitian_forms(l: &mut Ledger, cfg: &VerifyConfig) {
    let Ok(grid) = QuadratureGrid::new(12.0 * cfg.mass.max(1.0), 48, 16, 32) else {
        l.record("⟨β, Ãα⟩ = ⟨Ãβ, α⟩", 1e-9, f64::INFINITY);
        return;
    };
    let alpha = GaussianTestSpinor::new(cfg.seed.wrapping_add(1), cfg.mass);
    let beta = GaussianTestSpinor::new(cfg.seed.wrapping_add(2), cfg.mass);
    let m = cfg.mass;
    for b in [PolarizationBasis::momentum_spin(), common_tilted()] {
        let mut ops = vec![Op::energy(b), Op::polarization(b)];
        for i in 0..3 {
            ops.extend(
                [
                    Op::position(b, i),
                    Op::orbital(b, i),
                    Op::boost_orbital(b, i),
                    Op::boost(b, i),
                    Op::pryce_c_position(b, i),
                    Op::pryce_d_position(b, i),
                    Op::spin(b, i),
                ]
                .into_iter()
                .map(|o| o.expect("index in range")),
            );
        }
        for op in &ops {
            let sums = grid.integrate_many(4, |p, out| {
                let q = Momentum::new(*p, m)?;
                let (a, bv) = (alpha.value(&q)?, beta.value(&q)?);
                let (aa, ab) = (op.apply(&alpha, &q)?, op.apply(&beta, &q)?);
                let lhs = bv.dotc(&aa);
                let rhs = ab.dotc(&a);
                out[0] = lhs.re;
                out[1] = lhs.im;
                out[2] = rhs.re;
                out[3] = rhs.im;
                Ok(())
            });
            let r = match sums {
                Ok(s) => {
                    let (x, y) = (C64::new(s[0], s[1]), C64::new(s[2], s[3]));
                    (x - y).norm() / x.norm().max(y.norm()).max(1e-300)
                }
                Err(_) => f64::INFINITY,
            };
            l.record(&format!("⟨β, Ãα⟩ = ⟨Ãβ, α⟩ for {}", op.name()), 1e-9, r);
        }
    }
}

pub(super) fn wigner(l: &mut Ledger, cfg: &VerifyConfig) {
    let id2 = ComplexMatrix2::identity();
    let mut s = cfg.sampler(40);
    for _ in 0..50 {
        let q = s.sample();
        let rapidity: f64 = s.rng().random_range(0.0..1.5);
        let tau = s.unit_vector() * rapidity;
        let lambda = boost(&tau);
        if let Some(w) = l.guard("Wigner rotation defined", wigner_little_group(&lambda, &q)) {
            if let Some(big) = l.guard("Λ(w) is a rotation", lorentz_of(&w)) {
                let off = (1..4).map(|i| big[(0, i)].abs().max(big[(i, 0)].abs())).fold(0.0, f64::max);
                l.record("Λ(w) is a rotation", 1e-10, off.max((big[(0, 0)] - 1.0).abs()));
            }
        }
        for b in [PolarizationBasis::momentum_spin(), common_tilted(), PolarizationBasis::Helicity] {
            let Some(qp) = l.guard("transformed momentum", transformed_momentum(&lambda, &q)) else {
                continue;
            };
            if b == PolarizationBasis::Helicity && (b.direction(&qp).is_err() || b.direction(&q).is_err()) {
                continue;
            }
            if let Some(d) = l.guard("D(λ, p) unitary", d_matrix(&lambda, &q, &b)) {
                l.matrix("D(λ, p) unitary", EXACT_TOL, &(d.adjoint() * d), &id2);
            }
        }
    }
    let mut s = cfg.sampler(41);
    let theta = s.unit_vector() * s.rng().random_range(0.1..3.0);
    let r = rotation(&theta);
    for b in [PolarizationBasis::momentum_spin(), common_tilted()] {
        let rest = Momentum::at_rest(cfg.mass).expect("mass validated");
        let Some(d0) = l.guard("D(r, p) independent of p", d_matrix(&r, &rest, &b)) else { continue };
        for q in s.clone().sample_n(20) {
            if let Some(d) = l.guard("D(r, p) independent of p", d_matrix(&r, &q, &b)) {
                l.matrix("D(r, p) independent of p", EXACT_TOL, &d, &d0);
            }
            if let Some(w) = l.guard("w(r, p) = r", wigner_little_group(&r, &q)) {
                l.matrix("w(r, p) = r", EXACT_TOL, &w, &r);
            }
        }
    }
    norm_preservation(l, cfg, &mut s);
}

fn norm_preservation(l: &mut Ledger, cfg: &VerifyConfig, s: &mut crate::sampling::MomentumSampler) {
    let label = "‖T̃α‖ = ‖α‖ on the grid";
    let m = cfg.mass;
    let Ok(grid) = QuadratureGrid::new(14.0 * m.max(1.0), 48, 24, 48) else {
        l.record(label, 1e-8, f64::INFINITY);
        return;
    };
    let alpha = GaussianTestSpinor::new(cfg.seed.wrapping_add(3), m);
    let b = PolarizationBasis::momentum_spin();
    let tau = s.unit_vector() * 0.5;
    let theta = s.unit_vector() * 1.2;
    let a = [0.3, -0.4, 1.0, 0.2];
    for lambda in [boost(&tau), rotation(&theta), boost(&tau) * rotation(&theta)] {
        let Some(t) = l.guard(label, wigner_transform(&alpha, lambda, a, b)) else { continue };
        let sums = grid.integrate_many(2, |p, out| {
            let q = Momentum::new(*p, m)?;
            out[0] = alpha.value(&q)?.norm_squared();
            out[1] = t.value(&q)?.norm_squared();
            Ok(())
        });
        let r = match sums {
            Ok(v) => (v[1] - v[0]).abs() / v[0],
            Err(_) => f64::INFINITY,
        };
        l.record(label, 1e-8, r);
    }
}

pub(super) fn kernels(l: &mut Ledger, cfg: &VerifyConfig) {
    let t = 0.8;
    for q in cfg.momenta(50) {
        let e = q.energy();
        for b in [PolarizationBasis::momentum_spin(), PolarizationBasis::Helicity] {
            for kind in KernelKind::ALL {
                for comp in 0..kind.components() {
                    let Ok(k) = OscillatingKernel::new(kind, comp, b) else { continue };
                    let (Ok(a), Ok(p)) = (k.eval(&q, t), k.from_parent(&q, t)) else {
                        l.record("kernel = offdiag elements of parent", 1e-10, f64::INFINITY);
                        continue;
                    };
                    l.matrix("kernel = offdiag elements of parent", 1e-10, &a, &p);
                    let h = 1e-4 / e;
                    if let (Ok(up), Ok(dn)) = (k.eval(&q, t + h), k.eval(&q, t - h)) {
                        let deriv = (up - dn) / c(2.0 * h);
                        let want = a * (I * (2.0 * e));
                        l.record(
                            "∂_t K = 2iE K",
                            1e-6,
                            max_abs(&(deriv - want)) / max_abs(&want).max(1e-300),
                        );
                    }
                    let Ok(parent) = kind.parent(comp) else { continue };
                    let mat = parent.eval(&q);
                    let scale = max_abs(&mat).max(1.0);
                    let sign = if max_abs(&(mat - mat.adjoint())) < 1e-12 * scale {
                        Some(1.0)
                    } else if max_abs(&(mat + mat.adjoint())) < 1e-12 * scale {
                        Some(-1.0)
                    } else {
                        None
                    };
                    if let (Some(sg), Ok((pm, mp))) = (sign, matrix_elements_offdiag(&parent, &q, t, &b)) {
                        l.matrix("[Ã^(±)]† = ±Ã^(∓)", EXACT_TOL, &(pm.adjoint() * c(sg)), &mp);
                    }
                    if kind == KernelKind::Pseudoscalar {
                        if let Ok((dp, dm)) = matrix_elements_diag(&parent, &q, &b) {
                            l.record(
                                "pseudoscalar has no diagonal part",
                                EXACT_TOL,
                                max_abs(&dp).max(max_abs(&dm)),
                            );
                        }
                    }
                }
            }
        }
    }
}
