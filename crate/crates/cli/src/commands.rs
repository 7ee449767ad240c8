use std::fmt::Write as _;

use dirac_core::algebra::max_abs;
use dirac_core::associated::matrix_elements_diag;
use dirac_core::packet::{statistics, Figure, FigureTable, ObservableStatistics};
use dirac_core::verify::{run_suite, VerifyConfig};
use dirac_core::{
    make_isotropic, ComplexMatrix2, Momentum, Observable, OscillatingKernel, PolarizationBasis, Vec3, C64,
};

use crate::CliError;

/// Seventeen significant digits, locale independent.
pub fn num(x: f64) -> String {
    // -0.0 + 0.0 is +0.0
    format!("{:.16e}", x + 0.0)
}

pub fn parse_basis(s: &str) -> Result<PolarizationBasis, CliError> {
    match s {
        "e3" | "common" => Ok(PolarizationBasis::momentum_spin()),
        "helicity" => Ok(PolarizationBasis::Helicity),
        _ => {
            let t: crate::config::Triple = s
                .parse()
                .map_err(|e| CliError::Config(format!("basis must be e3, helicity or nx,ny,nz: {e}")))?;
            let n = Vec3::from(t.0);
            let norm = n.norm();
            if !(norm > 0.0 && norm.is_finite()) {
                return Err(CliError::Config(format!("basis direction `{s}` has zero length")));
            }
            Ok(PolarizationBasis::common(n / norm)?)
        }
    }
}

pub fn verify(suite: &str, cfg: &VerifyConfig) -> Result<(String, bool), CliError> {
    let report = run_suite(suite, cfg)?;
    Ok((format!("{report}\n"), report.passed()))
}

pub struct PacketArgs {
    pub gamma: f64,
    pub pbar: f64,
    pub mass: f64,
    pub theta_s: f64,
    pub x0: [f64; 3],
    pub grid: [usize; 3],
    pub basis: PolarizationBasis,
}

/// Difference to the closed form relative to max(1, |closed form|).
fn rel_error(row: &ObservableStatistics) -> Option<f64> {
    let cf = row.closed_form?;
    let mut err = (row.expectation - cf.expectation).abs() / cf.expectation.abs().max(1.0);
    if let Some(d) = cf.dispersion {
        err = err.max((row.dispersion - d).abs() / d.abs().max(1.0));
    }
    Some(err)
}

pub fn packet(a: &PacketArgs) -> Result<String, CliError> {
    let iso = make_isotropic(a.gamma, a.pbar, a.mass)?;
    let profile = iso.packet(a.theta_s, Vec3::from(a.x0))?.with_basis(a.basis);
    let [nr, nc, np] = a.grid;
    let grid = profile.grid(nr, nc, np)?;
    let report = statistics(&profile, &Observable::ALL, &grid)?;
    let mut out = String::from(
        "name,expectation,dispersion,uncertainty,closed_expectation,closed_dispersion,rel_error\n",
    );
    let opt = |x: Option<f64>| x.map(num).unwrap_or_default();
    for row in &report.rows {
        let cf = row.closed_form;
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.name(),
            num(row.expectation),
            num(row.dispersion),
            num(row.uncertainty),
            opt(cf.map(|c| c.expectation)),
            opt(cf.and_then(|c| c.dispersion)),
            opt(rel_error(row)),
        )
        .expect("writing to a String");
    }
    Ok(out)
}

pub fn figures(table: &FigureTable) -> String {
    let mut out = table.figure.columns().join(",");
    out.push('\n');
    for r in &table.rows {
        let cells: Vec<String> = r.iter().map(|x| num(*x)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn figure(which: u32) -> Result<Figure, CliError> {
    Ok(Figure::from_number(which)?)
}

fn write_matrix(out: &mut String, label: &str, m: &ComplexMatrix2, part: fn(&C64) -> f64) {
    for r in 0..2 {
        let head = if r == 0 { label } else { "" };
        writeln!(out, "  {head:<4} {:>25} {:>25}", num(part(&m[(r, 0)])), num(part(&m[(r, 1)])))
            .expect("writing to a String");
    }
}

pub fn kernel(
    name: &str,
    p: [f64; 3],
    mass: f64,
    t: f64,
    basis: PolarizationBasis,
) -> Result<String, CliError> {
    let q = Momentum::new(Vec3::from(p), mass)?;
    let e = q.energy();
    let mut out = String::new();
    writeln!(out, "p = ({}, {}, {}), m = {}, E = {}", num(p[0]), num(p[1]), num(p[2]), num(mass), num(e))
        .expect("writing to a String");
    writeln!(out, "t = {}, phase 2Et = {}", num(t), num(2.0 * e * t)).expect("writing to a String");
    for k in OscillatingKernel::by_name(name, basis)? {
        let kt = k.eval(&q, t)?;
        let k0 = k.eval(&q, 0.0)?;
        let phased = k0 * (C64::i() * (2.0 * e * t)).exp();
        let scale = max_abs(&kt).max(1.0);
        let phase_residual = max_abs(&(kt - phased)) / scale;
        let parent_residual = max_abs(&(kt - k.from_parent(&q, t)?)) / scale;
        let parent = k.kind().parent(k.component())?;
        let (dp, dm) = matrix_elements_diag(&parent, &q, &basis)?;
        let diag = max_abs(&dp).max(max_abs(&dm));
        writeln!(out, "{}", k.name()).expect("writing to a String");
        write_matrix(&mut out, "re", &kt, |z| z.re);
        write_matrix(&mut out, "im", &kt, |z| z.im);
        writeln!(out, "  |K| = {}", num(kt.norm())).expect("writing to a String");
        writeln!(out, "  phase check |K(t) - e^(2iEt)K(0)| = {}", num(phase_residual))
            .expect("writing to a String");
        writeln!(out, "  parent offdiag check = {}", num(parent_residual)).expect("writing to a String");
        writeln!(out, "  diagonal parent part = {}", num(diag)).expect("writing to a String");
    }
    Ok(out)
}
