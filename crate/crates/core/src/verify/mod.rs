//! Seeded numerical verification of the operator identities.
//!
//! Each suite evaluates a list of identities at random momenta and records the
//! largest residual per identity. Residuals of matrix identities are relative:
//! ‖lhs - rhs‖_max / max(1, ‖rhs‖_max).

mod active;
mod passive;

use std::fmt;
use std::time::Instant;

use nalgebra::SMatrix;

use crate::algebra::{max_abs, C64};
use crate::error::{Error, Result};
use crate::sampling::MomentumSampler;

pub const SUITE_NAMES: [&str; 12] = [
    "clifford",
    "boosts",
    "projectors",
    "pryce_spin",
    "spin_types",
    "pauli_lubanski",
    "polarization",
    "mode_spinors",
    "associated",
    "appendix_b",
    "wigner",
    "kernels",
];

/// Momenta used by suites that need finite differences in momentum.
pub const FD_SAMPLES: usize = 20;

/// Tolerance of identities limited by nested finite differences.
pub const FD_TOL: f64 = 1e-5;

/// Tolerance of closed-form identities.
pub const EXACT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    pub mass: f64,
    /// Replaces every tolerance when set.
    pub tol: Option<f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { samples: 100, seed: 7, mass: 1.0, tol: None }
    }
}

impl VerifyConfig {
    fn sampler(&self, stream: u64) -> MomentumSampler {
        MomentumSampler::with_stream(self.seed, stream, self.mass)
    }

    fn momenta(&self, stream: u64) -> Vec<crate::algebra::Momentum> {
        self.sampler(stream).sample_n(self.samples)
    }

    fn fd_momenta(&self, stream: u64) -> Vec<crate::algebra::Momentum> {
        self.sampler(stream).sample_n(self.samples.min(FD_SAMPLES))
    }
}

/// Largest residual of one identity over a suite.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckLine {
    pub suite: &'static str,
    pub identity: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub evaluations: usize,
}

impl CheckLine {
    pub fn passed(&self) -> bool {
        self.max_residual.is_finite() && self.max_residual <= self.tolerance
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<15} {:<70} {:>10.3e} {:>9.1e} {}",
            self.suite,
            self.identity,
            self.max_residual,
            self.tolerance,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(CheckLine::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.passed())
    }

    pub fn max_residual(&self) -> f64 {
        self.lines.iter().map(|l| l.max_residual).fold(0.0, f64::max)
    }

    pub fn suite(&self, name: &str) -> impl Iterator<Item = &CheckLine> + '_ {
        let name = name.to_string();
        self.lines.iter().filter(move |l| l.suite == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<15} {:<70} {:>10} {:>9} result", "suite", "identity", "residual", "tol")?;
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        let failed = self.failures().count();
        write!(f, "{} identities, {} failed", self.lines.len(), failed)
    }
}

/// Collects the largest residual per identity, keeping first-seen order.
pub(crate) struct Ledger {
    suite: &'static str,
    tol_override: Option<f64>,
    lines: Vec<CheckLine>,
}

impl Ledger {
    fn new(suite: &'static str, cfg: &VerifyConfig) -> Self {
        Self { suite, tol_override: cfg.tol, lines: Vec::new() }
    }

    pub(crate) fn record(&mut self, identity: &str, tol: f64, residual: f64) {
        let r = if residual.is_nan() { f64::INFINITY } else { residual };
        if let Some(line) = self.lines.iter_mut().find(|l| l.identity == identity) {
            line.max_residual = line.max_residual.max(r);
            line.evaluations += 1;
            return;
        }
        self.lines.push(CheckLine {
            suite: self.suite,
            identity: identity.to_string(),
            max_residual: r,
            tolerance: self.tol_override.unwrap_or(tol),
            evaluations: 1,
        });
    }

    /// Relative matrix residual.
    pub(crate) fn matrix<const R: usize, const C: usize>(
        &mut self,
        identity: &str,
        tol: f64,
        lhs: &SMatrix<C64, R, C>,
        rhs: &SMatrix<C64, R, C>,
    ) {
        self.record(identity, tol, relative(lhs, rhs));
    }

    /// Records an evaluation that must succeed or fail as expected.
    pub(crate) fn expect(&mut self, identity: &str, ok: bool) {
        self.record(identity, 0.5, if ok { 0.0 } else { 1.0 });
    }

    /// Records a computation error against `identity` instead of aborting.
    pub(crate) fn guard<T>(&mut self, identity: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(_) => {
                self.record(identity, 0.0, f64::INFINITY);
                None
            }
        }
    }

    fn finish(self) -> Vec<CheckLine> {
        self.lines
    }
}

pub(crate) fn relative<const R: usize, const C: usize>(
    lhs: &SMatrix<C64, R, C>,
    rhs: &SMatrix<C64, R, C>,
) -> f64 {
    max_abs(&(lhs - rhs)) / max_abs(rhs).max(1.0)
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Report> {
    if cfg.samples == 0 {
        return Err(Error::InvalidParameter("samples must be positive".into()));
    }
    if !(cfg.mass > 0.0 && cfg.mass.is_finite()) {
        return Err(Error::NonPositiveMass(cfg.mass));
    }
    if name == "all" {
        let mut report = Report::default();
        for suite in SUITE_NAMES {
            report.lines.extend(run_suite(suite, cfg)?.lines);
        }
        return Ok(report);
    }
    let suite: &'static str =
        SUITE_NAMES.iter().find(|s| **s == name).ok_or_else(|| Error::UnknownName(name.into()))?;
    let mut ledger = Ledger::new(suite, cfg);
    match suite {
        "clifford" => active::clifford(&mut ledger, cfg),
        "boosts" => active::boosts(&mut ledger, cfg),
        "projectors" => active::projectors(&mut ledger, cfg),
        "pryce_spin" => active::pryce_spin(&mut ledger, cfg),
        "spin_types" => active::spin_types(&mut ledger, cfg),
        "pauli_lubanski" => active::pauli_lubanski(&mut ledger, cfg),
        "polarization" => active::polarization(&mut ledger, cfg),
        "mode_spinors" => active::mode_spinors(&mut ledger, cfg),
        "associated" => passive::associated(&mut ledger, cfg),
        "appendix_b" => passive::appendix_b(&mut ledger, cfg),
        "wigner" => passive::wigner(&mut ledger, cfg),
        _ => passive::kernels(&mut ledger, cfg),
    }
    Ok(Report { lines: ledger.finish() })
}

/// Runs a suite and returns the report with its wall time in seconds.
pub fn run_timed(name: &str, cfg: &VerifyConfig) -> Result<(Report, f64)> {
    let start = Instant::now();
    let r = run_suite(name, cfg)?;
    Ok((r, start.elapsed().as_secs_f64()))
}
