use std::f64::consts::PI;
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use rayon::prelude::*;

use crate::algebra::Vec3;
use crate::error::{Error, Result};
use crate::numeric::pairwise_sum;

/// Product rule on a ball of radius `p_max`: Gauss-Legendre in p and in cos θ,
/// uniform in the azimuth.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    radial: Vec<(f64, f64)>,
    directions: Vec<(Vec3, f64)>,
    sizes: [usize; 3],
    p_max: f64,
    tail: f64,
}

pub const DEFAULT_RADIAL: usize = 128;
pub const DEFAULT_POLAR: usize = 32;
pub const DEFAULT_AZIMUTH: usize = 64;

fn gauss_legendre(n: usize, a: f64, b: f64) -> Result<Vec<(f64, f64)>> {
    let n =
        NonZeroUsize::new(n).ok_or_else(|| Error::InvalidParameter("grid sizes must be positive".into()))?;
    let rule = GaussLegendre::new(n);
    let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
    let mut nodes: Vec<(f64, f64)> =
        rule.as_node_weight_pairs().iter().map(|&(x, w)| (c + h * x, h * w)).collect();
    nodes.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(nodes)
}

impl QuadratureGrid {
    pub fn new(p_max: f64, n_radial: usize, n_polar: usize, n_azimuth: usize) -> Result<Self> {
        if !(p_max.is_finite() && p_max > 0.0) {
            return Err(Error::InvalidParameter(format!("p_max = {p_max}")));
        }
        if n_azimuth == 0 {
            return Err(Error::InvalidParameter("grid sizes must be positive".into()));
        }
        let radial = gauss_legendre(n_radial, 0.0, p_max)?;
        let polar = gauss_legendre(n_polar, -1.0, 1.0)?;
        let dphi = 2.0 * PI / n_azimuth as f64;
        let mut directions = Vec::with_capacity(n_polar * n_azimuth);
        for &(c, wc) in &polar {
            let s = (1.0 - c * c).max(0.0).sqrt();
            for k in 0..n_azimuth {
                let phi = dphi * (k as f64 + 0.5);
                directions.push((Vec3::new(s * phi.cos(), s * phi.sin(), c), wc * dphi));
            }
        }
        Ok(Self { radial, directions, sizes: [n_radial, n_polar, n_azimuth], p_max, tail: 0.0 })
    }

    pub fn with_defaults(p_max: f64) -> Result<Self> {
        Self::new(p_max, DEFAULT_RADIAL, DEFAULT_POLAR, DEFAULT_AZIMUTH)
    }

    /// Records an estimate of the probability mass beyond `p_max`.
    pub fn with_tail(mut self, tail: f64) -> Self {
        self.tail = tail;
        self
    }

    pub fn p_max(&self) -> f64 {
        self.p_max
    }

    pub fn tail(&self) -> f64 {
        self.tail
    }

    /// (radial, polar, azimuthal) node counts.
    pub fn sizes(&self) -> [usize; 3] {
        self.sizes
    }

    pub fn len(&self) -> usize {
        self.radial.len() * self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn radial_nodes(&self) -> &[(f64, f64)] {
        &self.radial
    }

    /// Unit directions with solid-angle weights.
    pub fn directions(&self) -> &[(Vec3, f64)] {
        &self.directions
    }

    /// ∫_0^{p_max} f(p) dp on the radial rule.
    pub fn integrate_radial<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        let terms: Vec<f64> = self.radial.iter().map(|&(p, w)| w * f(p)).collect();
        pairwise_sum(&terms)
    }

    /// ∫d³p f(p).
    pub fn integrate<F>(&self, f: F) -> Result<f64>
    where
        F: Fn(&Vec3) -> Result<f64> + Sync,
    {
        Ok(self.integrate_many(1, |p, out| {
            out[0] = f(p)?;
            Ok(())
        })?[0])
    }

    /// Integrates `n_out` functions at once. `f` fills its output slice at each node.
    ///
    /// Shells are evaluated in parallel; every sum is pairwise over a fixed
    /// node order, so the result does not depend on the thread count.
    pub fn integrate_many<F>(&self, n_out: usize, f: F) -> Result<Vec<f64>>
    where
        F: Fn(&Vec3, &mut [f64]) -> Result<()> + Sync,
    {
        let n_ang = self.directions.len();
        let shells: Vec<Vec<f64>> = self
            .radial
            .par_iter()
            .map(|&(p, wr)| {
                let mut terms = vec![0.0; n_out * n_ang];
                let mut buf = vec![0.0; n_out];
                for (a, (dir, wa)) in self.directions.iter().enumerate() {
                    buf.fill(0.0);
                    f(&(dir * p), &mut buf)?;
                    let w = p * p * wr * wa;
                    for (k, v) in buf.iter().enumerate() {
                        terms[k * n_ang + a] = w * v;
                    }
                }
                Ok(terms.chunks(n_ang.max(1)).map(pairwise_sum).collect())
            })
            .collect::<Result<_>>()?;
        Ok((0..n_out).map(|k| pairwise_sum(&shells.iter().map(|s| s[k]).collect::<Vec<_>>())).collect())
    }
}
