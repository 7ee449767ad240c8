use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::WaveSpinor;
use crate::algebra::{Momentum, PauliSpinor, C64};
use crate::error::Result;

/// α(p) = P(p)e^{-|p|²/(2s²)} with P a random quadratic 2-vector polynomial in p/s
/// and s = max(m, 1). Smooth and decaying, with an analytic gradient.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianTestSpinor {
    width: f64,
    constant: [C64; 2],
    linear: [[C64; 3]; 2],
    quadratic: [[[C64; 3]; 3]; 2],
}

impl GaussianTestSpinor {
    pub fn new(seed: u64, mass: f64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut c = || C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        let constant = [c(), c()];
        let linear = [[c(), c(), c()], [c(), c(), c()]];
        let mut quadratic = [[[C64::from(0.0); 3]; 3]; 2];
        for block in quadratic.iter_mut() {
            for i in 0..3 {
                for j in i..3 {
                    block[i][j] = c();
                }
            }
        }
        Self { width: mass.max(1.0), constant, linear, quadratic }
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    fn polynomial(&self, u: &[f64; 3]) -> [C64; 2] {
        std::array::from_fn(|a| {
            let mut v = self.constant[a];
            for i in 0..3 {
                v += self.linear[a][i] * u[i];
                for j in i..3 {
                    v += self.quadratic[a][i][j] * (u[i] * u[j]);
                }
            }
            v
        })
    }

    /// ∂P/∂u_k.
    fn polynomial_gradient(&self, u: &[f64; 3], k: usize) -> [C64; 2] {
        std::array::from_fn(|a| {
            let mut v = self.linear[a][k];
            for i in 0..3 {
                for j in i..3 {
                    let c = self.quadratic[a][i][j];
                    if i == k {
                        v += c * u[j];
                    }
                    if j == k {
                        v += c * u[i];
                    }
                }
            }
            v
        })
    }

    fn scaled(&self, q: &Momentum) -> ([f64; 3], f64) {
        let p = q.p();
        let u = [p.x / self.width, p.y / self.width, p.z / self.width];
        let g = (-0.5 * (u[0] * u[0] + u[1] * u[1] + u[2] * u[2])).exp();
        (u, g)
    }
}

impl WaveSpinor for GaussianTestSpinor {
    fn value(&self, q: &Momentum) -> Result<PauliSpinor> {
        let (u, g) = self.scaled(q);
        let v = self.polynomial(&u);
        Ok(PauliSpinor::new(v[0] * g, v[1] * g))
    }

    fn gradient(&self, q: &Momentum) -> Result<[PauliSpinor; 3]> {
        let (u, g) = self.scaled(q);
        let v = self.polynomial(&u);
        let s = self.width;
        Ok(std::array::from_fn(|k| {
            let dv = self.polynomial_gradient(&u, k);
            let d = |a: usize| (dv[a] - v[a] * u[k]) * (g / s);
            PauliSpinor::new(d(0), d(1))
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_decaying() {
        let a = GaussianTestSpinor::new(1, 2.0);
        assert_eq!(a, GaussianTestSpinor::new(1, 2.0));
        assert_ne!(a, GaussianTestSpinor::new(2, 2.0));
        assert_eq!(a.width(), 2.0);
        let far = Momentum::from_components(40.0, 0.0, 0.0, 2.0).unwrap();
        assert!(a.value(&far).unwrap().norm() < 1e-40);
    }
}
