//! Small numerical helpers: pairwise summation and central differences.

use std::ops::Add;

use nalgebra::SMatrix;

use crate::algebra::C64;
use crate::error::Result;

const PAIRWISE_BLOCK: usize = 16;

/// Pairwise (cascade) summation. The result depends only on the order of `xs`.
pub fn pairwise_sum<T>(xs: &[T]) -> T
where
    T: Copy + Default + Add<Output = T>,
{
    if xs.len() <= PAIRWISE_BLOCK {
        return xs.iter().fold(T::default(), |acc, &x| acc + x);
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

/// Fourth-order central difference of `f` at `x` with step `h`.
pub fn central_difference<const R: usize, const C: usize, F>(
    mut f: F,
    x: f64,
    h: f64,
) -> Result<SMatrix<C64, R, C>>
where
    F: FnMut(f64) -> Result<SMatrix<C64, R, C>>,
{
    let f1 = f(x + h)? - f(x - h)?;
    let f2 = f(x + 2.0 * h)? - f(x - 2.0 * h)?;
    Ok((f1 * C64::from(8.0) - f2) / C64::from(12.0 * h))
}

/// Fourth-order central difference refined by one Richardson step (h, h/2).
pub fn richardson_difference<const R: usize, const C: usize, F>(
    mut f: F,
    x: f64,
    h: f64,
) -> Result<SMatrix<C64, R, C>>
where
    F: FnMut(f64) -> Result<SMatrix<C64, R, C>>,
{
    let coarse = central_difference(&mut f, x, h)?;
    let fine = central_difference(&mut f, x, 0.5 * h)?;
    Ok((fine * C64::from(16.0) - coarse) / C64::from(15.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::SVector;

    #[test]
    fn pairwise_sum_small_and_large() {
        assert_eq!(pairwise_sum::<f64>(&[]), 0.0);
        let xs: Vec<f64> = (1..=1000).map(f64::from).collect();
        assert_eq!(pairwise_sum(&xs), 500_500.0);
        let zs = vec![C64::new(0.1, -0.2); 100];
        assert!((pairwise_sum(&zs) - C64::new(10.0, -20.0)).norm() < 1e-12);
    }

    #[test]
    fn central_difference_of_exponential() {
        let f = |x: f64| Ok(SVector::<C64, 1>::new(C64::new(x.exp(), x.sin())));
        let d = central_difference(f, 0.3, 1e-3).unwrap();
        assert!((d[0] - C64::new(0.3f64.exp(), 0.3f64.cos())).norm() < 1e-12);
        let r = richardson_difference(f, 0.3, 1e-2).unwrap();
        assert!((r[0] - C64::new(0.3f64.exp(), 0.3f64.cos())).norm() < 1e-12);
    }
}
