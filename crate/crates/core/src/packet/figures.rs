use crate::error::{Error, Result};

use super::profile::make_isotropic;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// q, ⟨H⟩/E(p̄), 2γ·disp(H)/p̄.
    Energy,
    /// q, ⟨V₊⟩/V(p̄), disp(V₊).
    Velocity,
}

impl Figure {
    pub fn from_number(which: u32) -> Result<Self> {
        match which {
            1 => Ok(Figure::Energy),
            2 => Ok(Figure::Velocity),
            _ => Err(Error::InvalidParameter(format!("figure {which} does not exist"))),
        }
    }

    pub fn columns(self) -> [&'static str; 3] {
        match self {
            Figure::Energy => ["q", "H_over_E", "two_gamma_dispH_over_pbar"],
            Figure::Velocity => ["q", "V_over_Vbar", "dispV"],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureTable {
    pub figure: Figure,
    pub rows: Vec<[f64; 3]>,
}

impl FigureTable {
    pub fn column(&self, k: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[k]).collect()
    }
}

/// Isotropic-packet curves at m = 1, γ = γm on q_k = q_min + (q_max - q_min)k/points,
/// k = 1..=points. The left end is excluded since q = 1 is not admissible.
pub fn figure_data(
    figure: Figure,
    q_min: f64,
    q_max: f64,
    points: usize,
    gamma_m: f64,
) -> Result<FigureTable> {
    if !(q_min >= 1.0 && q_max > q_min && q_max.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "q range ({q_min}, {q_max}] must satisfy 1 <= q_min < q_max"
        )));
    }
    if points == 0 {
        return Err(Error::InvalidParameter("points must be positive".into()));
    }
    if !(gamma_m > 0.0 && gamma_m.is_finite()) {
        return Err(Error::InvalidParameter(format!("gamma_m = {gamma_m}")));
    }
    let (m, gamma) = (1.0, gamma_m);
    let rows = (1..=points)
        .map(|k| {
            let q = q_min + (q_max - q_min) * k as f64 / points as f64;
            let pbar = q / gamma;
            let iso = make_isotropic(gamma, pbar, m)?;
            let e = (pbar * pbar + m * m).sqrt();
            Ok(match figure {
                Figure::Energy => [q, iso.mean_energy()? / e, 2.0 * gamma * iso.energy_dispersion()? / pbar],
                Figure::Velocity => [q, iso.mean_velocity()? / (pbar / e), iso.velocity_dispersion()?],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FigureTable { figure, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_and_monotonicity() {
        let f1 = figure_data(Figure::Energy, 1.0, 7.0, 60, 1.0).unwrap();
        let f2 = figure_data(Figure::Velocity, 1.0, 7.0, 60, 1.0).unwrap();
        assert_eq!(f1.rows.len(), 60);
        assert!((f1.rows[59][0] - 7.0).abs() < 1e-15 && f1.rows[0][0] > 1.0);
        for w in f1.rows.windows(2) {
            assert!(w[0][1] > w[1][1] && w[1][1] > 1.0);
            assert!(w[0][2] < w[1][2] && w[1][2] < 1.0 && w[0][2] > 0.0);
        }
        for w in f2.rows.windows(2) {
            assert!(w[0][1] < w[1][1] && w[1][1] < 1.0 && w[0][1] > 0.0);
            assert!(w[1][2] > 0.0);
        }
        let last1 = f1.rows[59];
        let last2 = f2.rows[59];
        assert!((last1[1] - 1.00075).abs() < 5e-5, "{}", last1[1]);
        assert!((last1[2] - 0.9786).abs() < 5e-4, "{}", last1[2]);
        assert!((last2[1] - 0.9975).abs() < 5e-4, "{}", last2[1]);
        assert!(last2[2] < 1e-4 && last2[2] < f2.rows[0][2]);
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(figure_data(Figure::Energy, 0.5, 7.0, 10, 1.0).is_err());
        assert!(figure_data(Figure::Energy, 3.0, 2.0, 10, 1.0).is_err());
        assert!(figure_data(Figure::Energy, 1.0, 2.0, 0, 1.0).is_err());
        assert!(Figure::from_number(3).is_err());
    }
}
