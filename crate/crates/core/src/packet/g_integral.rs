use crate::error::{Error, Result};

/// Relative accuracy requested from the double-exponential rule.
const REL_TARGET: f64 = 1e-14;

/// ∫_0^∞ f(p) dp by double-exponential quadrature after p = s·t/(1 - t).
///
/// `scale` should sit near the bulk of the integrand. Returns the value and the
/// rule's error estimate.
pub fn half_line_integral<F: Fn(f64) -> f64>(f: F, scale: f64) -> (f64, f64) {
    let g = |t: f64| {
        let u = 1.0 - t;
        if u <= 0.0 {
            return 0.0;
        }
        let v = f(scale * t / u) * scale / (u * u);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    let rough = quadrature::integrate(g, 0.0, 1.0, 1e-6);
    let target = (REL_TARGET * rough.integral.abs()).max(f64::MIN_POSITIVE);
    let fine = quadrature::integrate(g, 0.0, 1.0, target);
    (fine.integral, fine.error_estimate)
}

/// G(ν, ρ; μ) = ∫_0^∞ p^{2ν-1}(p² + m²)^{ρ-1}e^{-μp} dp.
pub fn g_integral(nu: f64, rho: f64, mu: f64, m: f64) -> Result<f64> {
    Ok(g_integral_with_error(nu, rho, mu, m)?.0)
}

/// [`g_integral`] together with the quadrature error estimate.
pub fn g_integral_with_error(nu: f64, rho: f64, mu: f64, m: f64) -> Result<(f64, f64)> {
    if !(nu.is_finite() && rho.is_finite() && m.is_finite()) {
        return Err(Error::InvalidParameter("non-finite G parameters".into()));
    }
    if m < 0.0 {
        return Err(Error::InvalidParameter(format!("mass {m} is negative")));
    }
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::Divergent(format!("G needs mu > 0, got {mu}")));
    }
    let small_p_power = if m > 0.0 { 2.0 * nu } else { 2.0 * nu + 2.0 * rho - 2.0 };
    if small_p_power <= 0.0 {
        return Err(Error::Divergent(format!("G(nu={nu}, rho={rho}) is not integrable at p = 0")));
    }
    let (a, b) = (2.0 * nu - 1.0, rho - 1.0);
    let m2 = m * m;
    let ln_f = |p: f64| a * p.ln() + b * (p * p + m2).ln() - mu * p;
    let scale = (2.0 * nu + 2.0 * rho - 3.0).max(1.0) / mu;
    if small_p_power >= 1.0 {
        return Ok(half_line_integral(|p| ln_f(p).exp(), scale));
    }
    // An integrable singularity p^{k-1} at 0 defeats the endpoint truncation of
    // the DE rule. On [0, c] the map p = c·w^{1/k} makes the integrand finite.
    let (c, k) = (scale, small_p_power);
    let head = quadrature::integrate(
        |w: f64| {
            let p = c * w.powf(1.0 / k);
            (ln_f(p) + p.ln() - k.ln() - w.ln()).exp()
        },
        0.0,
        1.0,
        1e-15,
    );
    let (tail, tail_err) = half_line_integral(|x| ln_f(c + x).exp(), scale);
    Ok((head.integral + tail, head.error_estimate + tail_err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use statrs::function::gamma::{gamma, ln_gamma};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn rho_one_is_a_gamma_integral() {
        for (nu, mu) in [(1.5f64, 2.0f64), (2.0, 1.0), (0.6, 3.0), (7.0, 2.0), (4.25, 0.7)] {
            let want = (ln_gamma(2.0 * nu) - 2.0 * nu * mu.ln()).exp();
            let got = g_integral(nu, 1.0, mu, 1.3).unwrap();
            assert!(rel(got, want) < 1e-12, "{nu} {mu} {}", rel(got, want));
        }
    }

    #[test]
    fn massless_collapse() {
        for (nu, rho, mu) in [(2.0f64, 1.5f64, 2.0f64), (2.5, 0.5, 2.0), (3.0, 0.0, 1.0), (1.2, 0.3, 0.5)] {
            let s = 2.0 * nu + 2.0 * rho - 2.0;
            let want = gamma(s) / mu.powf(s);
            let got = g_integral(nu, rho, mu, 0.0).unwrap();
            assert!(rel(got, want) < 1e-12, "{nu} {rho} {}", rel(got, want));
        }
    }

    #[test]
    fn divergent_parameters() {
        assert!(matches!(g_integral(1.0, 1.0, 0.0, 1.0), Err(Error::Divergent(_))));
        assert!(matches!(g_integral(0.0, 1.0, 1.0, 1.0), Err(Error::Divergent(_))));
        assert!(matches!(g_integral(0.5, 0.5, 1.0, 0.0), Err(Error::Divergent(_))));
        assert!(g_integral(0.5, 0.5, 1.0, 1.0).is_ok());
        assert!(matches!(g_integral(1.0, 1.0, 1.0, -1.0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn strong_endpoint_singularity() {
        for (nu, mu) in [(0.05f64, 1.0f64), (0.3, 0.3), (0.45, 4.0)] {
            let want = (ln_gamma(2.0 * nu) - 2.0 * nu * mu.ln()).exp();
            let got = g_integral(nu, 1.0, mu, 0.7).unwrap();
            assert!(rel(got, want) < 1e-12, "{nu} {mu} {}", rel(got, want));
        }
        let got = g_integral(0.5, 0.75, 2.0, 0.0).unwrap();
        let want = gamma(0.5) / 2f64.powf(0.5);
        assert!(rel(got, want) < 1e-12, "{}", rel(got, want));
    }

    #[test]
    fn half_line_exponential() {
        let (v, _) = half_line_integral(|p| (-p).exp(), 1.0);
        assert!((v - 1.0).abs() < 1e-13, "{v}");
    }
}
