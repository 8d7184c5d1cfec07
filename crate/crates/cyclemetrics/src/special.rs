//! Scalar special functions used by the distribution and statistics code.
//!
//! `ln_gamma` is computed by shifting the argument above 15 and applying the
//! Stirling series with Bernoulli coefficients through `B_14`; the truncation
//! error of the series is below 1e-19 for arguments >= 15, so the result is
//! accurate to f64 rounding over the whole positive axis. The correction term
//! `S(y) = ln Gamma(y) - [(y - 1/2) ln y - y + ln(2 pi)/2]` is exposed
//! separately because differences of huge `ln Gamma` values cancel
//! catastrophically; callers that need `ln Gamma(a) - ln Gamma(b)` for large
//! `a, b` should assemble the difference from `ln1p` terms plus
//! `stirling_correction` (see `cyclestats::loggamma_prob_z`).

use std::f64::consts::PI;

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

/// Stirling-series tail `S(y)` for `y >= 15`: `B_2/(2*1*y) + B_4/(4*3*y^3) + ...`
/// truncated after the `1/y^13` term (error < 1e-19 on this range).
pub fn stirling_correction(y: f64) -> f64 {
    debug_assert!(y >= 15.0);
    let w = 1.0 / y;
    let w2 = w * w;
    w * (1.0 / 12.0
        + w2 * (-1.0 / 360.0
            + w2 * (1.0 / 1260.0
                + w2 * (-1.0 / 1680.0
                    + w2 * (1.0 / 1188.0 + w2 * (-691.0 / 360_360.0 + w2 / 156.0))))))
}

/// Natural log of the Gamma function for `y > 0`.
pub fn ln_gamma(mut y: f64) -> f64 {
    assert!(y > 0.0, "ln_gamma requires a positive argument, got {y}");
    let mut shift = 0.0;
    while y < 15.0 {
        shift += y.ln();
        y += 1.0;
    }
    (y - 0.5) * y.ln() - y + HALF_LN_TWO_PI + stirling_correction(y) - shift
}

/// Standard normal CDF, accurate to ~1 ulp of the underlying `erfc`.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// Standard normal density.
pub fn normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * PI).sqrt()
}

/// Formats a float with 12 significant digits, plain decimal where readable.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let e = x.abs().log10().floor() as i32;
    if (-4..=14).contains(&e) {
        let prec = (11 - e).max(0) as usize;
        format!("{x:.prec$}")
    } else {
        format!("{x:.11e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_gamma_reference_values() {
        assert!((ln_gamma(1.0)).abs() < 1e-14);
        assert!((ln_gamma(2.0)).abs() < 1e-14);
        // Gamma(1/2) = sqrt(pi)
        assert!((ln_gamma(0.5) - PI.sqrt().ln()).abs() < 1e-14);
        // Gamma(10) = 9! = 362880
        assert!((ln_gamma(10.0) - 362_880f64.ln()).abs() < 1e-12);
        // lnGamma(100) from ln(99!)
        let ln99fact: f64 = (2..=99).map(|i| (i as f64).ln()).sum();
        assert!((ln_gamma(100.0) - ln99fact).abs() / ln99fact < 1e-14);
    }

    #[test]
    fn ln_gamma_recurrence_across_magnitudes() {
        for &y in &[0.3, 1.7, 14.9, 15.1, 1e3, 1e6, 1e9] {
            let lhs = ln_gamma(y + 1.0);
            let rhs = ln_gamma(y) + (y as f64).ln();
            let scale = lhs.abs().max(1.0);
            assert!(
                ((lhs - rhs) / scale).abs() < 1e-13,
                "recurrence failed at y={y}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn normal_cdf_reference_values() {
        assert_eq!(normal_cdf(0.0), 0.5);
        assert!((normal_cdf(1.959_963_984_540_054) - 0.975).abs() < 1e-12);
        assert!((normal_cdf(-1.0) - 0.158_655_253_931_457_05).abs() < 1e-12);
        assert!(normal_cdf(-8.0) < 1e-14);
        assert!(normal_cdf(8.0) > 1.0 - 1e-14);
    }

    #[test]
    fn sig12_formatting() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1.5), "1.50000000000");
        assert_eq!(sig12(-0.25), "-0.250000000000");
        assert!(sig12(3.360_781_186_54).starts_with("3.36078118654"));
        assert!(sig12(1e-20).contains('e'));
    }
}
