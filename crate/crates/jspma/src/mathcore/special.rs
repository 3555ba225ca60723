//! Gaussian tail and chi-square (Gamma) distribution machinery.
//!
//! Channel gains `h^H h` for an `M`-antenna receiver with unit-variance
//! complex entries follow the Gamma(M, 1) law, i.e. a chi-square with 2M
//! degrees of freedom in the natural normalization
//! `f(x) = exp(-x) x^(M-1) / (M-1)!`. All factorials are evaluated in the
//! log domain so that M up to 64 stays well inside f64 range.

use super::MathError;

/// Gaussian tail probability Q(x) = P(N(0,1) > x).
///
/// Evaluated through the complementary error function; absolute error is
/// below 1e-15 over the whole real line.
pub fn q_function(x: f64) -> f64 {
    debug_assert!(x.is_finite(), "q_function expects finite input");
    0.5 * libm::erfc(x * std::f64::consts::FRAC_1_SQRT_2)
}

/// Natural log of the Gamma function.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// Natural log of the binomial coefficient C(n, k).
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    assert!(k <= n, "ln_binomial requires k <= n");
    ln_gamma((n + 1) as f64) - ln_gamma((k + 1) as f64) - ln_gamma((n - k + 1) as f64)
}

/// Density of the squared channel norm for `m` antennas:
/// `exp(-x) x^(m-1) / (m-1)!` for x >= 0, zero otherwise.
pub fn chi2_pdf(x: f64, m: u32) -> f64 {
    assert!(m >= 1, "chi2_pdf requires m >= 1");
    if x < 0.0 {
        return 0.0;
    }
    if x == 0.0 {
        return if m == 1 { 1.0 } else { 0.0 };
    }
    (-x + (m as f64 - 1.0) * x.ln() - ln_gamma(m as f64)).exp()
}

/// Distribution function `1 - exp(-x) * sum_{k=0}^{m-1} x^k / k!` for x >= 0.
///
/// Each series term is evaluated in the log domain, so the sum stays finite
/// for any x representable in f64.
pub fn chi2_cdf(x: f64, m: u32) -> f64 {
    assert!(m >= 1, "chi2_cdf requires m >= 1");
    if x <= 0.0 {
        return 0.0;
    }
    let ln_x = x.ln();
    let mut tail = 0.0;
    for k in 0..m {
        let ln_term = if k == 0 {
            -x
        } else {
            k as f64 * ln_x - ln_gamma(k as f64 + 1.0) - x
        };
        tail += ln_term.exp();
    }
    (1.0 - tail).clamp(0.0, 1.0)
}

/// Inverse of [`chi2_cdf`] in x for fixed `m`, to |cdf(x) - p| <= 1e-10.
///
/// Implemented by bracketing plus bisection; rejects p outside [0, 1).
pub fn chi2_inverse_cdf(p: f64, m: u32) -> Result<f64, MathError> {
    assert!(m >= 1, "chi2_inverse_cdf requires m >= 1");
    if !(0.0..1.0).contains(&p) {
        return Err(MathError::Domain(format!(
            "chi2_inverse_cdf requires 0 <= p < 1, got {p}"
        )));
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    let mut hi = super::gamma_tail_cutoff(m);
    // The cutoff guarantees cdf(hi) > 1 - 1e-12; extend for p even closer to 1.
    while chi2_cdf(hi, m) < p {
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(MathError::NonConvergence(
                "chi2_inverse_cdf bracket expansion overflowed".into(),
            ));
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval exhausted at f64 resolution
        }
        if chi2_cdf(mid, m) < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
