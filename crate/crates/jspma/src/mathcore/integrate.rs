//! Adaptive quadrature.
//!
//! Recursive adaptive Simpson with a Richardson error estimate and a global
//! evaluation budget. Infinite upper limits are handled by the caller via
//! [`gamma_tail_cutoff`]: for Gamma-family integrands the cutoff
//! `m + 40 sqrt(m) + 40` leaves tail mass below 1e-12, which makes the
//! truncation deterministic and testable.

use super::MathError;

const REL_TOL: f64 = 1e-9;
const ABS_TOL: f64 = 1e-14;
const DEFAULT_BUDGET: usize = 4_000_000;
const MAX_DEPTH: u32 = 60;

/// Truncation point x with `1 - chi2_cdf(x, m) < 1e-12`.
pub fn gamma_tail_cutoff(m: u32) -> f64 {
    let mf = m as f64;
    mf + 40.0 * mf.sqrt() + 40.0
}

/// Adaptive quadrature of `f` over `[a, b]` with relative error target 1e-8.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> Result<f64, MathError> {
    integrate_with_budget(f, a, b, DEFAULT_BUDGET)
}

/// Same as [`integrate`] but with an explicit refinement budget; returns
/// [`MathError::NonConvergence`] when the budget is exhausted before the
/// error estimate settles.
pub fn integrate_with_budget<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    budget: usize,
) -> Result<f64, MathError> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(MathError::Domain(format!(
            "integration limits must be finite, got [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a);
    let fm = f(0.5 * (a + b));
    let fb = f(b);
    let whole = simpson(a, b, fa, fm, fb);
    let mut evals = budget as isize - 3;
    let value = adapt(&f, a, b, fa, fm, fb, whole, REL_TOL, 0, &mut evals)?;
    Ok(value)
}

#[inline]
fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    rel_tol: f64,
    depth: u32,
    evals: &mut isize,
) -> Result<f64, MathError> {
    *evals -= 2;
    if *evals < 0 {
        return Err(MathError::NonConvergence(format!(
            "refinement budget exhausted on [{a}, {b}]"
        )));
    }
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let refined = left + right;
    let err = refined - whole;
    let scale = refined.abs().max(ABS_TOL / rel_tol);
    if err.abs() <= 15.0 * rel_tol * scale || depth >= MAX_DEPTH {
        if depth >= MAX_DEPTH && err.abs() > 1e6 * rel_tol * scale {
            return Err(MathError::NonConvergence(format!(
                "max depth reached with error {err:.3e} on [{a}, {b}]"
            )));
        }
        return Ok(refined + err / 15.0);
    }
    // Halving the tolerance per side keeps the global error bounded.
    let half_tol = 0.5 * rel_tol;
    let l = adapt(f, a, m, fa, flm, fm, left, half_tol, depth + 1, evals)?;
    let r = adapt(f, m, b, fm, frm, fb, right, half_tol, depth + 1, evals)?;
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mathcore::chi2_pdf;

    #[test]
    fn density_normalization() {
        let v = integrate(|x| chi2_pdf(x, 8), 0.0, gamma_tail_cutoff(8)).unwrap();
        assert!((v - 1.0).abs() < 1e-8, "got {v}");
    }

    #[test]
    fn gamma_mean() {
        for m in [1u32, 4, 16, 64] {
            let v = integrate(|x| x * chi2_pdf(x, m), 0.0, gamma_tail_cutoff(m)).unwrap();
            assert!((v - m as f64).abs() < 1e-6, "m={m}: got {v}");
        }
    }

    #[test]
    fn polynomial_is_exact() {
        let v = integrate(|x| x * x * x, 0.0, 2.0).unwrap();
        assert!((v - 4.0).abs() < 1e-12);
    }

    #[test]
    fn handles_endpoint_square_root_singularity() {
        // Integral of sqrt(1 - x^2) over [-1, 1] is pi/2; the derivative
        // blows up at both endpoints like the Marchenko-Pastur edges.
        let v = integrate(|x| (1.0 - x * x).max(0.0).sqrt(), -1.0, 1.0).unwrap();
        assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-8, "got {v}");
    }

    #[test]
    fn empty_interval_is_zero() {
        assert_eq!(integrate(|x| x, 3.0, 3.0).unwrap(), 0.0);
    }

    #[test]
    fn reports_budget_exhaustion() {
        // 1/x over (~0, 1] needs unbounded refinement near the origin.
        let r = integrate_with_budget(|x| 1.0 / x, 1e-300, 1.0, 2_000);
        assert!(matches!(r, Err(MathError::NonConvergence(_))));
    }

    #[test]
    fn rejects_infinite_limits() {
        assert!(integrate(|x| x, 0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn tail_cutoff_really_cuts_the_tail() {
        for m in [1u32, 8, 64] {
            let tail = 1.0 - crate::mathcore::chi2_cdf(gamma_tail_cutoff(m), m);
            assert!(tail < 1e-12, "m={m}: tail mass {tail}");
        }
    }
}
