//! Gauss hypergeometric series 2F1(a, b; c; x) on the unit disk.
//!
//! The trinion solutions only ever need |x| < 1 (the convergence region of
//! their series expansions), so there is no analytic continuation here; the
//! disk edge is guarded by a configurable margin.

use super::{ensure_finite, SeriesControl};
use crate::accum::ComplexSum;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Margin below |x| = 1 accepted by default.
pub const DEFAULT_EDGE_MARGIN: f64 = 1e-3;

pub fn hyp2f1(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: Complex64,
    ctl: &SeriesControl,
) -> Result<Complex64> {
    hyp2f1_with_margin(a, b, c, x, DEFAULT_EDGE_MARGIN, ctl)
}

pub fn hyp2f1_with_margin(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: Complex64,
    margin: f64,
    ctl: &SeriesControl,
) -> Result<Complex64> {
    ctl.validate()?;
    if x.norm() > 1.0 - margin {
        return Err(Error::Domain(format!(
            "hyp2f1 argument |x| = {:.6} too close to the unit circle (margin {margin})",
            x.norm()
        )));
    }
    if is_nonpositive_integer(c) {
        return Err(Error::Pole(format!("hyp2f1 lower parameter c = {c}")));
    }
    let mut acc = ComplexSum::new();
    let mut term = Complex64::new(1.0, 0.0);
    acc.add(term);
    for n in 0..ctl.term_cutoff {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        acc.add(term);
        if term.norm() < ctl.tol {
            return ensure_finite(acc.total(), "hyp2f1 series");
        }
    }
    Err(Error::NonConvergent {
        what: "hyp2f1 series",
        cutoff: ctl.term_cutoff,
        last: term.norm(),
    })
}

/// d/dx 2F1(a,b;c;x) = (a b / c) 2F1(a+1, b+1; c+1; x).
pub fn hyp2f1_dx(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: Complex64,
    ctl: &SeriesControl,
) -> Result<Complex64> {
    Ok(a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, x, ctl)?)
}

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.re <= 0.5 && (z - z.re.round()).norm() < 1e-10 && z.re.round() <= 0.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::c64;

    fn ctl() -> SeriesControl {
        SeriesControl {
            term_cutoff: 1024,
            tol: 1e-16,
        }
    }

    #[test]
    fn value_at_origin_is_one() {
        let v = hyp2f1(c64(0.3, 0.1), c64(-0.4, 0.2), c64(1.1, 0.0), c64(0.0, 0.0), &ctl()).unwrap();
        assert!((v - 1.0).norm() < 1e-15);
    }

    #[test]
    fn binomial_collapse_when_b_equals_c() {
        // 2F1(a, b; b; x) = (1-x)^{-a}
        let a = c64(0.3, 0.0);
        let x = c64(0.4, 0.2);
        let v = hyp2f1(a, c64(0.9, -0.3), c64(0.9, -0.3), x, &ctl()).unwrap();
        let expect = (1.0 - x).powc(-a);
        assert!((v - expect).norm() < 1e-13 * expect.norm());
    }

    #[test]
    fn matches_brute_force_summation() {
        let (a, b, c, x) = (c64(0.2, 0.0), c64(0.5, 0.0), c64(1.3, 0.0), c64(0.35, 0.0));
        let mut sum = c64(0.0, 0.0);
        let mut term = c64(1.0, 0.0);
        for n in 0..200 {
            sum += term;
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        }
        let v = hyp2f1(a, b, c, x, &ctl()).unwrap();
        assert!((v - sum).norm() < 1e-14 * sum.norm());
    }

    #[test]
    fn satisfies_hypergeometric_ode() {
        // x(1-x) F'' + [c - (a+b+1)x] F' - a b F = 0 via central differences.
        let (a, b, c) = (c64(0.21, 0.13), c64(-0.33, 0.05), c64(0.8, -0.1));
        let x = c64(0.3, 0.12);
        let h = 1e-4;
        let f = |xx| hyp2f1(a, b, c, xx, &ctl()).unwrap();
        let f0 = f(x);
        let fp = (f(x + h) - f(x - h)) / (2.0 * h);
        let fpp = (f(x + h) + f(x - h) - 2.0 * f0) / (h * h);
        let resid = x * (1.0 - x) * fpp + (c - (a + b + 1.0) * x) * fp - a * b * f0;
        assert!(resid.norm() < 1e-6, "ODE residual {:.3e}", resid.norm());
    }

    #[test]
    fn edge_and_pole_guards() {
        assert!(hyp2f1(c64(0.1, 0.0), c64(0.1, 0.0), c64(1.0, 0.0), c64(0.9999, 0.0), &ctl()).is_err());
        assert!(hyp2f1(c64(0.1, 0.0), c64(0.1, 0.0), c64(-2.0, 0.0), c64(0.3, 0.0), &ctl()).is_err());
    }
}
