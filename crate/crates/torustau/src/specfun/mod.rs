//! Complex special functions used throughout the crate: Jacobi theta
//! functions and their z-derivatives, Dedekind eta, Weierstrass elliptic
//! functions, Eisenstein series, log-gamma, Barnes-G ratios and the Gauss
//! hypergeometric series on the unit disk.
//!
//! All operations are pure functions of their arguments and safe to call
//! from any number of threads.

mod barnes;
mod eisenstein;
mod eta;
mod gamma;
mod hyp2f1;
mod theta;
mod weier;

pub use barnes::barnes_g_ratio;
pub use eisenstein::{eisenstein_e2, eisenstein_e4, eisenstein_e6, g2_g3};
pub use eta::{dedekind_eta, dlog_eta_dtau, eta_euler_product};
pub use gamma::{gamma, ln_gamma};
pub use hyp2f1::{hyp2f1, hyp2f1_dx};
pub use theta::{theta, theta1_z_derivative, theta_z_derivative};
pub use weier::weierstrass_p;

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

pub const TWO_PI: f64 = 2.0 * PI;

#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub fn ci() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

/// The modular parameter tau together with its nome q = e^{2 pi i tau}.
///
/// Construction enforces Im(tau) > 0, so |q| < 1 everywhere downstream.
/// `q` is stored as `q_half * q_half` to keep the invariant exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModularParameter {
    pub tau: Complex64,
    pub q: Complex64,
    pub q_half: Complex64,
}

impl ModularParameter {
    pub fn new(tau: Complex64) -> Result<Self> {
        if !(tau.im > 0.0) || !tau.is_finite() {
            return Err(Error::Domain(format!(
                "modular parameter needs Im(tau) > 0, got tau = {tau}"
            )));
        }
        let q_half = (ci() * PI * tau).exp();
        Ok(Self {
            tau,
            q: q_half * q_half,
            q_half,
        })
    }

    /// Doubled modular parameter (nome squared), for the theta functions
    /// at 2 tau appearing in transcendent extraction.
    pub fn double(&self) -> Self {
        // Im(2 tau) > 0 is preserved, the constructor cannot fail.
        Self::new(self.tau * 2.0).expect("doubling preserves the upper half-plane")
    }

    /// Distance from z to the nearest point of Z + tau Z.
    pub fn lattice_distance(&self, z: Complex64) -> f64 {
        let n2 = (z.im / self.tau.im).round();
        let z1 = z - self.tau * n2;
        let n1 = z1.re.round();
        let reduced = z1 - n1;
        let mut best = f64::INFINITY;
        for dn2 in -1..=1 {
            for dn1 in -1..=1 {
                let d = (reduced - dn1 as f64 - self.tau * dn2 as f64).norm();
                if d < best {
                    best = d;
                }
            }
        }
        best
    }
}

/// Truncation control for all q-series in this module.
#[derive(Debug, Clone, Copy)]
pub struct SeriesControl {
    /// Maximum summation index.
    pub term_cutoff: usize,
    /// Absolute tail tolerance.
    pub tol: f64,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            term_cutoff: 256,
            tol: 1e-15,
        }
    }
}

impl SeriesControl {
    pub fn validate(&self) -> Result<()> {
        if self.term_cutoff < 1 || !(self.tol > 0.0) {
            return Err(Error::Domain(
                "series control needs term_cutoff >= 1 and tol > 0".into(),
            ));
        }
        Ok(())
    }
}

/// Guard that a computed value stayed finite.
pub(crate) fn ensure_finite(z: Complex64, what: &'static str) -> Result<Complex64> {
    if z.is_finite() {
        Ok(z)
    } else {
        Err(Error::Domain(format!("{what} produced a non-finite value")))
    }
}
