//! Local solutions of the three-point (trinion) linear system on the
//! cylinder, in terms of Gauss hypergeometric functions.
//!
//! With t = e^{-2 pi i z} (convergent for Im z < 0),
//!
//! ```text
//! Yin(z) = (1-t)^m diag(e^{2 pi i a z}, e^{-2 pi i a z}) F(t),
//! F(t) = [ 2F1(m, m-2a; -2a; t)                 -m/(2a) 2F1(1+m, m-2a; 1-2a; t)   ]
//!        [ m t/(2a+1) 2F1(1+m, 1+m+2a; 2+2a; t)  2F1(m, 1+m+2a; 1+2a; t)          ]
//! ```
//!
//! normalized so transporting z -> z+1 multiplies Yin on the left by
//! e^{2 pi i a sigma3} and det Yin = 1 identically. The out-solution is the
//! twist-conjugate Yout(z) = e^{2 pi i diag(nu, -nu)} sigma1 Yin(-z) sigma1,
//! convergent for Im z > 0.
//!
//! The rank-1 flavor multiplies Yin and Yout by the scalar gauge factors
//! e^{-+ i pi m z} (1 - e^{-+ 2 pi i z})^{-m}, which cancel the (1-t)^m
//! prefactors and shift the A-cycle exponents to a -+ m/2 and a +- m/2.

use super::mat2::Mat2;
use crate::error::{Error, Result};
use crate::specfun::{c64, ci, hyp2f1, hyp2f1_dx, SeriesControl, TWO_PI};
use num_complex::Complex64;

/// Which determinant flavor the solutions feed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// Plain solutions; A-cycle exponents (a, -a) on both circles.
    Rank2,
    /// Gauged solutions; exponents (a - m/2, -a - m/2) on the in-circle and
    /// (a + m/2, -a + m/2) on the out-circle.
    Rank1,
}

/// Trinion solution evaluator for fixed monodromy parameters.
#[derive(Debug, Clone, Copy)]
pub struct TrinionSolution {
    pub a: Complex64,
    pub m: Complex64,
    pub nu: Complex64,
    pub flavor: Flavor,
    ctl: SeriesControl,
}

impl TrinionSolution {
    pub fn new(a: Complex64, m: Complex64, nu: Complex64, flavor: Flavor) -> Result<Self> {
        // c-parameters are -2a, 1-2a, 1+2a, 2+2a: exclude 2a near integers.
        let two_a = 2.0 * a;
        if two_a.im.abs() < 1e-9 && (two_a.re - two_a.re.round()).abs() < 1e-9 {
            return Err(Error::Pole(format!(
                "hypergeometric parameters degenerate at 2a = {two_a}"
            )));
        }
        Ok(Self {
            a,
            m,
            nu,
            flavor,
            ctl: SeriesControl {
                term_cutoff: 2048,
                tol: 1e-16,
            },
        })
    }

    /// A-cycle exponents on the in-circle, one per color.
    pub fn sigma_in(&self) -> [Complex64; 2] {
        match self.flavor {
            Flavor::Rank2 => [self.a, -self.a],
            Flavor::Rank1 => [self.a - self.m / 2.0, -self.a - self.m / 2.0],
        }
    }

    /// A-cycle exponents on the out-circle.
    pub fn sigma_out(&self) -> [Complex64; 2] {
        match self.flavor {
            Flavor::Rank2 => [self.a, -self.a],
            Flavor::Rank1 => [self.a + self.m / 2.0, -self.a + self.m / 2.0],
        }
    }

    fn hyp_matrix(&self, t: Complex64) -> Result<Mat2> {
        let (a, m) = (self.a, self.m);
        let two_a = 2.0 * a;
        let f11 = hyp2f1(m, m - two_a, -two_a, t, &self.ctl)?;
        let f12 = -m / two_a * hyp2f1(1.0 + m, m - two_a, 1.0 - two_a, t, &self.ctl)?;
        let f21 = m * t / (two_a + 1.0) * hyp2f1(1.0 + m, 1.0 + m + two_a, 2.0 + two_a, t, &self.ctl)?;
        let f22 = hyp2f1(m, 1.0 + m + two_a, 1.0 + two_a, t, &self.ctl)?;
        Ok(Mat2::new(f11, f12, f21, f22))
    }

    /// d/dt of the hypergeometric matrix.
    fn hyp_matrix_dt(&self, t: Complex64) -> Result<Mat2> {
        let (a, m) = (self.a, self.m);
        let two_a = 2.0 * a;
        let d11 = hyp2f1_dx(m, m - two_a, -two_a, t, &self.ctl)?;
        let d12 = -m / two_a * hyp2f1_dx(1.0 + m, m - two_a, 1.0 - two_a, t, &self.ctl)?;
        let d21 = m / (two_a + 1.0)
            * (hyp2f1(1.0 + m, 1.0 + m + two_a, 2.0 + two_a, t, &self.ctl)?
                + t * hyp2f1_dx(1.0 + m, 1.0 + m + two_a, 2.0 + two_a, t, &self.ctl)?);
        let d22 = hyp2f1_dx(m, 1.0 + m + two_a, 1.0 + two_a, t, &self.ctl)?;
        Ok(Mat2::new(d11, d12, d21, d22))
    }

    /// In-solution, valid for Im z < 0.
    pub fn yin(&self, z: Complex64) -> Result<Mat2> {
        let t = (-ci() * TWO_PI * z).exp();
        if t.norm() >= 1.0 {
            return Err(Error::Domain(format!(
                "Yin requires |e^(-2 pi i z)| < 1, got {:.4} at z = {z}",
                t.norm()
            )));
        }
        let f = self.hyp_matrix(t)?;
        let diag = Mat2::diag(
            (ci() * TWO_PI * self.a * z).exp(),
            (-ci() * TWO_PI * self.a * z).exp(),
        );
        let m = match self.flavor {
            // (1-t)^m prefactor
            Flavor::Rank2 => (diag * f).scale((1.0 - t).powc(self.m)),
            // gauge e^{-i pi m z} (1-t)^{-m} cancels the prefactor
            Flavor::Rank1 => (diag * f).scale((-ci() * std::f64::consts::PI * self.m * z).exp()),
        };
        if !m.is_finite() {
            return Err(Error::Domain(format!("Yin not finite at z = {z}")));
        }
        Ok(m)
    }

    /// Out-solution, valid for Im z > 0.
    pub fn yout(&self, z: Complex64) -> Result<Mat2> {
        let s1 = Mat2::sigma1();
        let base = self.yin_mirror(-z)?;
        let twist = Mat2::diag(
            (ci() * TWO_PI * self.nu).exp(),
            (-ci() * TWO_PI * self.nu).exp(),
        );
        let m = match self.flavor {
            Flavor::Rank2 => twist * (s1 * base * s1),
            // gauge e^{+i pi m z} (1 - e^{2 pi i z})^{-m}: with w = -z the
            // mirror already dropped its (1-e^{-2 pi i w})^m prefactor, so
            // only the exponential remains.
            Flavor::Rank1 => (twist * (s1 * base * s1))
                .scale((ci() * std::f64::consts::PI * self.m * z).exp()),
        };
        if !m.is_finite() {
            return Err(Error::Domain(format!("Yout not finite at z = {z}")));
        }
        Ok(m)
    }

    /// Yin without any scalar gauge (used by the mirror inside yout, which
    /// applies its own flavor-dependent scalars).
    fn yin_mirror(&self, w: Complex64) -> Result<Mat2> {
        let t = (-ci() * TWO_PI * w).exp();
        if t.norm() >= 1.0 {
            return Err(Error::Domain(format!(
                "Yout requires |e^(2 pi i z)| < 1, got {:.4}",
                t.norm()
            )));
        }
        let f = self.hyp_matrix(t)?;
        let diag = Mat2::diag(
            (ci() * TWO_PI * self.a * w).exp(),
            (-ci() * TWO_PI * self.a * w).exp(),
        );
        let m = match self.flavor {
            Flavor::Rank2 => (diag * f).scale((1.0 - t).powc(self.m)),
            Flavor::Rank1 => diag * f,
        };
        Ok(m)
    }

    /// d/dz Yin, for the diagonal limit of same-circle kernels.
    pub fn yin_dz(&self, z: Complex64) -> Result<Mat2> {
        let t = (-ci() * TWO_PI * z).exp();
        let dt_dz = -ci() * TWO_PI * t;
        let f = self.hyp_matrix(t)?;
        let df = self.hyp_matrix_dt(t)?.scale(dt_dz);
        let ea = (ci() * TWO_PI * self.a * z).exp();
        let diag = Mat2::diag(ea, 1.0 / ea);
        let ddiag = Mat2::diag(ci() * TWO_PI * self.a * ea, -ci() * TWO_PI * self.a / ea);
        match self.flavor {
            Flavor::Rank2 => {
                let pref = (1.0 - t).powc(self.m);
                let dpref = self.m * (1.0 - t).powc(self.m - 1.0) * (-dt_dz);
                Ok((diag * f).scale(dpref) + (ddiag * f + diag * df).scale(pref))
            }
            Flavor::Rank1 => {
                let pref = (-ci() * std::f64::consts::PI * self.m * z).exp();
                let dpref = -ci() * std::f64::consts::PI * self.m * pref;
                Ok((diag * f).scale(dpref) + (ddiag * f + diag * df).scale(pref))
            }
        }
    }
}
