//! Barnes-G ratios with integer shifts.
//!
//! Every Barnes-G occurrence in the perturbative partition functions comes
//! in the ratio G(1+x+n)/G(1+x) with integer n, which telescopes through
//! G(1+z+1) = Gamma(1+z) G(1+z) into a finite product of gamma values.
//! G itself is never evaluated.

use super::gamma::gamma;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// G(1 + x + n) / G(1 + x) as a finite product of Gamma factors.
///
/// n >= 1: prod_{k=0}^{n-1} Gamma(1 + x + k);
/// n = 0: 1; n <= -1: 1 / prod_{k=1}^{|n|} Gamma(1 + x - k).
pub fn barnes_g_ratio(x: Complex64, n: i64) -> Result<Complex64> {
    let mut acc = Complex64::new(1.0, 0.0);
    if n >= 0 {
        for k in 0..n {
            acc *= gamma_checked(x + 1.0 + k as f64)?;
        }
        Ok(acc)
    } else {
        for k in 1..=(-n) {
            acc *= gamma_checked(x + 1.0 - k as f64)?;
        }
        if acc.norm() == 0.0 {
            return Err(Error::Pole(format!(
                "Barnes-G ratio denominator vanished at x = {x}, n = {n}"
            )));
        }
        Ok(1.0 / acc)
    }
}

fn gamma_checked(z: Complex64) -> Result<Complex64> {
    gamma(z).map_err(|_| Error::Pole(format!("Gamma pole at {z} inside Barnes-G telescoping")))
}
