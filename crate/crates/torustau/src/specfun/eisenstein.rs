//! Eisenstein series E2, E4, E6 and the Weierstrass invariants g2, g3
//! for the lattice Z + tau Z.

use super::eta::lambert_series;
use super::{ModularParameter, SeriesControl};
use crate::error::Result;
use num_complex::Complex64;
use std::f64::consts::PI;

pub fn eisenstein_e2(mp: &ModularParameter, ctl: &SeriesControl) -> Result<Complex64> {
    Ok(1.0 - 24.0 * lambert_series(mp, 1, ctl)?)
}

pub fn eisenstein_e4(mp: &ModularParameter, ctl: &SeriesControl) -> Result<Complex64> {
    Ok(1.0 + 240.0 * lambert_series(mp, 3, ctl)?)
}

pub fn eisenstein_e6(mp: &ModularParameter, ctl: &SeriesControl) -> Result<Complex64> {
    Ok(1.0 - 504.0 * lambert_series(mp, 5, ctl)?)
}

/// (g2, g3) with g2 = (4 pi^4 / 3) E4 and g3 = (8 pi^6 / 27) E6.
pub fn g2_g3(mp: &ModularParameter, ctl: &SeriesControl) -> Result<(Complex64, Complex64)> {
    let g2 = 4.0 * PI.powi(4) / 3.0 * eisenstein_e4(mp, ctl)?;
    let g3 = 8.0 * PI.powi(6) / 27.0 * eisenstein_e6(mp, ctl)?;
    Ok((g2, g3))
}
