//! Weierstrass elliptic function from theta quotients.
//!
//! wp(z) = (theta1'(z)/theta1(z))^2 - theta1''(z)/theta1(z)
//!         + theta1'''(0) / (3 theta1'(0)),
//! with the additive constant fixed so the Laurent expansion at the origin
//! is z^{-2} + O(z^2). The derivative comes from differentiating the
//! log-theta representation once more, not from finite differences.

use super::theta::theta1_z_derivative;
use super::{c64, ModularParameter, SeriesControl};
use crate::error::{Error, Result};
use num_complex::Complex64;

const LATTICE_GUARD: f64 = 1e-8;

/// Returns (wp(z), wp'(z)).
pub fn weierstrass_p(
    z: Complex64,
    mp: &ModularParameter,
    ctl: &SeriesControl,
) -> Result<(Complex64, Complex64)> {
    let dist = mp.lattice_distance(z);
    if dist < LATTICE_GUARD {
        return Err(Error::LatticePoint { dist });
    }
    let t0 = theta1_z_derivative(0, z, mp, ctl)?;
    let t1 = theta1_z_derivative(1, z, mp, ctl)?;
    let t2 = theta1_z_derivative(2, z, mp, ctl)?;
    let t3 = theta1_z_derivative(3, z, mp, ctl)?;
    let d1_0 = theta1_z_derivative(1, c64(0.0, 0.0), mp, ctl)?;
    let d3_0 = theta1_z_derivative(3, c64(0.0, 0.0), mp, ctl)?;
    if t0.norm() == 0.0 {
        return Err(Error::LatticePoint { dist });
    }
    let l1 = t1 / t0;
    let p = l1 * l1 - t2 / t0 + d3_0 / (3.0 * d1_0);
    // wp' = -d^3/dz^3 log theta1
    let p_prime = -t3 / t0 + 3.0 * t2 * t1 / (t0 * t0) - 2.0 * l1 * l1 * l1;
    Ok((p, p_prime))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{g2_g3, SeriesControl};

    fn mp(im: f64) -> ModularParameter {
        ModularParameter::new(c64(0.0, im)).unwrap()
    }

    fn ctl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn parity() {
        let m = ModularParameter::new(c64(0.0, 0.8)).unwrap();
        let z = c64(0.23, 0.11);
        let (p1, d1) = weierstrass_p(z, &m, &ctl()).unwrap();
        let (p2, d2) = weierstrass_p(-z, &m, &ctl()).unwrap();
        assert!((p1 - p2).norm() < 1e-10 * p1.norm());
        assert!((d1 + d2).norm() < 1e-10 * d1.norm());
    }

    #[test]
    fn laurent_normalization() {
        let m = mp(0.9);
        let z = c64(1e-3, 0.0);
        let (p, _) = weierstrass_p(z, &m, &ctl()).unwrap();
        let lead = 1.0 / (z * z);
        assert!((p - lead).norm() < 1e-4, "wp - 1/z^2 = {:.3e}", (p - lead).norm());
    }

    #[test]
    fn differential_equation_with_eisenstein_invariants() {
        let m = mp(0.7);
        let (g2, g3) = g2_g3(&m, &ctl()).unwrap();
        for &z in &[c64(0.31, 0.17), c64(0.11, 0.29), c64(-0.27, 0.08)] {
            let (p, dp) = weierstrass_p(z, &m, &ctl()).unwrap();
            let lhs = dp * dp;
            let rhs = 4.0 * p * p * p - g2 * p - g3;
            assert!(
                (lhs - rhs).norm() < 1e-10 * rhs.norm().max(1.0),
                "wp ODE residual at {z}: {:.3e}",
                (lhs - rhs).norm()
            );
        }
    }

    #[test]
    fn lattice_periodicity() {
        let m = ModularParameter::new(c64(0.1, 0.85)).unwrap();
        let z = c64(0.29, 0.21);
        let (p0, _) = weierstrass_p(z, &m, &ctl()).unwrap();
        let (p1, _) = weierstrass_p(z + 1.0, &m, &ctl()).unwrap();
        let (p2, _) = weierstrass_p(z + m.tau, &m, &ctl()).unwrap();
        assert!((p1 - p0).norm() < 1e-10 * p0.norm());
        assert!((p2 - p0).norm() < 1e-10 * p0.norm());
    }

    #[test]
    fn pole_guard() {
        let m = mp(0.9);
        assert!(weierstrass_p(c64(1e-9, 0.0), &m, &ctl()).is_err());
        assert!(weierstrass_p(m.tau + 1.0, &m, &ctl()).is_err());
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let m = mp(0.8);
        let z = c64(0.21, 0.13);
        let h = 1e-5;
        let (_, dp) = weierstrass_p(z, &m, &ctl()).unwrap();
        let (pp, _) = weierstrass_p(z + h, &m, &ctl()).unwrap();
        let (pm, _) = weierstrass_p(z - h, &m, &ctl()).unwrap();
        let fd = (pp - pm) / (2.0 * h);
        assert!((dp - fd).norm() < 1e-6 * dp.norm());
    }
}
