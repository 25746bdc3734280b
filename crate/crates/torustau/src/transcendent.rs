//! Inversion of the theta-constant ratio that encodes the Painleve
//! transcendent: given R, solve
//!
//! ```text
//! theta3(2Q | 2 tau) / theta2(2Q | 2 tau) = R
//! ```
//!
//! for Q by Newton iteration seeded either by a caller-provided previous
//! value (continuation along a tau path) or by the leading-nome
//! approximation theta3 ~ 1, theta2 ~ 2 q^{1/4} cos(2 pi Q).
//!
//! The ratio is invariant under Q -> Q + 1, Q -> Q + tau and Q -> -Q, so
//! the root is only defined modulo that group; the seed picks the branch.

use crate::error::{Error, Result};
use crate::specfun::{c64, ci, theta, theta_z_derivative, ModularParameter, SeriesControl, TWO_PI};
use num_complex::Complex64;

/// theta3(2Q|2tau) / theta2(2Q|2tau).
pub fn theta_ratio(q_val: Complex64, mp: &ModularParameter) -> Result<Complex64> {
    let ctl = SeriesControl::default();
    let d = mp.double();
    let t3 = theta(3, 2.0 * q_val, &d, &ctl)?;
    let t2 = theta(2, 2.0 * q_val, &d, &ctl)?;
    if t2.norm() < 1e-280 {
        return Err(Error::DegenerateRatio(
            "theta2(2Q|2tau) vanished during ratio evaluation".into(),
        ));
    }
    Ok(t3 / t2)
}

/// Solve theta3(2Q|2tau)/theta2(2Q|2tau) = target for Q near `seed`.
pub fn solve_theta_ratio(
    target: Complex64,
    mp: &ModularParameter,
    seed: Complex64,
) -> Result<Complex64> {
    let ctl = SeriesControl::default();
    let d = mp.double();

    let f = |q: Complex64| -> Result<(Complex64, Complex64)> {
        let t3 = theta(3, 2.0 * q, &d, &ctl)?;
        let t2 = theta(2, 2.0 * q, &d, &ctl)?;
        let d3 = theta_z_derivative(3, 1, 2.0 * q, &d, &ctl)? * 2.0;
        let d2 = theta_z_derivative(2, 1, 2.0 * q, &d, &ctl)? * 2.0;
        Ok((t3 - target * t2, d3 - target * d2))
    };

    // Candidate seeds: the caller's, and the leading-nome inversion
    // cos(2 pi Q) ~ 1 / (2 q^{1/4} R) as a fallback.
    let mut seeds = vec![seed];
    let w = 1.0 / (2.0 * mp.q_half.powc(c64(0.5, 0.0)) * target);
    if w.is_finite() {
        let acos = -ci() * (w + ci() * (1.0 - w * w).sqrt()).ln();
        let q0 = acos / TWO_PI;
        seeds.push(q0);
        seeds.push(-q0);
    }

    for start in seeds {
        let mut q = start;
        let mut converged = false;
        for _ in 0..80 {
            let (val, der) = f(q)?;
            if der.norm() < 1e-280 {
                break;
            }
            let step = val / der;
            q -= step;
            if step.norm() < 1e-13 * (1.0 + q.norm()) {
                converged = true;
                break;
            }
        }
        if converged {
            let (val, _) = f(q)?;
            let scale = theta(2, 2.0 * q, &d, &ctl)?.norm() * target.norm().max(1.0);
            if val.norm() <= 1e-8 * scale.max(1e-30) {
                return Ok(q);
            }
        }
    }
    Err(Error::RootNotFound(format!(
        "theta ratio inversion failed for target {target}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_then_invert_recovers_root() {
        let mp = ModularParameter::new(c64(0.1, 0.9)).unwrap();
        let q0 = c64(0.21, 0.05);
        let target = theta_ratio(q0, &mp).unwrap();
        let got = solve_theta_ratio(target, &mp, q0 + c64(0.03, -0.02)).unwrap();
        assert!((got - q0).norm() < 1e-9, "got {got}, want {q0}");
    }

    #[test]
    fn invariance_classes_are_equivalent_roots() {
        let mp = ModularParameter::new(c64(0.0, 0.8)).unwrap();
        let q0 = c64(0.17, 0.21);
        let r = theta_ratio(q0, &mp).unwrap();
        for shifted in [q0 + 1.0, q0 + mp.tau, -q0] {
            let r2 = theta_ratio(shifted, &mp).unwrap();
            assert!((r - r2).norm() < 1e-10 * r.norm().max(1.0), "at {shifted}");
        }
    }
}
