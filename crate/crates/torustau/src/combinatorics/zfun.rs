//! Nekrasov building blocks: the bifundamental factor over pairs of Young
//! diagrams, the rank-2 instanton ratio, and the perturbative Barnes-G
//! ratio with integer charge shifts.

use super::partition::{arm, leg, Partition};
use crate::error::{Error, Result};
use crate::specfun::barnes_g_ratio;
use num_complex::Complex64;

/// Bifundamental contribution
/// prod_{box in Y} (x + 1 + arm_{Y'}(box) + leg_Y(box))
/// * prod_{box' in Y'} (x - 1 - arm_Y(box') - leg_{Y'}(box')).
pub fn z_bif(x: Complex64, yp: &Partition, y: &Partition) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for cell in y.boxes() {
        acc *= x + 1.0 + (arm(yp, cell) + leg(y, cell)) as f64;
    }
    for cell in yp.boxes() {
        acc *= x - 1.0 - (arm(y, cell) + leg(yp, cell)) as f64;
    }
    acc
}

/// Rank-2 instanton factor: the 2x2 product of bifundamental ratios
/// prod_{a,b} Zbif(sigma_a - mu_b | Y_a, W_b) / Zbif(sigma_a - sigma_b | Y_a, Y_b).
pub fn z_inst(
    sigma: [Complex64; 2],
    mu: [Complex64; 2],
    yvec: [&Partition; 2],
    wvec: [&Partition; 2],
) -> Result<Complex64> {
    let mut acc = Complex64::new(1.0, 0.0);
    for alpha in 0..2 {
        for beta in 0..2 {
            let num = z_bif(sigma[alpha] - mu[beta], yvec[alpha], wvec[beta]);
            let den = z_bif(sigma[alpha] - sigma[beta], yvec[alpha], yvec[beta]);
            if den.norm() == 0.0 {
                return Err(Error::DivisionByZero(format!(
                    "Zbif denominator at (alpha,beta)=({alpha},{beta}), sigma diff {}",
                    sigma[alpha] - sigma[beta]
                )));
            }
            acc *= num / den;
        }
    }
    Ok(acc)
}

/// Perturbative ratio Zpert(a+Q, a+Q+m) / Zpert(a, a+m) for integer charge
/// shifts, telescoped entirely through Barnes-G ratios of Gamma products.
/// Depends on the charges only through n = q1 - q2.
pub fn z_pert_ratio(avec: [Complex64; 2], qvec: [i64; 2], m: Complex64) -> Result<Complex64> {
    let n = qvec[0] - qvec[1];
    if n == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let mut acc = Complex64::new(1.0, 0.0);
    for (delta, shift) in [(avec[0] - avec[1], n), (avec[1] - avec[0], -n)] {
        acc *= barnes_g_ratio(delta - m, shift)? / barnes_g_ratio(delta, shift)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::enumerate_partitions;
    use crate::specfun::c64;

    fn single() -> Partition {
        Partition::new(vec![1]).unwrap()
    }

    #[test]
    fn z_bif_hand_cases() {
        let x = c64(0.37, 0.21);
        let empty = Partition::empty();
        assert_eq!(z_bif(x, &empty, &empty), c64(1.0, 0.0));
        let both = z_bif(x, &single(), &single());
        let expect = (x + 1.0) * (x - 1.0);
        assert!((both - expect).norm() < 1e-15 * expect.norm());
        let mixed = z_bif(x, &empty, &single());
        assert!((mixed - x).norm() < 1e-15 * x.norm());
    }

    #[test]
    fn z_bif_reflection_sign() {
        // z_bif(x | Y', Y) = (-1)^{|Y|+|Y'|} z_bif(-x | Y, Y')
        let x = c64(0.41, -0.13);
        let parts = enumerate_partitions(4);
        for yp in &parts {
            for y in &parts {
                let lhs = z_bif(x, yp, y);
                let sign = if (y.size() + yp.size()) % 2 == 0 { 1.0 } else { -1.0 };
                let rhs = sign * z_bif(-x, y, yp);
                assert!(
                    (lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1.0),
                    "failed at ({yp}, {y})"
                );
            }
        }
    }

    #[test]
    fn z_inst_trivial_cases() {
        let empty = Partition::empty();
        let sigma = [c64(0.3, 0.0), c64(-0.3, 0.0)];
        let v = z_inst(sigma, sigma, [&empty, &empty], [&empty, &empty]).unwrap();
        assert_eq!(v, c64(1.0, 0.0));
        // mu = sigma and W = Y cancels termwise
        let y = Partition::new(vec![2, 1]).unwrap();
        let v = z_inst(sigma, sigma, [&y, &single()], [&y, &single()]).unwrap();
        assert!((v - 1.0).norm() < 1e-12);
    }

    #[test]
    fn z_inst_matches_direct_expansion() {
        let sigma = [c64(0.3, 0.0), c64(-0.3, 0.0)];
        let m = c64(0.17, 0.0);
        let mu = [sigma[0] + m, sigma[1] + m];
        let y1 = single();
        let empty = Partition::empty();
        let yvec = [&y1, &empty];
        let got = z_inst(sigma, mu, yvec, yvec).unwrap();
        let mut expect = c64(1.0, 0.0);
        for a in 0..2 {
            for b in 0..2 {
                expect *= z_bif(sigma[a] - mu[b], yvec[a], yvec[b])
                    / z_bif(sigma[a] - sigma[b], yvec[a], yvec[b]);
            }
        }
        assert!((got - expect).norm() < 1e-13 * expect.norm());
    }

    #[test]
    fn z_pert_ratio_trivial() {
        let avec = [c64(0.3, 0.0), c64(-0.3, 0.0)];
        assert_eq!(
            z_pert_ratio(avec, [0, 0], c64(0.17, 0.0)).unwrap(),
            c64(1.0, 0.0)
        );
        // m = 0 collapses numerator and denominator factor by factor
        for q in [[1i64, 0], [2, -1], [-1, 3]] {
            let v = z_pert_ratio(avec, q, c64(0.0, 0.0)).unwrap();
            assert!((v - 1.0).norm() < 1e-12, "q = {q:?} gave {v}");
        }
    }

    #[test]
    fn z_pert_ratio_gamma_product() {
        // (1,0) shift: [G(1+2a-m+1)/G(1+2a-m)] / [G(1+2a+1)/G(1+2a)] and the
        // mirrored factor; expressible through four Gamma values.
        use crate::specfun::gamma;
        let a = 0.3;
        let m = c64(0.17, 0.0);
        let avec = [c64(a, 0.0), c64(-a, 0.0)];
        let got = z_pert_ratio(avec, [1, 0], m).unwrap();
        let two_a = c64(2.0 * a, 0.0);
        let expect = gamma(1.0 + two_a - m).unwrap() / gamma(1.0 + two_a).unwrap()
            * (gamma(-two_a).unwrap() / gamma(-two_a - m).unwrap());
        assert!(
            (got - expect).norm() < 1e-12 * expect.norm(),
            "got {got}, expect {expect}"
        );
    }

    #[test]
    fn z_pert_ratio_depends_only_on_charge_difference() {
        let avec = [c64(0.31, 0.05), c64(-0.31, -0.05)];
        let m = c64(0.17, -0.02);
        let a1 = z_pert_ratio(avec, [2, 1], m).unwrap();
        let a2 = z_pert_ratio(avec, [1, 0], m).unwrap();
        assert!((a1 - a2).norm() < 1e-12 * a2.norm());
    }
}
