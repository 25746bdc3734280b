//! The four Cauchy-operator kernel blocks on the gluing circles.
//!
//! With G(d) = 1 / (1 - e^{-2 pi i d}):
//!
//! ```text
//! a(z,w) = (1 - Yin(z) Yin(w)^-1) G(z-w),   z, w on  C_in
//! b(z,w) =      Yin(z) Yout(w)^-1 G(z-w),   z in C_in,  w in C_out
//! c(z,w) =    - Yout(z) Yin(w)^-1 G(z-w),   z in C_out, w in C_in
//! d(z,w) = (Yout(z) Yout(w)^-1 - 1) G(z-w), z, w on C_out
//! ```
//!
//! a and d have removable singularities on the diagonal; close to it the
//! cylindrical Cauchy factor is expanded as
//! G(d) = 1/(2 pi i d) + 1/2 + (2 pi i / 12) d + O(d^2) together with the
//! first-order expansion of Yin(z) Yin(w)^-1.

use super::mat2::Mat2;
use super::trinion::TrinionSolution;
use crate::error::Result;
use crate::specfun::{ci, TWO_PI};
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelWhich {
    A,
    B,
    C,
    D,
}

/// Switch distance to the Taylor branch for the diagonal kernels.
pub const DIAGONAL_SWITCH: f64 = 1e-4;

/// Cylindrical Cauchy factor 1 / (1 - e^{-2 pi i d}), stable for small |d|.
fn cauchy_factor(d: Complex64) -> Complex64 {
    // 1 - e^{-x} with x = 2 pi i d, via the series when |x| is small
    let x = -ci() * TWO_PI * d;
    if x.norm() < 1e-3 {
        // expm1 by series: e^x - 1 = x (1 + x/2 + x^2/6 + x^3/24 + x^4/120)
        let em1 = x * (1.0 + x * (0.5 + x * (1.0 / 6.0 + x * (1.0 / 24.0 + x / 120.0))));
        1.0 / (-em1)
    } else {
        1.0 / (1.0 - x.exp())
    }
}

/// Kernel evaluation per the table above. For `A` and `D` with
/// |z - w| < [`DIAGONAL_SWITCH`] the removable singularity is handled by
/// the displayed expansion of the Cauchy factor.
pub fn kernel_eval(
    which: KernelWhich,
    z: Complex64,
    w: Complex64,
    sol: &TrinionSolution,
) -> Result<Mat2> {
    match which {
        KernelWhich::A => diagonal_kernel(z, w, sol, false),
        KernelWhich::D => diagonal_kernel(z, w, sol, true),
        KernelWhich::B => {
            let g = cauchy_factor(z - w);
            Ok((sol.yin(z)? * sol.yout(w)?.inv()?).scale(g))
        }
        KernelWhich::C => {
            let g = cauchy_factor(z - w);
            Ok((sol.yout(z)? * sol.yin(w)?.inv()?).scale(-g))
        }
    }
}

fn diagonal_kernel(
    z: Complex64,
    w: Complex64,
    sol: &TrinionSolution,
    out_side: bool,
) -> Result<Mat2> {
    let d = z - w;
    if d.norm() >= DIAGONAL_SWITCH {
        let (yz, yw) = if out_side {
            (sol.yout(z)?, sol.yout(w)?)
        } else {
            (sol.yin(z)?, sol.yin(w)?)
        };
        let ratio = yz * yw.inv()?;
        let g = cauchy_factor(d);
        return Ok(if out_side {
            (ratio - Mat2::identity()).scale(g)
        } else {
            (Mat2::identity() - ratio).scale(g)
        });
    }
    diagonal_kernel_taylor(z, w, sol, out_side)
}

/// Taylor branch around the removable diagonal, expanded at the midpoint:
/// Y(z) Y(w)^-1 = 1 + d A + (d^2/2) A^2 + O(d^3) with A = Y'(u) Y(u)^-1,
/// u = (z+w)/2, against G(d) = 1/(2 pi i d) + 1/2 + (2 pi i/12) d.
pub(crate) fn diagonal_kernel_taylor(
    z: Complex64,
    w: Complex64,
    sol: &TrinionSolution,
    out_side: bool,
) -> Result<Mat2> {
    let d = z - w;
    let u = (z + w) / 2.0;
    let (yu, dy) = if out_side {
        // Yout'(u) by a tight central difference of the exact evaluator.
        let h = 1e-6;
        let dy = (sol.yout(u + h)? - sol.yout(u - h)?).scale(Complex64::new(1.0 / (2.0 * h), 0.0));
        (sol.yout(u)?, dy)
    } else {
        (sol.yin(u)?, sol.yin_dz(u)?)
    };
    let lin = dy * yu.inv()?;
    let one_minus_ratio = lin.scale(-d) - (lin * lin).scale(d * d / 2.0);
    let g_expansion = 1.0 / (ci() * TWO_PI * d) + 0.5 + ci() * TWO_PI / 12.0 * d;
    let m = one_minus_ratio.scale(g_expansion);
    Ok(if out_side {
        m.scale(-Complex64::new(1.0, 0.0))
    } else {
        m
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fredholm::trinion::Flavor;
    use crate::specfun::c64;

    fn sol() -> TrinionSolution {
        TrinionSolution::new(c64(0.31, 0.0), c64(0.17, 0.0), c64(0.23, 0.0), Flavor::Rank2)
            .unwrap()
    }

    fn sol_free() -> TrinionSolution {
        TrinionSolution::new(c64(0.31, 0.0), c64(0.0, 0.0), c64(0.23, 0.0), Flavor::Rank2)
            .unwrap()
    }

    #[test]
    fn free_a_kernel_is_diagonal_ratio() {
        // m = 0: a(z,w) = diag((1 - e^{+-2 pi i a (z-w)}) / (1 - e^{-2 pi i (z-w)}))
        let s = sol_free();
        let z = c64(0.31, -0.2);
        let w = c64(0.57, -0.2);
        let k = kernel_eval(KernelWhich::A, z, w, &s).unwrap();
        let d = z - w;
        let g = 1.0 / (1.0 - (-ci() * TWO_PI * d).exp());
        let e11 = (1.0 - (ci() * TWO_PI * s.a * d).exp()) * g;
        let e22 = (1.0 - (-ci() * TWO_PI * s.a * d).exp()) * g;
        assert!((k.at(0, 0) - e11).norm() < 1e-12);
        assert!((k.at(1, 1) - e22).norm() < 1e-12);
        assert!(k.at(0, 1).norm() < 1e-13 && k.at(1, 0).norm() < 1e-13);
    }

    #[test]
    fn removable_singularity_branch_jump_is_tiny() {
        // same point evaluated by both branches right at the switch
        let s = sol();
        let w = c64(0.4, -0.25);
        for out_side in [false, true] {
            let wp = if out_side { c64(0.4, 0.25) } else { w };
            let z = wp + c64(1.0e-4, 0.3e-4);
            let direct = {
                let d = z - wp;
                let (yz, yw) = if out_side {
                    (s.yout(z).unwrap(), s.yout(wp).unwrap())
                } else {
                    (s.yin(z).unwrap(), s.yin(wp).unwrap())
                };
                let ratio = yz * yw.inv().unwrap();
                let g = cauchy_factor(d);
                if out_side {
                    (ratio - Mat2::identity()).scale(g)
                } else {
                    (Mat2::identity() - ratio).scale(g)
                }
            };
            let taylor = diagonal_kernel_taylor(z, wp, &s, out_side).unwrap();
            let jump = (direct - taylor).norm_max();
            assert!(jump < 1e-8, "branch jump {jump:.3e} (out = {out_side})");
        }
    }

    #[test]
    fn a_kernel_bounded_on_grid_including_diagonal() {
        let s = sol();
        let mut max = 0.0f64;
        let n = 24;
        for i in 0..n {
            for j in 0..n {
                let z = c64(i as f64 / n as f64, -0.25);
                let w = c64(j as f64 / n as f64 + 0.5 / n as f64, -0.25);
                let k = kernel_eval(KernelWhich::A, z, w, &s).unwrap();
                assert!(k.is_finite());
                max = max.max(k.norm_max());
            }
        }
        assert!(max < 1e3, "kernel a blew up: {max:.3e}");
    }

    #[test]
    fn b_kernel_free_geometric_coefficients() {
        // m = 0: b11(z,w) = e^{-2 pi i nu} e^{2 pi i a (z-w)} / (1 - e^{-2 pi i (z-w)});
        // on circles Im z = -h, Im w = +h the geometric expansion in
        // e^{2 pi i (z-w)} converges.
        let s = sol_free();
        let z = c64(0.13, -0.2);
        let w = c64(0.71, 0.2);
        let k = kernel_eval(KernelWhich::B, z, w, &s).unwrap();
        let d = z - w;
        let mut series = c64(0.0, 0.0);
        for j in 0..200 {
            series += (ci() * TWO_PI * (s.a - j as f64) * d).exp();
        }
        let expect = (-ci() * TWO_PI * s.nu).exp() * series;
        assert!(
            (k.at(0, 0) - expect).norm() < 1e-12 * expect.norm(),
            "got {}, expect {expect}",
            k.at(0, 0)
        );
        assert!(k.at(0, 1).norm() < 1e-13);
    }
}
