//! Minimal 2x2 complex matrix arithmetic for kernel evaluation.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    /// Row-major entries [[e[0], e[1]], [e[2], e[3]]].
    pub e: [Complex64; 4],
}

impl Mat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self { e: [a, b, c, d] }
    }

    pub fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self::new(z, z, z, z)
    }

    pub fn identity() -> Self {
        let z = Complex64::new(0.0, 0.0);
        let o = Complex64::new(1.0, 0.0);
        Self::new(o, z, z, o)
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self::new(a, z, z, d)
    }

    /// Pauli sigma_1 (off-diagonal exchange).
    pub fn sigma1() -> Self {
        let z = Complex64::new(0.0, 0.0);
        let o = Complex64::new(1.0, 0.0);
        Self::new(z, o, o, z)
    }

    pub fn at(&self, row: usize, col: usize) -> Complex64 {
        self.e[2 * row + col]
    }

    pub fn det(&self) -> Complex64 {
        self.e[0] * self.e[3] - self.e[1] * self.e[2]
    }

    pub fn trace(&self) -> Complex64 {
        self.e[0] + self.e[3]
    }

    pub fn inv(&self) -> Result<Mat2> {
        let d = self.det();
        if d.norm() < 1e-290 {
            return Err(Error::SingularMatrix(format!(
                "2x2 inverse with |det| = {:.3e}",
                d.norm()
            )));
        }
        Ok(Mat2::new(self.e[3] / d, -self.e[1] / d, -self.e[2] / d, self.e[0] / d))
    }

    pub fn scale(&self, s: Complex64) -> Mat2 {
        Mat2 {
            e: [self.e[0] * s, self.e[1] * s, self.e[2] * s, self.e[3] * s],
        }
    }

    /// Max absolute entry.
    pub fn norm_max(&self) -> f64 {
        self.e.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.e.iter().all(|z| z.is_finite())
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2 {
            e: [
                self.e[0] + rhs.e[0],
                self.e[1] + rhs.e[1],
                self.e[2] + rhs.e[2],
                self.e[3] + rhs.e[3],
            ],
        }
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2 {
            e: [
                self.e[0] - rhs.e[0],
                self.e[1] - rhs.e[1],
                self.e[2] - rhs.e[2],
                self.e[3] - rhs.e[3],
            ],
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let a = &self.e;
        let b = &rhs.e;
        Mat2 {
            e: [
                a[0] * b[0] + a[1] * b[2],
                a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2],
                a[2] * b[1] + a[3] * b[3],
            ],
        }
    }
}
