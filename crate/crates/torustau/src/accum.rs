//! Compensated (Neumaier) accumulation for deterministic series summation.
//!
//! All series in this crate are summed in a fixed index order with error
//! compensation, so results are bit-identical across runs and thread counts.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, Default)]
struct NeumaierF64 {
    sum: f64,
    comp: f64,
}

impl NeumaierF64 {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated accumulator for complex series.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: NeumaierF64,
    im: NeumaierF64,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn total(&self) -> Complex64 {
        Complex64::new(self.re.total(), self.im.total())
    }
}

/// Sum a slice in index order with compensation. Used as the deterministic
/// reduction after parallel per-sector evaluation.
pub fn ordered_sum(terms: &[Complex64]) -> Complex64 {
    let mut acc = ComplexSum::new();
    for &t in terms {
        acc.add(t);
    }
    acc.total()
}
