//! Integer partitions (Young diagrams) with exact arm/leg bookkeeping.

use crate::error::{Error, Result};
use std::fmt;

/// A partition as weakly decreasing positive rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    rows: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.iter().any(|&r| r == 0) {
            return Err(Error::Domain(format!(
                "partition rows must be weakly decreasing and positive: {rows:?}"
            )));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Row i (1-based); zero past the last row.
    pub fn row(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.rows.len() {
            self.rows[i - 1]
        } else {
            0
        }
    }

    /// Number of boxes |Y|.
    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Column length of column j (1-based), i.e. row j of the transpose.
    pub fn col(&self, j: usize) -> u32 {
        self.rows.iter().take_while(|&&r| r as usize >= j).count() as u32
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.row(1) as usize;
        let rows = (1..=cols).map(|j| self.col(j)).collect();
        Partition { rows }
    }

    /// Iterate boxes as 1-based (row, col) pairs, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r as usize).map(move |j| (i + 1, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

/// Arm length of box (i, j) relative to `y`: y_i - j. Negative when the box
/// lies outside `y`.
pub fn arm(y: &Partition, cell: (usize, usize)) -> i64 {
    y.row(cell.0) as i64 - cell.1 as i64
}

/// Leg length of box (i, j) relative to `y`: (y^T)_j - i.
pub fn leg(y: &Partition, cell: (usize, usize)) -> i64 {
    y.col(cell.1) as i64 - cell.0 as i64
}

/// All partitions of every size 0..=n_max, each exactly once, in a fixed
/// deterministic order (by size, then lexicographically descending rows).
pub fn enumerate_partitions(n_max: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        let mut current = Vec::new();
        gen(n, n, &mut current, &mut out);
    }
    out
}

fn gen(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            rows: current.clone(),
        });
        return;
    }
    let hi = remaining.min(max_part);
    for part in (1..=hi).rev() {
        current.push(part);
        gen(remaining - part, part, current, out);
        current.pop();
    }
}
