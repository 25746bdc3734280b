//! Maya diagrams and the bijection with charged partitions.
//!
//! A Maya diagram is the half-integer particle/hole picture of a charged
//! partition (Y, Q): the occupied positions are Q + Y_i - i + 1/2 for
//! i = 1, 2, ...; "particles" are the occupied positive positions, "holes"
//! the unoccupied negative ones. Positions are stored doubled (as odd
//! integers) so all arithmetic stays exact.

use super::partition::Partition;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Particle/hole configuration. `particles` are positive half-integers,
/// `holes` negative half-integers, both stored as twice their value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MayaDiagram {
    /// Doubled positions, strictly decreasing, all positive odd.
    pub particles: Vec<i64>,
    /// Doubled positions, strictly increasing, all negative odd.
    pub holes: Vec<i64>,
}

impl MayaDiagram {
    pub fn new(mut particles: Vec<i64>, mut holes: Vec<i64>) -> Result<Self> {
        particles.sort_unstable_by(|a, b| b.cmp(a));
        holes.sort_unstable();
        let ok_p = particles.iter().all(|&p| p > 0 && p % 2 != 0);
        let ok_h = holes.iter().all(|&h| h < 0 && h % 2 != 0);
        let distinct = |v: &[i64]| v.windows(2).all(|w| w[0] != w[1]);
        if !ok_p || !ok_h || !distinct(&particles) || !distinct(&holes) {
            return Err(Error::Domain(
                "Maya diagram needs distinct positive (negative) odd doubled positions".into(),
            ));
        }
        Ok(Self { particles, holes })
    }

    /// Total charge Q = #particles - #holes.
    pub fn charge(&self) -> i64 {
        self.particles.len() as i64 - self.holes.len() as i64
    }
}

/// Charged partition -> Maya diagram.
pub fn young_to_maya(y: &Partition, q: i64) -> MayaDiagram {
    let depth = y.len() as i64 + q.abs() + 2;
    let mut occupied = BTreeSet::new();
    for i in 1..=depth {
        // doubled position of 2(Q + Y_i - i) + 1
        let pos = 2 * (q + y.row(i as usize) as i64 - i) + 1;
        occupied.insert(pos);
    }
    let particles: Vec<i64> = occupied.iter().copied().filter(|&p| p > 0).collect();
    let min_occ = *occupied.iter().next().expect("nonempty");
    let holes: Vec<i64> = (0..)
        .map(|k| -1 - 2 * k)
        .take_while(|&h| h >= min_occ)
        .filter(|h| !occupied.contains(h))
        .collect();
    MayaDiagram::new(particles, holes).expect("constructed positions are valid")
}

/// Maya diagram -> charged partition (inverse of [`young_to_maya`]).
pub fn maya_to_young(m: &MayaDiagram) -> (Partition, i64) {
    let q = m.charge();
    let hole_set: BTreeSet<i64> = m.holes.iter().copied().collect();
    let deepest_hole = m.holes.first().copied().unwrap_or(-1);
    // Walk occupied positions in decreasing order: particles first, then
    // negative positions skipping holes. Rows stabilize at zero only once
    // the cursor has passed the deepest hole.
    let mut rows = Vec::new();
    let mut i: i64 = 0;
    let mut neg_cursor: i64 = -1;
    let mut p_iter = m.particles.iter().copied().peekable();
    loop {
        let pos = if let Some(&p) = p_iter.peek() {
            p_iter.next();
            p
        } else {
            while hole_set.contains(&neg_cursor) {
                neg_cursor -= 2;
            }
            let p = neg_cursor;
            neg_cursor -= 2;
            p
        };
        i += 1;
        // pos = 2(Q + Y_i - i) + 1  =>  Y_i = (pos - 1)/2 - Q + i
        let row = (pos - 1) / 2 - q + i;
        debug_assert!(row >= 0, "occupied positions must decode to a partition");
        if row == 0 && pos < deepest_hole {
            break;
        }
        if row > 0 {
            rows.push(row as u32);
        }
    }
    (
        Partition::new(rows).expect("decoded rows are weakly decreasing"),
        q,
    )
}

/// Left and right sides of the particle/hole position sum rule: the sum of
/// particle positions plus the sum of |hole| positions equals Q^2/2 + |Y|.
/// Returned as doubled integers (exact).
pub fn charge_sum_identity(m: &MayaDiagram) -> (i64, i64) {
    let lhs_doubled: i64 =
        m.particles.iter().sum::<i64>() + m.holes.iter().map(|h| -h).sum::<i64>();
    let (y, q) = maya_to_young(m);
    let rhs_doubled = q * q + 2 * y.size() as i64;
    (lhs_doubled, rhs_doubled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::enumerate_partitions;

    #[test]
    fn vacuum_is_empty() {
        let m = young_to_maya(&Partition::empty(), 0);
        assert!(m.particles.is_empty());
        assert!(m.holes.is_empty());
        let (y, q) = maya_to_young(&m);
        assert!(y.is_empty());
        assert_eq!(q, 0);
    }

    #[test]
    fn worked_example_charge_two() {
        // particles {13/2, 9/2, 3/2}, holes {-3/2}  <->  |Y| = 12, Q = 2
        let m = MayaDiagram::new(vec![13, 9, 3], vec![-3]).unwrap();
        let (y, q) = maya_to_young(&m);
        assert_eq!(q, 2);
        assert_eq!(y.size(), 12);
        assert_eq!(y.rows(), &[5, 4, 2, 1]);
        assert_eq!(young_to_maya(&y, q), m);
        // position sum rule: 13/2 + 9/2 + 3/2 + 3/2 = 14 = Q^2/2 + |Y|
        let (lhs2, rhs2) = charge_sum_identity(&m);
        assert_eq!(lhs2, 28);
        assert_eq!(rhs2, 28);
    }

    #[test]
    fn round_trip_exhaustive() {
        for y in enumerate_partitions(6) {
            for q in -3..=3i64 {
                let m = young_to_maya(&y, q);
                let (y2, q2) = maya_to_young(&m);
                assert_eq!((y2, q2), (y.clone(), q), "round trip failed at ({y}, {q})");
                assert_eq!(m.charge(), q);
            }
        }
    }

    #[test]
    fn position_sum_rule_exhaustive() {
        for y in enumerate_partitions(8) {
            for q in -3..=3i64 {
                let m = young_to_maya(&y, q);
                let (lhs, rhs) = charge_sum_identity(&m);
                assert_eq!(lhs, rhs, "sum rule failed at ({y}, {q})");
                assert_eq!(
                    m.particles.len() as i64 - m.holes.len() as i64,
                    q,
                    "charge count failed at ({y}, {q})"
                );
            }
        }
    }
}
