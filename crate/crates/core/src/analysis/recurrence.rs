//! Probe budgets for the tower search.
//!
//! [`RecurrenceBound`] evaluates the cost recurrence with
//! concrete constants: `ceil(lg(n + 1))` for vectors, the exact split
//! recurrence of the matrix search for slabs, and for solid towers
//!
//! ```text
//! tau(n1, n2, n3) = ceil(lg(min(n1, n2, n3) + 1))
//!                 + tau(n1, ceil(n2/2), floor(n3/2))
//!                 + tau(floor(n1/2), n2, ceil(n3/2))
//!                 + tau(ceil(n1/2), floor(n2/2), n3)
//! ```
//!
//! with `tau = 0` on any empty shape. The subtower shapes are the
//! recurrence's fixed halvings, not the ones a particular run produces.
//!
//! [`PivotOutcomeBound`] replaces those fixed halvings with the worst case
//! over every way the diagonal search can end, which makes it an upper
//! bound on the implemented search by construction.

use std::collections::HashMap;

use super::AnalysisError;
use crate::search::{bird_split, partition_subtowers, BirdSplit, PivotState};
use crate::tensor::SubtowerView;

/// `ceil(lg(n + 1))`: the worst-case probe count of three-way binary search
/// on `n` entries.
pub fn ceil_lg_succ(n: usize) -> u64 {
    u64::from(usize::BITS - n.leading_zeros())
}

/// Memoized evaluator of the cost recurrence.
#[derive(Debug, Default)]
pub struct RecurrenceBound {
    towers: HashMap<[usize; 3], u64>,
    planes: PlanarBound,
}

impl RecurrenceBound {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn budget(&mut self, dims: [usize; 3]) -> Result<u64, AnalysisError> {
        if dims.contains(&0) {
            return Err(AnalysisError::ExtentZero { dims });
        }
        Ok(self.tau(dims))
    }

    /// Worst-case probes of the matrix search on `rows x cols`.
    pub fn planar(&mut self, rows: usize, cols: usize) -> u64 {
        self.planes.get(rows, cols)
    }

    fn tau(&mut self, dims: [usize; 3]) -> u64 {
        if let Some(flat) = flat_cost(dims, &mut self.planes) {
            return flat;
        }
        if let Some(&v) = self.towers.get(&dims) {
            return v;
        }
        let [n1, n2, n3] = dims;
        let min = n1.min(n2).min(n3);
        let v = ceil_lg_succ(min)
            + self.tau([n1, n2.div_ceil(2), n3 / 2])
            + self.tau([n1 / 2, n2, n3.div_ceil(2)])
            + self.tau([n1.div_ceil(2), n2 / 2, n3]);
        self.towers.insert(dims, v);
        v
    }
}

/// `tau(n1, n2, n3)` from a fresh evaluator.
pub fn recurrence_bound(n1: usize, n2: usize, n3: usize) -> Result<u64, AnalysisError> {
    RecurrenceBound::new().budget([n1, n2, n3])
}

/// Cost of shapes that are empty or flat along some axis; `None` for solid
/// towers.
fn flat_cost(dims: [usize; 3], planes: &mut PlanarBound) -> Option<u64> {
    if dims.contains(&0) {
        return Some(0);
    }
    let live: Vec<usize> = dims.iter().copied().filter(|&n| n > 1).collect();
    match live[..] {
        [] => Some(1),
        [n] => Some(ceil_lg_succ(n)),
        [rows, cols] => Some(planes.get(rows, cols)),
        _ => None,
    }
}

/// `B2(rows, cols) = ceil(lg(L + 1)) + max_k [B2(first residual) + B2(second residual)]`
/// where the searched line has length `L` and crosses at `k in 0..=L`.
#[derive(Debug, Default)]
struct PlanarBound {
    memo: HashMap<(usize, usize), u64>,
}

impl PlanarBound {
    fn get(&mut self, rows: usize, cols: usize) -> u64 {
        if rows == 0 || cols == 0 {
            return 0;
        }
        if let Some(&v) = self.memo.get(&(rows, cols)) {
            return v;
        }
        let v = match bird_split(rows, cols) {
            BirdSplit::Column { col } => {
                let (left, right) = (col, cols - 1 - col);
                ceil_lg_succ(rows)
                    + (0..=rows)
                        .map(|k| self.get(k, right) + self.get(rows - k, left))
                        .max()
                        .unwrap_or(0)
            }
            BirdSplit::Row { row } => {
                let (above, below) = (row, rows - 1 - row);
                ceil_lg_succ(cols)
                    + (0..=cols)
                        .map(|k| self.get(above, cols - k) + self.get(below, k))
                        .max()
                        .unwrap_or(0)
            }
        };
        self.memo.insert((rows, cols), v);
        v
    }
}

/// Budget that maximizes over every terminal state of the diagonal search
/// instead of assuming a central pivot.
#[derive(Debug, Default)]
pub struct PivotOutcomeBound {
    towers: HashMap<[usize; 3], u64>,
    planes: PlanarBound,
}

impl PivotOutcomeBound {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn budget(&mut self, dims: [usize; 3]) -> Result<u64, AnalysisError> {
        if dims.contains(&0) {
            return Err(AnalysisError::ExtentZero { dims });
        }
        Ok(self.cost(dims))
    }

    fn cost(&mut self, dims: [usize; 3]) -> u64 {
        if let Some(flat) = flat_cost(dims, &mut self.planes) {
            return flat;
        }
        if let Some(&v) = self.towers.get(&dims) {
            return v;
        }
        let view = SubtowerView::full(dims);
        let mut leaves = Vec::new();
        diagonal_leaves(view.lo(), view.hi(), 0, &mut leaves);
        let v = leaves
            .into_iter()
            .map(|(p1, p2, probes)| {
                let pivot = PivotState { p1, p2, found_at: None };
                probes
                    + partition_subtowers(&view, &pivot)
                        .iter()
                        .map(|sub| self.cost(sub.extents()))
                        .sum::<u64>()
            })
            .max()
            .unwrap_or(0);
        self.towers.insert(dims, v);
        v
    }
}

/// Every non-finding exit `(p1, p2, probes)` of the diagonal loop.
fn diagonal_leaves(p1: [isize; 3], p2: [isize; 3], probes: u64, out: &mut Vec<([isize; 3], [isize; 3], u64)>) {
    if (0..3).any(|k| p1[k] > p2[k]) {
        out.push((p1, p2, probes));
        return;
    }
    let c = [0, 1, 2].map(|k| (p1[k] + p2[k]).div_euclid(2));
    diagonal_leaves(c.map(|v| v + 1), p2, probes + 1, out);
    diagonal_leaves(p1, c.map(|v| v - 1), probes + 1, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_lg_matches_float_log() {
        for n in 0..5000usize {
            let expected = ((n + 1) as f64).log2().ceil() as u64;
            assert_eq!(ceil_lg_succ(n), expected, "n = {n}");
        }
    }

    #[test]
    fn base_cases() {
        assert_eq!(recurrence_bound(1, 1, 1).unwrap(), 1);
        assert_eq!(recurrence_bound(1, 1, 7).unwrap(), 3);
        assert_eq!(recurrence_bound(7, 1, 1).unwrap(), 3);
        assert_eq!(recurrence_bound(1, 8, 1).unwrap(), 4);
        assert!(matches!(
            recurrence_bound(0, 1, 1),
            Err(AnalysisError::ExtentZero { .. })
        ));
    }

    #[test]
    fn two_cube_hand_evaluation() {
        // ceil(lg 3) + tau(2,1,1) + tau(1,2,1) + tau(1,1,2) = 2 + 2 + 2 + 2.
        assert_eq!(recurrence_bound(2, 2, 2).unwrap(), 8);
    }

    #[test]
    fn planar_small_values() {
        let mut b = RecurrenceBound::new();
        assert_eq!(b.planar(1, 5), 3);
        // 2x2: first column (2 probes), then possibly the whole second column.
        assert_eq!(b.planar(2, 2), 4);
        assert_eq!(b.planar(2, 3), b.planar(3, 2));
        assert_eq!(recurrence_bound(1, 2, 2).unwrap(), 4);
        assert_eq!(recurrence_bound(2, 1, 2).unwrap(), 4);
    }

    #[test]
    fn outcome_bound_dominates_flat_cases_identically() {
        let mut a = RecurrenceBound::new();
        let mut b = PivotOutcomeBound::new();
        for dims in [[1, 1, 1], [1, 1, 9], [1, 4, 6], [5, 1, 3]] {
            assert_eq!(a.budget(dims).unwrap(), b.budget(dims).unwrap());
        }
    }

    #[test]
    fn diagonal_leaves_of_cube() {
        let mut leaves = Vec::new();
        diagonal_leaves([0; 3], [3; 3], 0, &mut leaves);
        // Three-way binary search over 4 diagonal cells: 5 gaps.
        assert_eq!(leaves.len(), 5);
        assert!(leaves.iter().all(|&(_, _, p)| p <= 3));
    }
}
