use std::collections::HashSet;

use crate::tensor::SortedTensor3;

/// Weights of the enumeration grid range over `0..=THRESHOLD_WEIGHT_MAX`.
pub const THRESHOLD_WEIGHT_MAX: u64 = 6;

/// Distinct 0/1 towers `[w1*i + w2*j + w3*k >= t]` over the weight grid.
///
/// Weight triples are visited in lexicographic order; for each, thresholds
/// run from above the largest level down to the smallest, so the all-zero
/// tower comes first. Repeats are skipped and at most `limit` towers are
/// produced.
pub fn enumerate_threshold_tensors(dims: [usize; 3], limit: usize) -> ThresholdTensors {
    let side = THRESHOLD_WEIGHT_MAX + 1;
    ThresholdTensors {
        dims,
        limit,
        emitted: 0,
        seen: HashSet::new(),
        next_weights: 0,
        weight_count: side * side * side,
        levels: Vec::new(),
        thresholds: Vec::new(),
    }
}

pub struct ThresholdTensors {
    dims: [usize; 3],
    limit: usize,
    emitted: usize,
    seen: HashSet<Vec<u64>>,
    next_weights: u64,
    weight_count: u64,
    /// Level `w . (i, j, k)` of every cell for the current weights.
    levels: Vec<u64>,
    /// Thresholds still to try for the current weights, smallest first.
    thresholds: Vec<u64>,
}

impl ThresholdTensors {
    fn load_next_weights(&mut self) -> bool {
        if self.next_weights >= self.weight_count {
            return false;
        }
        let side = THRESHOLD_WEIGHT_MAX + 1;
        let w = self.next_weights;
        let weights = [w / (side * side), (w / side) % side, w % side];
        self.next_weights += 1;
        let [n1, n2, n3] = self.dims;
        self.levels.clear();
        for i in 0..n1 as u64 {
            for j in 0..n2 as u64 {
                for k in 0..n3 as u64 {
                    self.levels.push(weights[0] * i + weights[1] * j + weights[2] * k);
                }
            }
        }
        let mut thresholds = self.levels.clone();
        thresholds.sort_unstable();
        thresholds.dedup();
        let top = *thresholds.last().unwrap_or(&0);
        thresholds.push(top + 1);
        self.thresholds = thresholds;
        true
    }
}

impl Iterator for ThresholdTensors {
    type Item = SortedTensor3<i64>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.dims.contains(&0) {
            return None;
        }
        while self.emitted < self.limit {
            let Some(t) = self.thresholds.pop() else {
                if !self.load_next_weights() {
                    return None;
                }
                continue;
            };
            let mut bits = vec![0u64; self.levels.len().div_ceil(64)];
            for (off, &level) in self.levels.iter().enumerate() {
                if level >= t {
                    bits[off / 64] |= 1 << (off % 64);
                }
            }
            if self.seen.insert(bits) {
                self.emitted += 1;
                let values = self.levels.iter().map(|&l| i64::from(l >= t)).collect();
                return Some(SortedTensor3::from_sorted_unchecked(self.dims, values));
            }
        }
        None
    }
}
