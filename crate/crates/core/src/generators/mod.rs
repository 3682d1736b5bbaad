//! Seeded, reproducible construction of sorted towers and of the key sets
//! that exercise every comparison outcome.

mod corpus;
mod keys;
mod planes;
mod rng;
mod threshold;

use std::fmt;
use std::str::FromStr;

use crate::tensor::{SortedTensor3, TensorError};

pub use corpus::{seeded_corpus, threshold_corpus, CorpusEntry, CorpusPlan, CorpusSource};
pub use keys::{double_scale, key_universe};
pub use planes::{monotone_binary_planes, MonotoneBinaryPlanes};
pub use rng::FixtureRng;
pub use threshold::{enumerate_threshold_tensors, ThresholdTensors, THRESHOLD_WEIGHT_MAX};

#[derive(Debug, thiserror::Error)]
pub enum GenError {
    #[error("generator for {expected} called with a {actual} spec")]
    WrongKind { expected: GenKind, actual: GenKind },
    #[error("alphabet size must be positive")]
    ZeroAlphabet,
    #[error("increment {value} at offset {offset} is negative")]
    NegativeIncrement { offset: usize, value: i64 },
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    /// Prefix sums of nonnegative increments drawn from `0..alphabet_size`.
    PrefixSum,
    /// 0/1 tower `[a*i + b*j + c*k >= t]`, weights in `0..=alphabet_size`.
    Threshold,
    /// One value from `0..alphabet_size` everywhere.
    AllEqual,
    /// A random linear extension of the grid order: every value distinct.
    DistinctRanks,
}

impl GenKind {
    pub fn name(self) -> &'static str {
        match self {
            GenKind::PrefixSum => "prefix",
            GenKind::Threshold => "threshold",
            GenKind::AllEqual => "equal",
            GenKind::DistinctRanks => "distinct",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            GenKind::PrefixSum,
            GenKind::Threshold,
            GenKind::AllEqual,
            GenKind::DistinctRanks,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| format!("unknown generator kind {s:?}"))
    }
}

/// Everything needed to rebuild a generated tensor bit for bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub dims: [usize; 3],
    pub kind: GenKind,
    pub seed: u64,
    pub alphabet_size: u64,
}

impl GenSpec {
    pub fn new(dims: [usize; 3], kind: GenKind, seed: u64) -> Self {
        GenSpec {
            dims,
            kind,
            seed,
            alphabet_size: 3,
        }
    }

    pub fn with_alphabet(mut self, alphabet_size: u64) -> Self {
        self.alphabet_size = alphabet_size;
        self
    }

    pub fn generate(&self) -> Result<SortedTensor3<i64>, GenError> {
        match self.kind {
            GenKind::PrefixSum => gen_prefix_sum_tensor(self),
            GenKind::Threshold => gen_threshold_tensor(self),
            GenKind::AllEqual => gen_all_equal_tensor(self),
            GenKind::DistinctRanks => gen_distinct_ranks_tensor(self),
        }
    }

    fn check(&self, expected: GenKind) -> Result<FixtureRng, GenError> {
        if self.kind != expected {
            return Err(GenError::WrongKind {
                expected,
                actual: self.kind,
            });
        }
        if self.dims.contains(&0) {
            return Err(TensorError::ZeroExtent { dims: self.dims }.into());
        }
        if self.alphabet_size == 0 {
            return Err(GenError::ZeroAlphabet);
        }
        Ok(FixtureRng::new(self.seed))
    }
}

pub fn gen_prefix_sum_tensor(spec: &GenSpec) -> Result<SortedTensor3<i64>, GenError> {
    let mut rng = spec.check(GenKind::PrefixSum)?;
    let cells: usize = spec.dims.iter().product();
    let increments: Vec<i64> = (0..cells).map(|_| rng.below(spec.alphabet_size) as i64).collect();
    prefix_sum_from_increments(spec.dims, &increments)
}

/// `a(i,j,k)` = sum of `increments` over the box `(0,0,0)..=(i,j,k)`.
pub fn prefix_sum_from_increments(dims: [usize; 3], increments: &[i64]) -> Result<SortedTensor3<i64>, GenError> {
    if let Some((offset, &value)) = increments.iter().enumerate().find(|(_, v)| **v < 0) {
        return Err(GenError::NegativeIncrement { offset, value });
    }
    if dims.contains(&0) {
        return Err(TensorError::ZeroExtent { dims }.into());
    }
    let cells: usize = dims.iter().product();
    if increments.len() != cells {
        return Err(TensorError::DimensionMismatch {
            expected: cells,
            actual: increments.len(),
        }
        .into());
    }
    let [n1, n2, n3] = dims;
    let mut values = increments.to_vec();
    // One cumulative pass per axis builds the box sum.
    for (stride, extent) in [(n2 * n3, n1), (n3, n2), (1, n3)] {
        for offset in 0..cells {
            if (offset / stride) % extent > 0 {
                values[offset] += values[offset - stride];
            }
        }
    }
    Ok(SortedTensor3::from_sorted_unchecked(dims, values))
}

pub fn gen_threshold_tensor(spec: &GenSpec) -> Result<SortedTensor3<i64>, GenError> {
    let mut rng = spec.check(GenKind::Threshold)?;
    let weights = [0; 3].map(|_| rng.inclusive(0, spec.alphabet_size));
    let top: u64 = (0..3).map(|k| weights[k] * (spec.dims[k] as u64 - 1)).sum();
    let t = rng.inclusive(0, top + 1) as i64;
    Ok(threshold_from_weights(spec.dims, weights, t))
}

/// `a(i,j,k) = 1` if `w1*i + w2*j + w3*k >= t`, else 0.
pub fn threshold_from_weights(dims: [usize; 3], weights: [u64; 3], t: i64) -> SortedTensor3<i64> {
    let [n1, n2, n3] = dims;
    let mut values = Vec::with_capacity(n1 * n2 * n3);
    for i in 0..n1 {
        for j in 0..n2 {
            for k in 0..n3 {
                let level = weights[0] * i as u64 + weights[1] * j as u64 + weights[2] * k as u64;
                values.push(i64::from(level as i64 >= t));
            }
        }
    }
    SortedTensor3::from_sorted_unchecked(dims, values)
}

pub fn gen_all_equal_tensor(spec: &GenSpec) -> Result<SortedTensor3<i64>, GenError> {
    let mut rng = spec.check(GenKind::AllEqual)?;
    let v = rng.below(spec.alphabet_size) as i64;
    Ok(SortedTensor3::from_sorted_unchecked(
        spec.dims,
        vec![v; spec.dims.iter().product()],
    ))
}

/// Ranks of a random topological order of the grid: a cell is released
/// once its three backward neighbours have been ranked, and each step
/// ranks a uniformly drawn released cell.
pub fn gen_distinct_ranks_tensor(spec: &GenSpec) -> Result<SortedTensor3<i64>, GenError> {
    let mut rng = spec.check(GenKind::DistinctRanks)?;
    let dims = spec.dims;
    let [n1, n2, n3] = dims;
    let cells = n1 * n2 * n3;
    let strides = [n2 * n3, n3, 1];
    let coord = |offset: usize, axis: usize| (offset / strides[axis]) % dims[axis];
    let mut waiting: Vec<u8> = (0..cells)
        .map(|off| (0..3).filter(|&k| coord(off, k) > 0).count() as u8)
        .collect();
    let mut ready = vec![0usize];
    let mut values = vec![0i64; cells];
    for rank in 0..cells {
        let pick = rng.below(ready.len() as u64) as usize;
        let off = ready.swap_remove(pick);
        values[off] = rank as i64;
        for k in 0..3 {
            if coord(off, k) + 1 < dims[k] {
                let next = off + strides[k];
                waiting[next] -= 1;
                if waiting[next] == 0 {
                    ready.push(next);
                }
            }
        }
    }
    Ok(SortedTensor3::from_sorted_unchecked(dims, values))
}
