use std::fmt;

use super::{double_scale, enumerate_threshold_tensors, GenError, GenKind, GenSpec};
use crate::tensor::SortedTensor3;

/// Where a corpus tower came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CorpusSource {
    /// Threshold enumeration; the label is the enumeration index.
    Enumerated,
    /// A seeded generator; the label is the seed.
    Generated(GenKind),
    /// Exhaustive listing of two-valued matrices; the label is the index.
    BinaryPlane,
}

impl fmt::Display for CorpusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSource::Enumerated => f.write_str("enum"),
            CorpusSource::Generated(kind) => write!(f, "{kind}"),
            CorpusSource::BinaryPlane => f.write_str("plane"),
        }
    }
}

/// A measured instance.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusEntry<T = i64> {
    pub source: CorpusSource,
    pub label: u64,
    pub tensor: SortedTensor3<T>,
}

impl<T> CorpusEntry<T> {
    /// `source:label`, e.g. `prefix:17` or `enum:3`.
    pub fn tag(&self) -> String {
        format!("{}:{}", self.source, self.label)
    }
}

/// Enumerated threshold towers on the doubled scale (values 0 and 2).
pub fn threshold_corpus(dims: [usize; 3], limit: usize) -> Vec<CorpusEntry> {
    enumerate_threshold_tensors(dims, limit)
        .enumerate()
        .map(|(i, t)| CorpusEntry {
            source: CorpusSource::Enumerated,
            label: i as u64,
            tensor: double_scale(&t),
        })
        .collect()
}

/// `count` seeded towers with seeds `seed, seed + 1, ...`, doubled.
pub fn seeded_corpus(
    dims: [usize; 3],
    kind: GenKind,
    count: usize,
    seed: u64,
    alphabet_size: u64,
) -> Result<Vec<CorpusEntry>, GenError> {
    (0..count as u64)
        .map(|i| {
            let s = seed.wrapping_add(i);
            let spec = GenSpec::new(dims, kind, s).with_alphabet(alphabet_size);
            Ok(CorpusEntry {
                source: CorpusSource::Generated(kind),
                label: s,
                tensor: double_scale(&spec.generate()?),
            })
        })
        .collect()
}

/// Mix of enumerated and seeded towers used when sweeping many shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusPlan {
    /// Cap on enumerated threshold towers.
    pub threshold_limit: usize,
    /// Seeded towers of each listed kind.
    pub per_kind: usize,
    pub kinds: &'static [GenKind],
    pub seed: u64,
    pub alphabet_size: u64,
}

impl Default for CorpusPlan {
    fn default() -> Self {
        CorpusPlan {
            threshold_limit: 500,
            per_kind: 10,
            kinds: &[GenKind::PrefixSum, GenKind::Threshold, GenKind::DistinctRanks],
            seed: 0,
            alphabet_size: 3,
        }
    }
}

impl CorpusPlan {
    pub fn build(&self, dims: [usize; 3]) -> Result<Vec<CorpusEntry>, GenError> {
        let mut corpus = threshold_corpus(dims, self.threshold_limit);
        for &kind in self.kinds {
            corpus.extend(seeded_corpus(dims, kind, self.per_kind, self.seed, self.alphabet_size)?);
        }
        Ok(corpus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_and_scale() {
        let c = seeded_corpus([2, 2, 2], GenKind::PrefixSum, 3, 10, 3).unwrap();
        assert_eq!(c.iter().map(|e| e.label).collect::<Vec<_>>(), vec![10, 11, 12]);
        assert!(c.iter().all(|e| e.tensor.values().iter().all(|v| v % 2 == 0)));
        assert_eq!(c[0].tag(), "prefix:10");
        let t = threshold_corpus([1, 1, 1], 10);
        assert_eq!(t.len(), 2);
        assert_eq!(t[1].tensor.values(), &[2]);
        assert_eq!(t[1].tag(), "enum:1");
    }

    #[test]
    fn plan_is_deterministic() {
        let plan = CorpusPlan::default();
        assert_eq!(plan.build([3, 2, 4]).unwrap(), plan.build([3, 2, 4]).unwrap());
    }
}
