use std::cmp::Ordering;
use std::fmt;

use super::{Index3, Scalar, SortedTensor3, TensorError};

/// Where the key lies relative to a probed entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ordering3 {
    /// `key < a(i)`: every entry dominating `i` can be discarded.
    Less,
    /// `key == a(i)`: the search is over.
    Equal,
    /// `key > a(i)`: every entry dominated by `i` can be discarded.
    Greater,
}

impl Ordering3 {
    fn compare<T: Scalar>(key: &T, entry: &T) -> Self {
        match key.partial_cmp(entry) {
            Some(Ordering::Less) => Ordering3::Less,
            Some(Ordering::Greater) => Ordering3::Greater,
            Some(Ordering::Equal) => Ordering3::Equal,
            None => unreachable!("unordered comparison between admissible values"),
        }
    }
}

/// Deliberate comparator faults, used to check that the verification
/// harness catches a broken search.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeFault {
    SwapLessGreater,
}

/// Tally of three-way probes for a single search run.
///
/// Optionally records the full probe trace.
#[derive(Clone, Debug, Default)]
pub struct ProbeCounter {
    count: u64,
    trace: Option<Vec<(Index3, Ordering3)>>,
    fault: Option<ProbeFault>,
}

impl ProbeCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// A counter that also records every `(index, outcome)` pair.
    pub fn recording() -> Self {
        ProbeCounter {
            trace: Some(Vec::new()),
            ..Self::default()
        }
    }

    #[doc(hidden)]
    pub fn with_fault(fault: ProbeFault) -> Self {
        ProbeCounter {
            fault: Some(fault),
            ..Self::default()
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Recorded probes, if this counter was created with [`ProbeCounter::recording`].
    pub fn trace(&self) -> Option<&[(Index3, Ordering3)]> {
        self.trace.as_deref()
    }

    #[inline]
    fn record(&mut self, index: Index3, outcome: Ordering3) -> Ordering3 {
        self.count += 1;
        let outcome = match (self.fault, outcome) {
            (Some(ProbeFault::SwapLessGreater), Ordering3::Less) => Ordering3::Greater,
            (Some(ProbeFault::SwapLessGreater), Ordering3::Greater) => Ordering3::Less,
            _ => outcome,
        };
        if let Some(trace) = self.trace.as_mut() {
            trace.push((index, outcome));
        }
        outcome
    }
}

/// Compares `key` with `a(index)`, counting one probe.
pub fn probe<T: Scalar>(
    tensor: &SortedTensor3<T>,
    index: Index3,
    key: &T,
    counter: &mut ProbeCounter,
) -> Result<Ordering3, TensorError> {
    if !tensor.contains_index(index) {
        return Err(TensorError::IndexOutOfBounds {
            index,
            dims: tensor.dims(),
        });
    }
    Ok(probe_at(tensor, index, key, counter))
}

/// Unchecked variant for algorithms whose view arithmetic guarantees bounds.
#[inline]
pub(crate) fn probe_at<T: Scalar>(
    tensor: &SortedTensor3<T>,
    index: Index3,
    key: &T,
    counter: &mut ProbeCounter,
) -> Ordering3 {
    let outcome = Ordering3::compare(key, tensor.at(index));
    counter.record(index, outcome)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchStatus {
    Found(Index3),
    NotFound,
}

/// Result of one search run: where (if anywhere) the key was met, and how
/// many probes it took.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub probes: u64,
}

impl SearchOutcome {
    pub fn new(found: Option<Index3>, probes: u64) -> Self {
        SearchOutcome {
            status: found.map_or(SearchStatus::NotFound, SearchStatus::Found),
            probes,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.status, SearchStatus::Found(_))
    }

    pub fn index(&self) -> Option<Index3> {
        match self.status {
            SearchStatus::Found(i) => Some(i),
            SearchStatus::NotFound => None,
        }
    }
}

/// The command-line line format: `found=<bool> index=<i1,i2,i3|-> probes=<n>`.
impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            SearchStatus::Found([a, b, c]) => {
                write!(f, "found=true index={a},{b},{c} probes={}", self.probes)
            }
            SearchStatus::NotFound => write!(f, "found=false index=- probes={}", self.probes),
        }
    }
}
