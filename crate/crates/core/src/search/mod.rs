//! Search routines over sorted towers.
//!
//! Every routine inspects the tensor only through the counting comparator,
//! so the probe count of a run is exactly its number of three-way
//! comparisons.

mod binary;
mod bird;
mod diagonal;
mod dispatch;
mod mahl;
mod oracle;
mod rows;
mod saddleback;

use std::fmt;
use std::str::FromStr;

use crate::tensor::{Index3, ProbeCounter, Scalar, SearchOutcome, SortedTensor3, TensorError};

pub use binary::binary_search_1d;
pub(crate) use binary::{search_line, LineHit};
pub use bird::{bird_search_2d, bird_split, BirdSplit};
pub use diagonal::{diagonal_pivot_search, PivotState};
pub use dispatch::one_two_d_dispatch;
pub use mahl::{mahl_e_search, partition_subtowers};
pub use oracle::linear_scan_oracle;
pub use rows::row_slab_baseline;
pub use saddleback::saddleback_2d;

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("unknown algorithm {0:?} (expected mahl, bird, saddleback, rows or scan)")]
    UnknownAlgorithm(String),
    #[error("{algorithm} needs a tensor with at most two extents above 1, got {dims:?}")]
    NotPlanar { algorithm: Algorithm, dims: [usize; 3] },
    #[error("view spans all three axes; it is not a vector or a matrix")]
    NotDegenerate,
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// A contiguous run of cells along one axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineView {
    pub origin: Index3,
    pub axis: usize,
    pub len: usize,
}

impl LineView {
    pub fn new(dims: [usize; 3], origin: Index3, axis: usize, len: usize) -> Result<Self, TensorError> {
        let line = LineView { origin, axis, len };
        let mut end = origin;
        end[axis] += len.saturating_sub(1);
        let fits = axis < 3 && len > 0 && (0..3).all(|k| end[k] < dims[k]);
        if !fits {
            return Err(TensorError::IndexOutOfBounds { index: end, dims });
        }
        Ok(line)
    }

    #[inline]
    pub fn at(&self, pos: usize) -> Index3 {
        let mut index = self.origin;
        index[self.axis] += pos;
        index
    }
}

/// A rectangle spanned by two distinct axes (`axes[0] < axes[1]`),
/// addressed as `(row, col)` with rows along `axes[0]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlaneView {
    pub origin: Index3,
    pub axes: [usize; 2],
    pub extents: [usize; 2],
}

impl PlaneView {
    pub fn new(dims: [usize; 3], origin: Index3, axes: [usize; 2], extents: [usize; 2]) -> Result<Self, TensorError> {
        let plane = PlaneView { origin, axes, extents };
        let ok_axes = axes[0] < axes[1] && axes[1] < 3;
        let ok_extents = extents[0] > 0 && extents[1] > 0;
        let mut end = origin;
        if ok_axes && ok_extents {
            end[axes[0]] += extents[0] - 1;
            end[axes[1]] += extents[1] - 1;
        }
        if !(ok_axes && ok_extents && (0..3).all(|k| end[k] < dims[k])) {
            return Err(TensorError::IndexOutOfBounds { index: end, dims });
        }
        Ok(plane)
    }

    /// The whole tensor as a plane, when at most two extents exceed 1.
    ///
    /// The plane uses the non-unit axes in order, padded with the
    /// lowest-numbered unit axes.
    pub fn spanning(dims: [usize; 3]) -> Option<Self> {
        let live: Vec<usize> = (0..3).filter(|&k| dims[k] > 1).collect();
        if live.len() > 2 {
            return None;
        }
        let mut axes: Vec<usize> = live.clone();
        for k in 0..3 {
            if axes.len() == 2 {
                break;
            }
            if !live.contains(&k) {
                axes.push(k);
            }
        }
        axes.sort_unstable();
        Some(PlaneView {
            origin: [0; 3],
            axes: [axes[0], axes[1]],
            extents: [dims[axes[0]], dims[axes[1]]],
        })
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> Index3 {
        let mut index = self.origin;
        index[self.axes[0]] += row;
        index[self.axes[1]] += col;
        index
    }

    pub(crate) fn column(&self, row0: usize, col: usize, len: usize) -> LineView {
        LineView {
            origin: self.at(row0, col),
            axis: self.axes[0],
            len,
        }
    }

    pub(crate) fn row(&self, row: usize, col0: usize, len: usize) -> LineView {
        LineView {
            origin: self.at(row, col0),
            axis: self.axes[1],
            len,
        }
    }
}

/// The searchable algorithms, by their command-line names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Mahl,
    Bird,
    Saddleback,
    Rows,
    Scan,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Mahl,
        Algorithm::Bird,
        Algorithm::Saddleback,
        Algorithm::Rows,
        Algorithm::Scan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Mahl => "mahl",
            Algorithm::Bird => "bird",
            Algorithm::Saddleback => "saddleback",
            Algorithm::Rows => "rows",
            Algorithm::Scan => "scan",
        }
    }

    /// Whether the algorithm can search a whole tensor of these extents.
    pub fn supports(self, dims: [usize; 3]) -> bool {
        match self {
            Algorithm::Bird | Algorithm::Saddleback => PlaneView::spanning(dims).is_some(),
            _ => true,
        }
    }

    /// Searches the whole tensor.
    pub fn run<T: Scalar>(
        self,
        tensor: &SortedTensor3<T>,
        key: &T,
        counter: &mut ProbeCounter,
    ) -> Result<SearchOutcome, SearchError> {
        let plane = || {
            PlaneView::spanning(tensor.dims()).ok_or(SearchError::NotPlanar {
                algorithm: self,
                dims: tensor.dims(),
            })
        };
        Ok(match self {
            Algorithm::Mahl => mahl_e_search(tensor, &crate::tensor::full_view(tensor), key, counter),
            Algorithm::Bird => bird_search_2d(tensor, &plane()?, key, counter),
            Algorithm::Saddleback => saddleback_2d(tensor, &plane()?, key, counter),
            Algorithm::Rows => row_slab_baseline(tensor, key, counter),
            Algorithm::Scan => linear_scan_oracle(tensor, key),
        })
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| SearchError::UnknownAlgorithm(s.to_string()))
    }
}
