//! Sorted three-dimensional arrays ("towers"), subtower views and the
//! counting three-way comparator every search routine goes through.
//!
//! Storage is row-major with the third axis varying fastest. All indices are
//! 0-based; `(0, 0, 0)` is the minimum (south-west) corner.

mod probe;
mod text;
mod view;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

pub use probe::{probe, Ordering3, ProbeCounter, ProbeFault, SearchOutcome, SearchStatus};
pub use text::{parse_text, read_tensor_file, to_text, write_tensor_file};
pub use view::SubtowerView;

pub(crate) use probe::probe_at;

/// A cell coordinate `(i1, i2, i3)`.
pub type Index3 = [usize; 3];

/// Errors raised while building, indexing or (de)serializing tensors.
#[derive(Debug, thiserror::Error)]
pub enum TensorError {
    #[error("every extent must be at least 1, got {dims:?}")]
    ZeroExtent { dims: [usize; 3] },
    #[error("expected {expected} values for the given extents, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("values are not sorted: a{lower:?} > a{upper:?}")]
    NotSorted { lower: Index3, upper: Index3 },
    #[error("value at {index:?} is not totally ordered (NaN?)")]
    Unordered { index: Index3 },
    #[error("index {index:?} is outside a tensor of extents {dims:?}")]
    IndexOutOfBounds { index: Index3, dims: [usize; 3] },
    #[error("view corners {lo:?}..={hi:?} do not fit extents {dims:?}")]
    ViewOutOfBounds {
        lo: [isize; 3],
        hi: [isize; 3],
        dims: [usize; 3],
    },
    #[error("malformed tensor text: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Element types a tower can hold.
///
/// Comparison must be a total order over admissible values. The helper
/// methods produce keys that fall into each three-way outcome class and
/// return `None` when the type cannot represent one.
pub trait Scalar: Copy + PartialOrd + fmt::Debug + fmt::Display + FromStr + Send + Sync + 'static {
    /// `false` for values outside the total order (float NaN).
    fn is_admissible(&self) -> bool {
        true
    }
    /// Some value strictly below `self`.
    fn below(&self) -> Option<Self>;
    /// Some value strictly above `self`.
    fn above(&self) -> Option<Self>;
    /// Some value strictly between `lo < hi`.
    fn between(lo: Self, hi: Self) -> Option<Self>;
}

macro_rules! int_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn below(&self) -> Option<Self> {
                self.checked_sub(1)
            }
            fn above(&self) -> Option<Self> {
                self.checked_add(1)
            }
            fn between(lo: Self, hi: Self) -> Option<Self> {
                let mid = lo + (hi - lo) / 2;
                (mid > lo && mid < hi).then_some(mid)
            }
        }
    )*};
}

int_scalar!(i8, i16, i32, i64, u8, u16, u32, u64);

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn is_admissible(&self) -> bool {
                !self.is_nan()
            }
            fn below(&self) -> Option<Self> {
                let v = if self.is_finite() { self - self.abs().max(1.0) } else { <$t>::NEG_INFINITY };
                (v < *self).then_some(v)
            }
            fn above(&self) -> Option<Self> {
                let v = if self.is_finite() { self + self.abs().max(1.0) } else { <$t>::INFINITY };
                (v > *self).then_some(v)
            }
            fn between(lo: Self, hi: Self) -> Option<Self> {
                let mid = lo / 2.0 + hi / 2.0;
                (mid > lo && mid < hi).then_some(mid)
            }
        }
    )*};
}

float_scalar!(f32, f64);

/// An immutable, validated tower: nondecreasing along each of its three axes.
#[derive(Clone, PartialEq)]
pub struct SortedTensor3<T> {
    dims: [usize; 3],
    values: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for SortedTensor3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SortedTensor3")
            .field("dims", &self.dims)
            .field("values", &self.values)
            .finish()
    }
}

impl<T: Scalar> SortedTensor3<T> {
    /// Validates `values` (row-major, third axis fastest) against `dims`.
    ///
    /// Sortedness is checked by comparing every cell with its three forward
    /// neighbours; by transitivity that is equivalent to the full
    /// coordinatewise order condition. The first violation in row-major
    /// order (axis 1 neighbour, then axis 2, then axis 3) is reported.
    pub fn from_values(dims: [usize; 3], values: Vec<T>) -> Result<Self, TensorError> {
        if dims.contains(&0) {
            return Err(TensorError::ZeroExtent { dims });
        }
        let expected =
            dims.iter()
                .try_fold(1usize, |acc, &n| acc.checked_mul(n))
                .ok_or(TensorError::DimensionMismatch {
                    expected: usize::MAX,
                    actual: values.len(),
                })?;
        if values.len() != expected {
            return Err(TensorError::DimensionMismatch {
                expected,
                actual: values.len(),
            });
        }
        let tensor = SortedTensor3 { dims, values };
        tensor.check_sorted()?;
        Ok(tensor)
    }

    fn check_sorted(&self) -> Result<(), TensorError> {
        let [n1, n2, n3] = self.dims;
        let strides = [n2 * n3, n3, 1];
        for (offset, value) in self.values.iter().enumerate() {
            let index = self.index_of(offset);
            if !value.is_admissible() {
                return Err(TensorError::Unordered { index });
            }
            for axis in 0..3 {
                if index[axis] + 1 < [n1, n2, n3][axis] {
                    let next = &self.values[offset + strides[axis]];
                    if !matches!(value.partial_cmp(next), Some(Ordering::Less | Ordering::Equal)) {
                        let mut upper = index;
                        upper[axis] += 1;
                        if !next.is_admissible() {
                            return Err(TensorError::Unordered { index: upper });
                        }
                        return Err(TensorError::NotSorted { lower: index, upper });
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds a tensor the caller already knows to be sorted.
    pub(crate) fn from_sorted_unchecked(dims: [usize; 3], values: Vec<T>) -> Self {
        debug_assert_eq!(values.len(), dims.iter().product::<usize>());
        SortedTensor3 { dims, values }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    /// Number of cells, `n1 * n2 * n3`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always `false`: every extent is at least 1.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn contains_index(&self, index: Index3) -> bool {
        index.iter().zip(self.dims).all(|(&i, n)| i < n)
    }

    pub fn get(&self, index: Index3) -> Option<&T> {
        self.contains_index(index).then(|| &self.values[self.offset(index)])
    }

    /// Row-major offset of an in-bounds index.
    #[inline]
    pub fn offset(&self, index: Index3) -> usize {
        (index[0] * self.dims[1] + index[1]) * self.dims[2] + index[2]
    }

    /// Inverse of [`SortedTensor3::offset`].
    pub fn index_of(&self, offset: usize) -> Index3 {
        let [_, n2, n3] = self.dims;
        [offset / (n2 * n3), (offset / n3) % n2, offset % n3]
    }

    #[inline]
    pub(crate) fn at(&self, index: Index3) -> &T {
        &self.values[self.offset(index)]
    }

    /// Applies a strictly increasing map to every value. The result is sorted
    /// whenever `f` preserves order, which is checked.
    pub fn map_monotone<U: Scalar>(&self, f: impl Fn(T) -> U) -> Result<SortedTensor3<U>, TensorError> {
        SortedTensor3::from_values(self.dims, self.values.iter().map(|&v| f(v)).collect())
    }
}

impl<T: Scalar> std::ops::Index<Index3> for SortedTensor3<T> {
    type Output = T;

    fn index(&self, index: Index3) -> &T {
        assert!(
            self.contains_index(index),
            "index {index:?} out of bounds for {:?}",
            self.dims
        );
        self.at(index)
    }
}

/// Validates and wraps `values`; see [`SortedTensor3::from_values`].
pub fn tensor_from_values<T: Scalar>(dims: [usize; 3], values: Vec<T>) -> Result<SortedTensor3<T>, TensorError> {
    SortedTensor3::from_values(dims, values)
}

/// The view covering the whole tensor.
pub fn full_view<T: Scalar>(tensor: &SortedTensor3<T>) -> SubtowerView {
    SubtowerView::full(tensor.dims())
}
