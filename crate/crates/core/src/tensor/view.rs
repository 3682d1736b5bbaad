use super::{Index3, TensorError};

/// An axis-aligned subtower `A(l1..=r1; l2..=r2; l3..=r3)` of a tensor.
///
/// Corners are signed so that the pivot search can describe ranges that end
/// one below the lower limit. A view is empty iff `lo[k] > hi[k]` on some
/// axis; non-empty views always lie inside the parent extents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubtowerView {
    lo: [isize; 3],
    hi: [isize; 3],
    dims: [usize; 3],
}

impl SubtowerView {
    pub fn new(dims: [usize; 3], lo: [isize; 3], hi: [isize; 3]) -> Result<Self, TensorError> {
        let view = SubtowerView { lo, hi, dims };
        if !view.is_empty() {
            let fits = (0..3).all(|k| lo[k] >= 0 && hi[k] < dims[k] as isize);
            if !fits {
                return Err(TensorError::ViewOutOfBounds { lo, hi, dims });
            }
        }
        Ok(view)
    }

    /// Convenience constructor from unsigned inclusive corners.
    pub fn from_corners(dims: [usize; 3], lo: Index3, hi: Index3) -> Result<Self, TensorError> {
        Self::new(dims, lo.map(|v| v as isize), hi.map(|v| v as isize))
    }

    pub fn full(dims: [usize; 3]) -> Self {
        SubtowerView {
            lo: [0; 3],
            hi: dims.map(|n| n as isize - 1),
            dims,
        }
    }

    /// Used by the recursion, whose corner arithmetic keeps non-empty views
    /// in bounds.
    pub(crate) fn new_unchecked(dims: [usize; 3], lo: [isize; 3], hi: [isize; 3]) -> Self {
        let view = SubtowerView { lo, hi, dims };
        debug_assert!(
            view.is_empty() || (0..3).all(|k| lo[k] >= 0 && hi[k] < dims[k] as isize),
            "{view:?}"
        );
        view
    }

    pub fn lo(&self) -> [isize; 3] {
        self.lo
    }

    pub fn hi(&self) -> [isize; 3] {
        self.hi
    }

    pub fn parent_dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn is_empty(&self) -> bool {
        (0..3).any(|k| self.lo[k] > self.hi[k])
    }

    /// Per-axis lengths; all zero for an empty view.
    pub fn extents(&self) -> [usize; 3] {
        if self.is_empty() {
            [0; 3]
        } else {
            [0, 1, 2].map(|k| (self.hi[k] - self.lo[k] + 1) as usize)
        }
    }

    pub fn volume(&self) -> usize {
        self.extents().iter().product()
    }

    /// Lower corner as an index. Only meaningful for non-empty views.
    pub fn lo_index(&self) -> Index3 {
        debug_assert!(!self.is_empty());
        self.lo.map(|v| v as usize)
    }

    pub fn hi_index(&self) -> Index3 {
        debug_assert!(!self.is_empty());
        self.hi.map(|v| v as usize)
    }

    pub fn contains(&self, index: Index3) -> bool {
        (0..3).all(|k| {
            let i = index[k] as isize;
            self.lo[k] <= i && i <= self.hi[k]
        })
    }

    /// `true` when every axis spans at least two cells, i.e. the view is a
    /// genuine three-dimensional tower.
    pub fn is_solid(&self) -> bool {
        (0..3).all(|k| self.lo[k] < self.hi[k])
    }

    /// Cells of the view in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Index3> + '_ {
        let [e1, e2, e3] = self.extents();
        let base = if self.is_empty() { [0; 3] } else { self.lo_index() };
        (0..e1)
            .flat_map(move |a| (0..e2).flat_map(move |b| (0..e3).map(move |c| [base[0] + a, base[1] + b, base[2] + c])))
    }
}
