use crate::tensor::{probe_at, Index3, Ordering3, ProbeCounter, Scalar, SortedTensor3, SubtowerView};

/// Final pointers of the diagonal binary search.
///
/// `p1 - 1` is the last probed cell known to be below the key (or one below
/// the view's lower corner when nothing was), and `p2 + 1` the last probed
/// cell known to be above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PivotState {
    pub p1: [isize; 3],
    pub p2: [isize; 3],
    pub found_at: Option<Index3>,
}

impl PivotState {
    /// Some axis has `p1 > p2`; the loop's exit condition.
    pub fn crossed(&self) -> bool {
        (0..3).any(|k| self.p1[k] > self.p2[k])
    }
}

/// Binary search along the SW-to-NE diagonal of `view`.
///
/// Each step probes the per-axis floor midpoint `c` of `p1..=p2` and moves
/// all three coordinates of one pointer together: `p1 = c + 1` when the key
/// is larger, `p2 = c - 1` when it is smaller. The loop runs while every
/// axis still has `p1 <= p2`, so it takes at most `ceil(lg(d + 1))` probes
/// for the shortest extent `d`.
pub fn diagonal_pivot_search<T: Scalar>(
    tensor: &SortedTensor3<T>,
    view: &SubtowerView,
    key: &T,
    counter: &mut ProbeCounter,
) -> PivotState {
    let mut p1 = view.lo();
    let mut p2 = view.hi();
    while (0..3).all(|k| p1[k] <= p2[k]) {
        let c = [0, 1, 2].map(|k| (p1[k] + p2[k]).div_euclid(2));
        let cell = c.map(|v| v as usize);
        match probe_at(tensor, cell, key, counter) {
            Ordering3::Greater => p1 = c.map(|v| v + 1),
            Ordering3::Less => p2 = c.map(|v| v - 1),
            Ordering3::Equal => {
                return PivotState {
                    p1,
                    p2,
                    found_at: Some(cell),
                }
            }
        }
    }
    PivotState { p1, p2, found_at: None }
}
