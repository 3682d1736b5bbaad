use super::{diagonal_pivot_search, dispatch, PivotState};
use crate::tensor::{Index3, ProbeCounter, Scalar, SearchOutcome, SortedTensor3, SubtowerView};

/// Searches a sorted tower by recursive diagonal pivoting.
///
/// While every axis of the current view spans at least two cells, the
/// diagonal of the view is binary-searched and the three remaining
/// subtowers (see [`partition_subtowers`]) are searched in order, stopping
/// at the first hit. Views that are flat along some axis go to
/// [`super::one_two_d_dispatch`]. Empty subtowers cost nothing.
pub fn mahl_e_search<T: Scalar>(
    tensor: &SortedTensor3<T>,
    view: &SubtowerView,
    key: &T,
    counter: &mut ProbeCounter,
) -> SearchOutcome {
    let found = if key.is_admissible() {
        search_view(tensor, view, key, counter)
    } else {
        None
    };
    SearchOutcome::new(found, counter.count())
}

fn search_view<T: Scalar>(
    tensor: &SortedTensor3<T>,
    view: &SubtowerView,
    key: &T,
    counter: &mut ProbeCounter,
) -> Option<Index3> {
    if view.is_empty() {
        return None;
    }
    if !view.is_solid() {
        return dispatch::search_degenerate(tensor, view, key, counter);
    }
    let pivot = diagonal_pivot_search(tensor, view, key, counter);
    if pivot.found_at.is_some() {
        return pivot.found_at;
    }
    partition_subtowers(view, &pivot)
        .iter()
        .find_map(|sub| search_view(tensor, sub, key, counter))
}

/// The three subtowers left after a non-finding diagonal search, in search
/// order:
///
/// ```text
/// A1 = (l1..=r1;   p1_2..=r2;  l3..=p2_3)
/// A2 = (l1..=p2_1; l2..=r2;    p1_3..=r3)
/// A3 = (p1_1..=r1; l2..=p2_2;  l3..=r3)
/// ```
///
/// Any of them may be empty, and they may overlap.
pub fn partition_subtowers(view: &SubtowerView, pivot: &PivotState) -> [SubtowerView; 3] {
    let (l, r) = (view.lo(), view.hi());
    let (p1, p2) = (pivot.p1, pivot.p2);
    let dims = view.parent_dims();
    [
        SubtowerView::new_unchecked(dims, [l[0], p1[1], l[2]], [r[0], r[1], p2[2]]),
        SubtowerView::new_unchecked(dims, [l[0], l[1], p1[2]], [p2[0], r[1], r[2]]),
        SubtowerView::new_unchecked(dims, [p1[0], l[1], l[2]], [r[0], p2[1], r[2]]),
    ]
}
