use super::{bird::search_plane, search_line, LineHit, LineView, PlaneView, SearchError};
use crate::tensor::{probe_at, Index3, Ordering3, ProbeCounter, Scalar, SearchOutcome, SortedTensor3, SubtowerView};

/// Searches a view that is flat along at least one axis.
///
/// Unit-length axes are dropped: no axis left means a single probe, one
/// axis a binary search, two axes the divide-and-conquer matrix search.
/// Indices in the outcome are in the tensor's own coordinates.
pub fn one_two_d_dispatch<T: Scalar>(
    tensor: &SortedTensor3<T>,
    view: &SubtowerView,
    key: &T,
    counter: &mut ProbeCounter,
) -> Result<SearchOutcome, SearchError> {
    if view.is_solid() {
        return Err(SearchError::NotDegenerate);
    }
    let found = if key.is_admissible() && !view.is_empty() {
        search_degenerate(tensor, view, key, counter)
    } else {
        None
    };
    Ok(SearchOutcome::new(found, counter.count()))
}

pub(crate) fn search_degenerate<T: Scalar>(
    tensor: &SortedTensor3<T>,
    view: &SubtowerView,
    key: &T,
    counter: &mut ProbeCounter,
) -> Option<Index3> {
    let origin = view.lo_index();
    let extents = view.extents();
    let live: Vec<usize> = (0..3).filter(|&k| extents[k] > 1).collect();
    match live[..] {
        [] => (probe_at(tensor, origin, key, counter) == Ordering3::Equal).then_some(origin),
        [axis] => {
            let line = LineView {
                origin,
                axis,
                len: extents[axis],
            };
            match search_line(tensor, &line, key, counter) {
                LineHit::Found(pos) => Some(line.at(pos)),
                LineHit::Crossing(_) => None,
            }
        }
        [a, b] => {
            let plane = PlaneView {
                origin,
                axes: [a, b],
                extents: [extents[a], extents[b]],
            };
            search_plane(tensor, &plane, key, counter)
        }
        _ => unreachable!("solid views are searched by pivoting"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::linear_scan_oracle;
    use crate::tensor::tensor_from_values;

    #[test]
    fn single_cell_one_probe() {
        let t = tensor_from_values([2, 2, 2], (0..8).collect::<Vec<i64>>()).unwrap();
        let view = SubtowerView::from_corners(t.dims(), [1, 0, 1], [1, 0, 1]).unwrap();
        let out = one_two_d_dispatch(&t, &view, &5, &mut ProbeCounter::new()).unwrap();
        assert_eq!(out.index(), Some([1, 0, 1]));
        assert_eq!(out.probes, 1);
    }

    #[test]
    fn vector_of_seven_absent_key() {
        let t = tensor_from_values([1, 7, 1], (0..7).map(|v| 2 * v).collect::<Vec<i64>>()).unwrap();
        let view = SubtowerView::full(t.dims());
        for key in [-1, 1, 3, 5, 7, 9, 11, 13] {
            let out = one_two_d_dispatch(&t, &view, &key, &mut ProbeCounter::new()).unwrap();
            assert!(!out.is_found());
            assert!(out.probes <= 3);
        }
    }

    #[test]
    fn slice_matches_scan() {
        let values: Vec<i64> = (0..4).flat_map(|b| (0..6).map(move |c| 3 * b + 2 * c)).collect();
        let t = tensor_from_values([1, 4, 6], values).unwrap();
        let view = SubtowerView::full(t.dims());
        for key in -1..=21 {
            let out = one_two_d_dispatch(&t, &view, &key, &mut ProbeCounter::new()).unwrap();
            assert_eq!(out.is_found(), linear_scan_oracle(&t, &key).is_found(), "key {key}");
            if let Some(i) = out.index() {
                assert_eq!(t[i], key);
            }
        }
    }

    #[test]
    fn rejects_solid_views() {
        let t = tensor_from_values([2, 2, 2], vec![0i64; 8]).unwrap();
        let err = one_two_d_dispatch(&t, &SubtowerView::full(t.dims()), &0, &mut ProbeCounter::new());
        assert!(matches!(err, Err(SearchError::NotDegenerate)));
    }
}
