//! Divide-and-conquer search of a sorted matrix.
//!
//! Binary-search one full line of the longer extent, placed at the middle of
//! the shorter one. The crossing point splits the rectangle into four
//! quadrants; two are dominated by a probed entry and dropped, the other two
//! are searched recursively. For `m <= n` this takes `O(m lg(n/m + 1))`
//! probes.

use super::{search_line, LineHit, PlaneView};
use crate::tensor::{Index3, ProbeCounter, Scalar, SearchOutcome, SortedTensor3};

/// Which line a `rows x cols` rectangle is split on. Offsets are relative to
/// the rectangle's first row/column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BirdSplit {
    /// Binary-search column `col` (length `rows`); chosen when `rows >= cols`.
    Column { col: usize },
    /// Binary-search row `row` (length `cols`); chosen when `cols > rows`.
    Row { row: usize },
}

/// Splitting rule shared by the search and its cost recurrence. Both
/// extents must be positive.
pub fn bird_split(rows: usize, cols: usize) -> BirdSplit {
    debug_assert!(rows > 0 && cols > 0);
    if rows >= cols {
        BirdSplit::Column { col: (cols - 1) / 2 }
    } else {
        BirdSplit::Row { row: (rows - 1) / 2 }
    }
}

pub fn bird_search_2d<T: Scalar>(
    tensor: &SortedTensor3<T>,
    plane: &PlaneView,
    key: &T,
    counter: &mut ProbeCounter,
) -> SearchOutcome {
    let found = if key.is_admissible() {
        search_plane(tensor, plane, key, counter)
    } else {
        None
    };
    SearchOutcome::new(found, counter.count())
}

pub(crate) fn search_plane<T: Scalar>(
    tensor: &SortedTensor3<T>,
    plane: &PlaneView,
    key: &T,
    counter: &mut ProbeCounter,
) -> Option<Index3> {
    let [rows, cols] = plane.extents;
    search_rect(tensor, plane, (0, rows), (0, cols), key, counter)
}

/// Half-open row range `r0..r1` and column range `c0..c1`.
fn search_rect<T: Scalar>(
    tensor: &SortedTensor3<T>,
    plane: &PlaneView,
    (r0, r1): (usize, usize),
    (c0, c1): (usize, usize),
    key: &T,
    counter: &mut ProbeCounter,
) -> Option<Index3> {
    let (rows, cols) = (r1 - r0, c1 - c0);
    if rows == 0 || cols == 0 {
        return None;
    }
    match bird_split(rows, cols) {
        BirdSplit::Column { col } => {
            let c = c0 + col;
            match search_line(tensor, &plane.column(r0, c, rows), key, counter) {
                LineHit::Found(pos) => Some(plane.at(r0 + pos, c)),
                LineHit::Crossing(k) => {
                    // Rows above the crossing are < key up to column c; rows
                    // below it are > key from column c on.
                    let k = r0 + k;
                    search_rect(tensor, plane, (r0, k), (c + 1, c1), key, counter)
                        .or_else(|| search_rect(tensor, plane, (k, r1), (c0, c), key, counter))
                }
            }
        }
        BirdSplit::Row { row } => {
            let r = r0 + row;
            match search_line(tensor, &plane.row(r, c0, cols), key, counter) {
                LineHit::Found(pos) => Some(plane.at(r, c0 + pos)),
                LineHit::Crossing(k) => {
                    let k = c0 + k;
                    search_rect(tensor, plane, (r0, r), (k, c1), key, counter)
                        .or_else(|| search_rect(tensor, plane, (r + 1, r1), (c0, k), key, counter))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::linear_scan_oracle;
    use crate::tensor::tensor_from_values;

    #[test]
    fn split_rule() {
        assert_eq!(bird_split(4, 4), BirdSplit::Column { col: 1 });
        assert_eq!(bird_split(8, 3), BirdSplit::Column { col: 1 });
        assert_eq!(bird_split(2, 64), BirdSplit::Row { row: 0 });
        assert_eq!(bird_split(1, 1), BirdSplit::Column { col: 0 });
    }

    #[test]
    fn two_by_two_exhaustive() {
        let t = tensor_from_values([1, 2, 2], vec![0i64, 1, 1, 2]).unwrap();
        let plane = PlaneView::spanning(t.dims()).unwrap();
        for key in -1..=3 {
            let out = bird_search_2d(&t, &plane, &key, &mut ProbeCounter::new());
            let truth = linear_scan_oracle(&t, &key);
            assert_eq!(out.is_found(), truth.is_found(), "key {key}");
            if let Some(i) = out.index() {
                assert_eq!(t[i], key);
            }
        }
    }

    #[test]
    fn single_row_is_binary_search() {
        let t = tensor_from_values([1, 1, 7], (0..7).map(|v| 2 * v).collect::<Vec<i64>>()).unwrap();
        let plane = PlaneView::spanning(t.dims()).unwrap();
        for key in -1..=13 {
            let out = bird_search_2d(&t, &plane, &key, &mut ProbeCounter::new());
            assert!(out.probes <= 3);
            assert_eq!(out.is_found(), key >= 0 && key % 2 == 0);
        }
    }

    #[test]
    fn plane_inside_tensor() {
        // Axis-1 by axis-3 slice at i2 = 1 of a 3x2x4 tensor.
        let values: Vec<i64> = (0..3)
            .flat_map(|a| (0..2).flat_map(move |b| (0..4).map(move |c| 10 * a + 5 * b + c)))
            .collect();
        let t = tensor_from_values([3, 2, 4], values).unwrap();
        let plane = PlaneView::new(t.dims(), [0, 1, 0], [0, 2], [3, 4]).unwrap();
        let out = bird_search_2d(&t, &plane, &27, &mut ProbeCounter::new());
        assert_eq!(out.index(), Some([2, 1, 2]));
        let out = bird_search_2d(&t, &plane, &2, &mut ProbeCounter::new());
        assert!(!out.is_found(), "2 only occurs at i2 = 0");
    }
}
