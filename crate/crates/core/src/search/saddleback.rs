use super::PlaneView;
use crate::tensor::{probe_at, Ordering3, ProbeCounter, Scalar, SearchOutcome, SortedTensor3};

/// Staircase walk from the corner holding the last row's smallest entry.
/// Each probe rules out a row or a column: at most `rows + cols - 1` probes.
pub fn saddleback_2d<T: Scalar>(
    tensor: &SortedTensor3<T>,
    plane: &PlaneView,
    key: &T,
    counter: &mut ProbeCounter,
) -> SearchOutcome {
    let [rows, cols] = plane.extents;
    let mut found = None;
    if key.is_admissible() {
        let (mut row, mut col) = (rows as isize - 1, 0usize);
        while row >= 0 && col < cols {
            let cell = plane.at(row as usize, col);
            match probe_at(tensor, cell, key, counter) {
                Ordering3::Less => row -= 1,
                Ordering3::Greater => col += 1,
                Ordering3::Equal => {
                    found = Some(cell);
                    break;
                }
            }
        }
    }
    SearchOutcome::new(found, counter.count())
}
