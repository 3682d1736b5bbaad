use super::{search_line, LineHit, LineView};
use crate::tensor::{ProbeCounter, Scalar, SearchOutcome, SortedTensor3};

/// Binary-searches every axis-3 fiber in row-major `(i1, i2)` order:
/// at most `n1 * n2 * ceil(lg(n3 + 1))` probes.
pub fn row_slab_baseline<T: Scalar>(tensor: &SortedTensor3<T>, key: &T, counter: &mut ProbeCounter) -> SearchOutcome {
    let [n1, n2, n3] = tensor.dims();
    let mut found = None;
    if key.is_admissible() {
        'fibers: for i1 in 0..n1 {
            for i2 in 0..n2 {
                let line = LineView {
                    origin: [i1, i2, 0],
                    axis: 2,
                    len: n3,
                };
                if let LineHit::Found(pos) = search_line(tensor, &line, key, counter) {
                    found = Some(line.at(pos));
                    break 'fibers;
                }
            }
        }
    }
    SearchOutcome::new(found, counter.count())
}
