use super::LineView;
use crate::tensor::{probe_at, Ordering3, ProbeCounter, Scalar, SearchOutcome, SortedTensor3};

pub(crate) enum LineHit {
    Found(usize),
    /// Key absent; positions below this one hold smaller values, the rest
    /// larger ones.
    Crossing(usize),
}

/// Three-way binary search; at most `ceil(lg(len + 1))` probes.
pub(crate) fn search_line<T: Scalar>(
    tensor: &SortedTensor3<T>,
    line: &LineView,
    key: &T,
    counter: &mut ProbeCounter,
) -> LineHit {
    let (mut lo, mut hi) = (0isize, line.len as isize - 1);
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        match probe_at(tensor, line.at(mid as usize), key, counter) {
            Ordering3::Greater => lo = mid + 1,
            Ordering3::Less => hi = mid - 1,
            Ordering3::Equal => return LineHit::Found(mid as usize),
        }
    }
    LineHit::Crossing(lo as usize)
}

pub fn binary_search_1d<T: Scalar>(
    tensor: &SortedTensor3<T>,
    line: &LineView,
    key: &T,
    counter: &mut ProbeCounter,
) -> SearchOutcome {
    let found = if key.is_admissible() {
        match search_line(tensor, line, key, counter) {
            LineHit::Found(pos) => Some(line.at(pos)),
            LineHit::Crossing(_) => None,
        }
    } else {
        None
    };
    SearchOutcome::new(found, counter.count())
}
