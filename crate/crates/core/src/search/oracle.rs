use crate::tensor::{Scalar, SearchOutcome, SortedTensor3};

/// Ground truth: the first row-major cell equal to `key`. `probes` counts
/// the cells inspected. Not instrumented and never used inside the
/// measured algorithms.
pub fn linear_scan_oracle<T: Scalar>(tensor: &SortedTensor3<T>, key: &T) -> SearchOutcome {
    let hit = tensor.values().iter().position(|v| v == key);
    let probes = hit.map_or(tensor.len(), |p| p + 1) as u64;
    SearchOutcome::new(hit.map(|p| tensor.index_of(p)), probes)
}
