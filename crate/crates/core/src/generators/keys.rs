use crate::tensor::{Scalar, SortedTensor3};

/// One key per three-way outcome class of `tensor`.
///
/// Returns, in increasing order: a key below the minimum, every distinct
/// value, a key strictly between each consecutive pair, and a key above
/// the maximum. A search's probe sequence depends on the key only through
/// its rank among the tensor's values, so maximizing over this set
/// maximizes over all keys.
///
/// Classes the element type cannot represent are skipped (for integers, the
/// gap between consecutive values `v` and `v + 1`). Towers rescaled with
/// [`double_scale`] never have such gaps.
pub fn key_universe<T: Scalar>(tensor: &SortedTensor3<T>) -> Vec<T> {
    let mut distinct: Vec<T> = tensor.values().to_vec();
    distinct.sort_unstable_by(|a, b| a.partial_cmp(b).expect("tensor values are totally ordered"));
    distinct.dedup_by(|a, b| a == b);
    let mut keys = Vec::with_capacity(2 * distinct.len() + 1);
    keys.extend(distinct[0].below());
    for (i, &v) in distinct.iter().enumerate() {
        if i > 0 {
            keys.extend(T::between(distinct[i - 1], v));
        }
        keys.push(v);
    }
    keys.extend(distinct[distinct.len() - 1].above());
    keys
}

/// Multiplies every value by 2, which preserves the order and leaves room
/// for an integer key inside every gap.
///
/// Panics if a value overflows.
pub fn double_scale(tensor: &SortedTensor3<i64>) -> SortedTensor3<i64> {
    let values = tensor
        .values()
        .iter()
        .map(|v| v.checked_mul(2).expect("value too large to rescale"))
        .collect();
    SortedTensor3::from_sorted_unchecked(tensor.dims(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{GenKind, GenSpec};
    use crate::tensor::tensor_from_values;

    #[test]
    fn singleton() {
        let t = tensor_from_values([1, 1, 1], vec![5i64]).unwrap();
        assert_eq!(key_universe(&t), vec![4, 5, 6]);
    }

    #[test]
    fn two_values() {
        let t = tensor_from_values([2, 1, 1], vec![0i64, 2]).unwrap();
        assert_eq!(key_universe(&t), vec![-1, 0, 1, 2, 3]);
    }

    #[test]
    fn unit_gap_has_no_integer_representative() {
        let t = tensor_from_values([2, 1, 1], vec![0i64, 1]).unwrap();
        assert_eq!(key_universe(&t), vec![-1, 0, 1, 2]);
        assert_eq!(key_universe(&double_scale(&t)), vec![-1, 0, 1, 2, 3]);
    }

    #[test]
    fn doubled_prefix_tensor_has_full_universe() {
        let t = double_scale(&GenSpec::new([4, 4, 4], GenKind::PrefixSum, 3).generate().unwrap());
        let mut distinct = t.values().to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let universe = key_universe(&t);
        assert_eq!(universe.len(), 2 * distinct.len() + 1);
        assert!(universe.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn floats_use_midpoints() {
        let t = tensor_from_values([1, 1, 2], vec![0.0f64, 1.0]).unwrap();
        assert_eq!(key_universe(&t), vec![-1.0, 0.0, 0.5, 1.0, 2.0]);
    }
}
