use crate::tensor::{Scalar, SortedTensor3};

/// Every sorted two-valued `1 x rows x cols` tower, in lexicographic order
/// of its row boundaries. There are `C(rows + cols, rows)` of them.
///
/// Row `r` holds `low` before column `s_r` and `high` from it on, with
/// `cols >= s_0 >= s_1 >= ... >= 0`.
pub fn monotone_binary_planes<T: Scalar>(rows: usize, cols: usize, low: T, high: T) -> MonotoneBinaryPlanes<T> {
    assert!(low < high, "low must be below high");
    MonotoneBinaryPlanes {
        rows,
        cols,
        low,
        high,
        boundaries: (rows > 0 && cols > 0).then(|| vec![0; rows]),
    }
}

pub struct MonotoneBinaryPlanes<T> {
    rows: usize,
    cols: usize,
    low: T,
    high: T,
    boundaries: Option<Vec<usize>>,
}

impl<T: Scalar> Iterator for MonotoneBinaryPlanes<T> {
    type Item = SortedTensor3<T>;

    fn next(&mut self) -> Option<Self::Item> {
        let s = self.boundaries.as_mut()?;
        let mut values = Vec::with_capacity(self.rows * self.cols);
        for &b in s.iter() {
            values.extend(std::iter::repeat_n(self.low, b));
            values.extend(std::iter::repeat_n(self.high, self.cols - b));
        }
        let tensor = SortedTensor3::from_sorted_unchecked([1, self.rows, self.cols], values);
        // Successor: bump the last boundary that may grow, zero the rest.
        let bump = (0..self.rows)
            .rev()
            .find(|&i| s[i] < if i == 0 { self.cols } else { s[i - 1] });
        match bump {
            Some(i) => {
                s[i] += 1;
                s[i + 1..].iter_mut().for_each(|v| *v = 0);
            }
            None => self.boundaries = None,
        }
        Some(tensor)
    }
}
