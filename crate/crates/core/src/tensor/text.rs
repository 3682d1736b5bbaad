//! Plain-text tensor files: a header line `n1 n2 n3` followed by
//! `n1*n2*n3` whitespace-separated values in row-major order.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{Scalar, SortedTensor3, TensorError};

pub fn parse_text<T: Scalar>(text: &str) -> Result<SortedTensor3<T>, TensorError> {
    let mut lines = text.lines();
    let header = lines
        .by_ref()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| TensorError::Parse("missing header line".into()))?;
    let extents: Vec<usize> = header
        .split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| TensorError::Parse(format!("bad extent {tok:?}")))
        })
        .collect::<Result<_, _>>()?;
    let dims: [usize; 3] = extents
        .try_into()
        .map_err(|v: Vec<usize>| TensorError::Parse(format!("header needs 3 extents, got {}", v.len())))?;
    let values = lines
        .flat_map(str::split_whitespace)
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| TensorError::Parse(format!("bad value {tok:?}")))
        })
        .collect::<Result<Vec<T>, _>>()?;
    SortedTensor3::from_values(dims, values)
}

/// Serializes with one line per `(i1, i2)` fiber.
pub fn to_text<T: Scalar>(tensor: &SortedTensor3<T>) -> String {
    let [n1, n2, n3] = tensor.dims();
    let mut out = format!("{n1} {n2} {n3}\n");
    for fiber in tensor.values().chunks(n3) {
        let mut first = true;
        for v in fiber {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
    out
}

pub fn read_tensor_file<T: Scalar>(path: impl AsRef<Path>) -> Result<SortedTensor3<T>, TensorError> {
    parse_text(&fs::read_to_string(path)?)
}

pub fn write_tensor_file<T: Scalar>(tensor: &SortedTensor3<T>, path: impl AsRef<Path>) -> Result<(), TensorError> {
    fs::write(path, to_text(tensor))?;
    Ok(())
}
