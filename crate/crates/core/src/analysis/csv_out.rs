use std::fmt::Display;
use std::io::Write;

use super::{AnalysisError, GrowthRow, WorstCaseReport};

pub const CSV_HEADER: [&str; 9] = [
    "algorithm",
    "n1",
    "n2",
    "n3",
    "max_probes",
    "budget",
    "pass",
    "argmax_seed",
    "argmax_key",
];

pub const GROWTH_CSV_HEADER: [&str; 7] = ["size", "n1", "n2", "n3", "max_probes", "budget", "ratio"];

/// Writes one row per report, sorted by algorithm name and then extents.
/// `argmax_seed` holds the instance tag (`prefix:17`, `enum:3`, ...).
pub fn emit_csv<T: Display, W: Write>(reports: &[WorstCaseReport<T>], destination: W) -> Result<(), AnalysisError> {
    let mut sorted: Vec<&WorstCaseReport<T>> = reports.iter().collect();
    sorted.sort_by(|a, b| (a.algorithm.name(), a.dims).cmp(&(b.algorithm.name(), b.dims)));
    let mut out = csv::Writer::from_writer(destination);
    out.write_record(CSV_HEADER)?;
    for r in sorted {
        let (tag, key) = match &r.argmax {
            Some(a) => (a.tag.clone(), a.key.to_string()),
            None => (String::new(), String::new()),
        };
        out.write_record([
            r.algorithm.name().to_string(),
            r.dims[0].to_string(),
            r.dims[1].to_string(),
            r.dims[2].to_string(),
            r.max_probes.to_string(),
            r.budget.to_string(),
            r.pass.to_string(),
            tag,
            key,
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn emit_growth_csv<W: Write>(rows: &[GrowthRow], destination: W) -> Result<(), AnalysisError> {
    let mut out = csv::Writer::from_writer(destination);
    out.write_record(GROWTH_CSV_HEADER)?;
    for r in rows {
        out.write_record([
            r.size.to_string(),
            r.dims[0].to_string(),
            r.dims[1].to_string(),
            r.dims[2].to_string(),
            r.max_probes.to_string(),
            r.budget.to_string(),
            r.ratio.map_or(String::new(), |x| format!("{x:.4}")),
        ])?;
    }
    out.flush()?;
    Ok(())
}
