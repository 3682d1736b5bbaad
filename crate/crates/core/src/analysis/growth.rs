use super::{measure_worst_case, AnalysisError, KeyPolicy, RecurrenceBound};
use crate::generators::CorpusPlan;
use crate::search::Algorithm;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeFamily {
    /// `n x n x n`
    Cube,
    /// `n x n x depth`
    Slab { depth: usize },
    /// `1 x 1 x n`
    Vector,
}

impl ShapeFamily {
    pub fn dims(self, n: usize) -> [usize; 3] {
        match self {
            ShapeFamily::Cube => [n, n, n],
            ShapeFamily::Slab { depth } => [n, n, depth],
            ShapeFamily::Vector => [1, 1, n],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthRow {
    pub size: usize,
    pub dims: [usize; 3],
    pub max_probes: u64,
    pub budget: u64,
    /// `max_probes` over the previous row's, when there is one.
    pub ratio: Option<f64>,
}

/// Measured worst case per size over the corpus `plan` builds for each
/// shape, with successive ratios.
pub fn growth_table(
    algorithm: Algorithm,
    family: ShapeFamily,
    sizes: &[usize],
    plan: &CorpusPlan,
    keys: KeyPolicy,
) -> Result<Vec<GrowthRow>, AnalysisError> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AnalysisError::NotAscending);
    }
    let mut bounds = RecurrenceBound::new();
    let mut rows: Vec<GrowthRow> = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let dims = family.dims(size);
        let report = measure_worst_case(algorithm, dims, plan.build(dims)?, keys)?;
        let ratio = rows
            .last()
            .filter(|prev| prev.max_probes > 0)
            .map(|prev| report.max_probes as f64 / prev.max_probes as f64);
        rows.push(GrowthRow {
            size,
            dims,
            max_probes: report.max_probes,
            budget: bounds.budget(dims)?,
            ratio,
        });
    }
    Ok(rows)
}
