//! Probe budgets, worst-case measurement and growth diagnostics.

mod csv_out;
mod growth;
mod measure;
mod recurrence;

use crate::generators::GenError;
use crate::search::{Algorithm, SearchError};

pub use csv_out::{emit_csv, emit_growth_csv, CSV_HEADER, GROWTH_CSV_HEADER};
pub use growth::{growth_table, GrowthRow, ShapeFamily};
pub use measure::{algorithm_budget, measure_worst_case, Argmax, KeyPolicy, WorstCaseReport};
pub use recurrence::{ceil_lg_succ, recurrence_bound, PivotOutcomeBound, RecurrenceBound};

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error("every extent must be at least 1, got {dims:?}")]
    ExtentZero { dims: [usize; 3] },
    #[error("the tensor corpus is empty")]
    EmptyCorpus,
    #[error("corpus tensor has extents {actual:?}, expected {expected:?}")]
    CorpusShape { expected: [usize; 3], actual: [usize; 3] },
    #[error("{algorithm} cannot search a tensor of extents {dims:?}")]
    Unsupported { algorithm: Algorithm, dims: [usize; 3] },
    #[error("sizes must be strictly ascending")]
    NotAscending,
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
