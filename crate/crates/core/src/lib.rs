//! Key search in sorted, unbalanced 3D arrays ("towers") with every
//! three-way comparison counted.
//!
//! - [`tensor`]: the sorted tensor, subtower views and the probe counter.
//! - [`search`]: the diagonal-pivot tower search, the matrix and vector
//!   searches it falls back to, and the baselines.
//! - [`generators`]: seeded fixtures and the keys that exercise them.
//! - [`analysis`]: probe budgets and worst-case measurement.
//! - [`cli`]: the `tower-search` command.

pub mod analysis;
pub mod cli;
pub mod generators;
pub mod search;
pub mod tensor;
