use super::{ceil_lg_succ, AnalysisError, RecurrenceBound};
use crate::generators::{key_universe, CorpusEntry, FixtureRng};
use crate::search::{Algorithm, PlaneView};
use crate::tensor::{ProbeCounter, Scalar};

/// Which keys to run against each corpus tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeyPolicy {
    /// Every key of [`key_universe`].
    FullUniverse,
    /// `per_tensor` keys drawn (with replacement) from the universe.
    Sample { per_tensor: usize, seed: u64 },
}

/// The instance that attained the maximum (first one, in corpus order).
#[derive(Clone, Debug, PartialEq)]
pub struct Argmax<T> {
    pub tag: String,
    pub key: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WorstCaseReport<T = i64> {
    pub algorithm: Algorithm,
    pub dims: [usize; 3],
    pub max_probes: u64,
    pub argmax: Option<Argmax<T>>,
    pub budget: u64,
    pub pass: bool,
    /// Number of `(tensor, key)` runs.
    pub runs: u64,
}

/// The ceiling each algorithm is measured against: the recurrence budget
/// for the tower and matrix searches, `rows + cols - 1` for the staircase
/// walk, `n1 * n2 * ceil(lg(n3 + 1))` for the fiber baseline and the cell
/// count for the scan.
pub fn algorithm_budget(
    algorithm: Algorithm,
    dims: [usize; 3],
    bounds: &mut RecurrenceBound,
) -> Result<u64, AnalysisError> {
    if dims.contains(&0) {
        return Err(AnalysisError::ExtentZero { dims });
    }
    if !algorithm.supports(dims) {
        return Err(AnalysisError::Unsupported { algorithm, dims });
    }
    let [n1, n2, n3] = dims;
    Ok(match algorithm {
        Algorithm::Mahl | Algorithm::Bird => bounds.budget(dims)?,
        Algorithm::Saddleback => {
            let plane = PlaneView::spanning(dims).expect("checked by supports");
            (plane.extents[0] + plane.extents[1] - 1) as u64
        }
        Algorithm::Rows => (n1 * n2) as u64 * ceil_lg_succ(n3),
        Algorithm::Scan => (n1 * n2 * n3) as u64,
    })
}

/// Runs `algorithm` over every corpus tensor and every selected key,
/// recording the largest probe count.
pub fn measure_worst_case<T, I>(
    algorithm: Algorithm,
    dims: [usize; 3],
    corpus: I,
    keys: KeyPolicy,
) -> Result<WorstCaseReport<T>, AnalysisError>
where
    T: Scalar,
    I: IntoIterator<Item = CorpusEntry<T>>,
{
    let budget = algorithm_budget(algorithm, dims, &mut RecurrenceBound::new())?;
    let mut report = WorstCaseReport {
        algorithm,
        dims,
        max_probes: 0,
        argmax: None,
        budget,
        pass: true,
        runs: 0,
    };
    let mut rng = match keys {
        KeyPolicy::Sample { seed, .. } => Some(FixtureRng::new(seed)),
        KeyPolicy::FullUniverse => None,
    };
    let mut empty = true;
    for entry in corpus {
        empty = false;
        if entry.tensor.dims() != dims {
            return Err(AnalysisError::CorpusShape {
                expected: dims,
                actual: entry.tensor.dims(),
            });
        }
        let universe = key_universe(&entry.tensor);
        let selected: Vec<T> = match (keys, rng.as_mut()) {
            (KeyPolicy::Sample { per_tensor, .. }, Some(rng)) => (0..per_tensor)
                .map(|_| universe[rng.below(universe.len() as u64) as usize])
                .collect(),
            _ => universe,
        };
        for key in selected {
            let mut counter = ProbeCounter::new();
            let outcome = algorithm.run(&entry.tensor, &key, &mut counter)?;
            report.runs += 1;
            if outcome.probes > report.max_probes || report.argmax.is_none() {
                report.max_probes = report.max_probes.max(outcome.probes);
                report.argmax = Some(Argmax { tag: entry.tag(), key });
            }
        }
    }
    if empty {
        return Err(AnalysisError::EmptyCorpus);
    }
    report.pass = report.max_probes <= report.budget;
    Ok(report)
}
