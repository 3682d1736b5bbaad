//! The `tower-search` command.
//!
//! Exit codes: 0 found / success, 1 not found / verification failure,
//! 2 bad arguments, 3 unreadable or malformed input and IO failures,
//! 4 a tensor that is not sorted.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{emit_csv, measure_worst_case, AnalysisError, KeyPolicy, PivotOutcomeBound, RecurrenceBound};
use crate::generators::{
    key_universe, seeded_corpus, threshold_corpus, CorpusEntry, CorpusPlan, GenError, GenKind, GenSpec,
};
use crate::search::{linear_scan_oracle, Algorithm, SearchError};
use crate::tensor::{read_tensor_file, write_tensor_file, ProbeCounter, ProbeFault, Scalar, TensorError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NOT_FOUND: u8 = 1;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;
pub const EXIT_UNSORTED: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "tower-search",
    version,
    about = "Search sorted 3D arrays and certify probe budgets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a seeded sorted tensor in the text format.
    Gen(GenArgs),
    /// Search one tensor file for a key.
    Search(SearchArgs),
    /// Check the tower search against the scan oracle and the probe budget.
    Verify(VerifyArgs),
    /// Measure worst-case probes per shape and algorithm into a CSV file.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Extents as `n1,n2,n3`, each at least 1.
    #[arg(long, value_parser = parse_dims)]
    pub dims: [usize; 3],
    #[arg(long, value_parser = parse_gen_kind)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Increments, weights or the constant are drawn below this bound.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub alphabet: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub tensor: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub key: String,
    #[arg(long, default_value = "mahl", value_parser = parse_algorithm)]
    pub algo: Algorithm,
    /// Read values and key as floating point instead of integers.
    #[arg(long)]
    pub float: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CorpusChoice {
    /// Every threshold tower (up to `--count` per shape).
    Threshold,
    /// `--count` seeded prefix-sum towers per shape.
    Prefix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BudgetChoice {
    /// The cost recurrence with fixed halving shapes.
    Recurrence,
    /// The worst case over every terminal state of the diagonal search.
    Outcome,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest extent; every shape with extents in `1..=D` is checked.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub dims_max: u64,
    #[arg(long, value_enum, default_value_t = CorpusChoice::Threshold)]
    pub corpus: CorpusChoice,
    /// Towers per shape. Defaults to 50 for prefix and unlimited for threshold.
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub alphabet: u64,
    #[arg(long, value_enum, default_value_t = BudgetChoice::Recurrence)]
    pub budget: BudgetChoice,
    /// Swaps Less and Greater in every probe (debug builds only).
    #[arg(long, hide = true)]
    pub inject_swap_fault: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// One `n1 n2 n3` triple per line; blank lines and `#` comments are skipped.
    #[arg(long)]
    pub shapes: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "mahl", value_parser = parse_algorithm)]
    pub algos: Vec<Algorithm>,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cap on enumerated threshold towers per shape.
    #[arg(long, default_value_t = 500)]
    pub threshold_limit: usize,
    /// Seeded towers per generator kind and shape.
    #[arg(long, default_value_t = 10)]
    pub per_kind: usize,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub alphabet: u64,
    /// Sample this many keys per tower instead of the full key universe.
    #[arg(long)]
    pub sample_keys: Option<usize>,
}

fn parse_dims(s: &str) -> Result<[usize; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts[..] else {
        return Err(format!("expected n1,n2,n3, got {s:?}"));
    };
    let mut dims = [0usize; 3];
    for (slot, part) in dims.iter_mut().zip([a, b, c]) {
        *slot = part.parse().map_err(|e| format!("bad extent {part:?}: {e}"))?;
        if *slot == 0 {
            return Err("every extent must be at least 1".into());
        }
    }
    Ok(dims)
}

fn parse_gen_kind(s: &str) -> Result<GenKind, String> {
    s.parse()
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: SearchError| e.to_string())
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Display) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

impl From<TensorError> for Failure {
    fn from(e: TensorError) -> Self {
        let code = match e {
            TensorError::NotSorted { .. } | TensorError::Unordered { .. } => EXIT_UNSORTED,
            _ => EXIT_IO,
        };
        Failure::new(code, e)
    }
}

impl From<GenError> for Failure {
    fn from(e: GenError) -> Self {
        match e {
            GenError::Tensor(t) => t.into(),
            other => Failure::new(EXIT_USAGE, other),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Tensor(t) => t.into(),
            other => Failure::new(EXIT_USAGE, other),
        }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Search(s) => s.into(),
            AnalysisError::Gen(g) => g.into(),
            AnalysisError::Io(_) | AnalysisError::Csv(_) => Failure::new(EXIT_IO, e),
            other => Failure::new(EXIT_USAGE, other),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_IO, e)
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, A>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a),
        Command::Search(a) => cmd_search(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Bench(a) => cmd_bench(&a, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn cmd_gen(args: &GenArgs) -> Result<u8, Failure> {
    let tensor = GenSpec::new(args.dims, args.kind, args.seed)
        .with_alphabet(args.alphabet)
        .generate()?;
    write_tensor_file(&tensor, &args.out)?;
    Ok(EXIT_OK)
}

fn cmd_search(args: &SearchArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    if args.float {
        search_file::<f64>(args, out)
    } else {
        search_file::<i64>(args, out)
    }
}

fn search_file<T: Scalar>(args: &SearchArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let key: T = args
        .key
        .parse()
        .map_err(|_| Failure::new(EXIT_USAGE, format!("cannot parse key {:?}", args.key)))?;
    let tensor = read_tensor_file::<T>(&args.tensor)?;
    let outcome = args.algo.run(&tensor, &key, &mut ProbeCounter::new())?;
    writeln!(out, "{outcome}")?;
    Ok(if outcome.is_found() { EXIT_OK } else { EXIT_NOT_FOUND })
}

#[derive(Debug)]
struct Counterexample {
    dims: [usize; 3],
    tag: String,
    key: i64,
    detail: String,
}

impl Counterexample {
    fn rank(&self) -> (usize, [usize; 3]) {
        (self.dims.iter().product(), self.dims)
    }
}

impl Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c] = self.dims;
        write!(
            f,
            "dims={a},{b},{c} instance={} key={} {}",
            self.tag, self.key, self.detail
        )
    }
}

fn keep_smaller(slot: &mut Option<Counterexample>, candidate: Counterexample) {
    if slot.as_ref().is_none_or(|s| candidate.rank() < s.rank()) {
        *slot = Some(candidate);
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    if args.inject_swap_fault && !cfg!(debug_assertions) {
        return Err(Failure::new(
            EXIT_USAGE,
            "fault injection is only available in debug builds",
        ));
    }
    let d = args.dims_max as usize;
    let mut recurrence = RecurrenceBound::new();
    let mut outcome_bound = PivotOutcomeBound::new();
    let (mut shapes, mut instances, mut oracle_failures, mut budget_failures) = (0u64, 0u64, 0u64, 0u64);
    let mut worst_oracle: Option<Counterexample> = None;
    let mut worst_budget: Option<Counterexample> = None;

    for n1 in 1..=d {
        for n2 in 1..=d {
            for n3 in 1..=d {
                let dims = [n1, n2, n3];
                shapes += 1;
                let budget = match args.budget {
                    BudgetChoice::Recurrence => recurrence.budget(dims),
                    BudgetChoice::Outcome => outcome_bound.budget(dims),
                }?;
                let corpus: Vec<CorpusEntry> = match args.corpus {
                    CorpusChoice::Threshold => threshold_corpus(dims, args.count.unwrap_or(usize::MAX)),
                    CorpusChoice::Prefix => seeded_corpus(
                        dims,
                        GenKind::PrefixSum,
                        args.count.unwrap_or(50),
                        args.seed,
                        args.alphabet,
                    )?,
                };
                for entry in &corpus {
                    for key in key_universe(&entry.tensor) {
                        instances += 1;
                        let mut counter = if args.inject_swap_fault {
                            ProbeCounter::with_fault(ProbeFault::SwapLessGreater)
                        } else {
                            ProbeCounter::new()
                        };
                        let got = Algorithm::Mahl.run(&entry.tensor, &key, &mut counter)?;
                        let expected = linear_scan_oracle(&entry.tensor, &key);
                        let index_ok = got.index().is_none_or(|i| entry.tensor[i] == key);
                        if got.is_found() != expected.is_found() || !index_ok {
                            oracle_failures += 1;
                            let detail = format!("expected found={} got {got}", expected.is_found());
                            keep_smaller(
                                &mut worst_oracle,
                                Counterexample {
                                    dims,
                                    tag: entry.tag(),
                                    key,
                                    detail,
                                },
                            );
                        }
                        if got.probes > budget {
                            budget_failures += 1;
                            let detail = format!("probes={} budget={budget}", got.probes);
                            keep_smaller(
                                &mut worst_budget,
                                Counterexample {
                                    dims,
                                    tag: entry.tag(),
                                    key,
                                    detail,
                                },
                            );
                        }
                    }
                }
            }
        }
    }

    writeln!(
        out,
        "shapes={shapes} instances={instances} oracle_failures={oracle_failures} budget_failures={budget_failures}"
    )?;
    for (check, example) in [("oracle", &worst_oracle), ("budget", &worst_budget)] {
        if let Some(example) = example {
            writeln!(out, "counterexample check={check} {example} scale=2")?;
        }
    }
    let pass = oracle_failures == 0 && budget_failures == 0;
    writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
    Ok(if pass { EXIT_OK } else { EXIT_FAILED })
}

fn parse_shapes(text: &str) -> Result<Vec<[usize; 3]>, Failure> {
    let mut shapes = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |why: &str| Failure::new(EXIT_IO, format!("shapes line {}: {why}: {line:?}", lineno + 1));
        let extents: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| bad("not an integer triple"))?;
        let [a, b, c] = extents[..] else {
            return Err(bad("expected three extents"));
        };
        if [a, b, c].contains(&0) {
            return Err(bad("extents must be at least 1"));
        }
        shapes.push([a, b, c]);
    }
    Ok(shapes)
}

fn cmd_bench(args: &BenchArgs, err: &mut dyn Write) -> Result<u8, Failure> {
    let shapes = parse_shapes(&fs::read_to_string(&args.shapes)?)?;
    let plan = CorpusPlan {
        threshold_limit: args.threshold_limit,
        per_kind: args.per_kind,
        seed: args.seed,
        alphabet_size: args.alphabet,
        ..CorpusPlan::default()
    };
    let policy = match args.sample_keys {
        Some(per_tensor) => KeyPolicy::Sample {
            per_tensor,
            seed: args.seed,
        },
        None => KeyPolicy::FullUniverse,
    };
    let mut reports = Vec::new();
    for &dims in &shapes {
        let corpus = plan.build(dims)?;
        for &algorithm in &args.algos {
            if !algorithm.supports(dims) {
                writeln!(
                    err,
                    "warning: skipping {algorithm} on {dims:?}: not a matrix or vector shape"
                )?;
                continue;
            }
            reports.push(measure_worst_case(algorithm, dims, corpus.iter().cloned(), policy)?);
        }
    }
    let file = fs::File::create(&args.out)?;
    emit_csv(&reports, std::io::BufWriter::new(file))?;
    Ok(EXIT_OK)
}
