//! Command-line front end for `symreal-core`: JSON system files, reports,
//! and a thread pool over partitions.

pub mod input;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::Parser;
use num_traits::ToPrimitive;
use symreal_core::algebra::MultiPoly;
use symreal_core::driver::{assemble, examine_partition, plan, PartitionRecord, RunConfig, Verdict};
use symreal_core::symmetry::Partition;

pub use input::InputDocument;
pub use report::{PartitionReport, Report, WitnessReport};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] symreal_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use symreal_core::Error as E;
        match self {
            CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Core(E::ConditionA) => 3,
            CliError::Core(
                E::Syntax { .. }
                | E::UnknownVariable { .. }
                | E::BadExponent { .. }
                | E::NotSymmetric { .. }
                | E::TooManyInputEquations { .. }
                | E::ZeroPolynomial
                | E::VariableMismatch
                | E::InvalidPartition(_),
            ) => 2,
            CliError::Core(_) => 4,
        }
    }
}

/// Decide whether a system of symmetric polynomial equations has a real
/// solution.
#[derive(Debug, Parser)]
#[command(name = "symreal", version)]
pub struct Args {
    /// JSON file `{"vars": [...], "polys": [...]}`.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Bound on the objective coefficients.
    #[arg(long, default_value_t = 1 << 10)]
    pub bound: u64,
    /// Objectives tried per partition.
    #[arg(long, default_value_t = 4)]
    pub resamples: usize,
    #[arg(long)]
    pub json: bool,
    /// Only examine these partitions, e.g. `2^2` or `1^2,2^1`.
    #[arg(long = "partition", value_name = "SPEC")]
    pub partitions: Vec<String>,
    /// Probe the Jacobian rank condition before solving.
    #[arg(long)]
    pub check_a: bool,
    /// Certify and print a real point for a non-empty verdict.
    #[arg(long)]
    pub witness: bool,
    /// Per-partition detail.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
}

impl Args {
    pub fn config(&self) -> Result<RunConfig, CliError> {
        let filter = if self.partitions.is_empty() {
            None
        } else {
            Some(
                self.partitions
                    .iter()
                    .map(|s| s.parse::<Partition>().map_err(|e| CliError::Input(format!("--partition `{}`: {}", s, e))))
                    .collect::<Result<Vec<_>, _>>()?,
            )
        };
        if self.bound == 0 {
            return Err(CliError::Input("--bound must be positive".into()));
        }
        Ok(RunConfig {
            seed: self.seed,
            coefficient_bound: self.bound,
            max_resamples: self.resamples.max(1),
            partition_filter: filter,
            check_condition_a: self.check_a,
            emit_witness_data: self.witness,
        })
    }
}

/// Runs the decision with `workers` threads. The verdict does not depend on
/// the worker count; the second component holds per-record timings in
/// microseconds.
pub fn decide_system(f: &[MultiPoly], cfg: &RunConfig, workers: usize) -> Result<(Verdict, Vec<u64>), CliError> {
    let plan = plan(f, cfg)?;
    let total = plan.partitions.len();
    let slots: Mutex<Vec<Option<(PartitionRecord, u64)>>> = Mutex::new(vec![None; total]);
    let first_false = AtomicUsize::new(usize::MAX);
    let next = AtomicUsize::new(0);
    let failure: Mutex<Option<(usize, symreal_core::Error)>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..workers.clamp(1, total.max(1)) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::SeqCst);
                if k >= total || k > first_false.load(Ordering::SeqCst) {
                    break;
                }
                let start = Instant::now();
                match examine_partition(&plan, &plan.partitions[k]) {
                    Ok(rec) => {
                        if rec.decide() == Some(false) {
                            first_false.fetch_min(k, Ordering::SeqCst);
                        }
                        let us = start.elapsed().as_micros() as u64;
                        slots.lock().unwrap()[k] = Some((rec, us));
                    }
                    Err(e) => {
                        let mut f = failure.lock().unwrap();
                        if f.as_ref().is_none_or(|(j, _)| k < *j) {
                            *f = Some((k, e));
                        }
                        first_false.fetch_min(k, Ordering::SeqCst);
                    }
                }
            });
        }
    });
    let stop = first_false.into_inner();
    if let Some((k, e)) = failure.into_inner().unwrap() {
        if k <= stop {
            return Err(e.into());
        }
    }
    let (records, times): (Vec<_>, Vec<_>) =
        slots.into_inner().unwrap().into_iter().take(stop.saturating_add(1)).map(|s| s.expect("examined")).unzip();
    Ok((assemble(&plan, records)?, times))
}

fn decimal(x: &str) -> String {
    match symreal_core::algebra::parse_rational(x).ok().and_then(|q| q.to_f64()) {
        Some(f) => format!("{:.10}", f),
        None => x.to_string(),
    }
}

fn render_text(doc: &InputDocument, report: &Report, trace: bool) -> String {
    let mut out = String::new();
    if let Some(name) = &doc.name {
        out.push_str(&format!("system: {}\n", name));
    }
    let verdict = match (report.empty, report.unreliable) {
        (false, _) => "non-empty: the system has a real solution".to_string(),
        (true, false) => "empty: no real solution".to_string(),
        (true, true) => format!("empty (unreliable: inconclusive at {})", report.inconclusive.join(" ")),
    };
    out.push_str(&format!("verdict: {}\n", verdict));
    if let Some(d) = &report.decisive {
        out.push_str(&format!("decisive partition: {}\n", d));
    }
    out.push_str(&format!("seed: {}\npartitions examined: {}\n", report.seed, report.partitions.len()));
    if trace {
        for p in &report.partitions {
            let decide = match p.decide {
                Some(true) => "no real point",
                Some(false) => "real point",
                None => "inconclusive",
            };
            out.push_str(&format!(
                "  {:<12} {:<12} attempts={} equations={} deg v={} bound={} real roots={} {} ({:.3} ms)\n",
                p.partition,
                p.status,
                p.attempts,
                p.equations,
                p.solution_count.map_or("-".into(), |d| d.to_string()),
                p.bound.as_deref().unwrap_or("-"),
                p.real_roots.map_or("-".into(), |d| d.to_string()),
                decide,
                p.elapsed_us as f64 / 1000.0,
            ));
        }
    }
    if let Some(w) = &report.witness {
        let point: Vec<String> = w.point.iter().map(|x| decimal(x)).collect();
        out.push_str(&format!("witness at {}: x ~ ({})\n", w.partition, point.join(", ")));
    }
    out
}

/// Parses `argv`, runs, writes the report to `out` and returns the exit
/// code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = write!(err, "{}", e);
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&args) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            e.exit_code()
        }
    }
}

/// Output text and exit code for parsed arguments.
pub fn execute(args: &Args) -> Result<(String, i32), CliError> {
    let text = std::fs::read_to_string(&args.input).map_err(|source| CliError::Io { path: args.input.clone(), source })?;
    let doc = InputDocument::from_json(&text)?;
    let f = doc.system()?;
    let cfg = args.config()?;
    let (verdict, times) = decide_system(&f, &cfg, args.workers).map_err(|e| match e {
        CliError::Core(symreal_core::Error::NotSymmetric { index }) => {
            CliError::Input(format!("polynomial #{} `{}` is not symmetric in {}", index, doc.polys[index], doc.vars.join(", ")))
        }
        e => e,
    })?;
    let report = Report::new(&verdict, &times);
    let code = if report.unreliable { 4 } else { 0 };
    let text = if args.json { report.to_json() + "\n" } else { render_text(&doc, &report, args.trace) };
    Ok((text, code))
}
