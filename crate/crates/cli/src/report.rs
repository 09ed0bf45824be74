//! JSON form of a verdict. Rationals are strings `"p"` or `"p/q"`,
//! univariate polynomials are coefficient lists from the constant term up,
//! partitions are written `"1^2,2^1"`.

use serde::{Deserialize, Serialize};
use symreal_core::algebra::{parse_rational, Rational, UniPoly};
use symreal_core::driver::{PartitionRecord, PartitionStatus, Verdict};
use symreal_core::symmetry::{BlockVars, Partition};
use symreal_core::witness::{BlockWitness, Witness};
use symreal_core::zerodim::ZeroDimParam;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub empty: bool,
    pub seed: u64,
    pub unreliable: bool,
    pub decisive: Option<String>,
    pub inconclusive: Vec<String>,
    pub partitions: Vec<PartitionReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub partition: String,
    pub status: String,
    pub attempts: usize,
    pub objective: Option<Vec<Vec<String>>>,
    pub degrees: Vec<u32>,
    pub objective_degree: u32,
    pub equations: usize,
    pub quotient_dim: Option<usize>,
    pub solution_count: Option<usize>,
    pub bound: Option<String>,
    pub v: Option<Vec<String>>,
    pub real_roots: Option<usize>,
    pub decide: Option<bool>,
    pub elapsed_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub partition: String,
    pub v: Vec<String>,
    pub coords: Vec<Vec<String>>,
    pub mu: Vec<String>,
    pub root_index: usize,
    pub interval: [String; 2],
    pub separators: Vec<Vec<String>>,
    pub approx: Vec<Vec<String>>,
    /// Approximate point in the input coordinates.
    pub point: Vec<String>,
}

fn rats(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn poly(p: &UniPoly) -> Vec<String> {
    rats(p.coeffs())
}

fn parse_rats(xs: &[String]) -> Result<Vec<Rational>, CliError> {
    xs.iter().map(|x| parse_rational(x).map_err(|e| CliError::Input(format!("`{}`: {}", x, e)))).collect()
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    s.parse().map_err(|e| CliError::Input(format!("partition `{}`: {}", s, e)))
}

fn status_name(s: &PartitionStatus) -> &'static str {
    match s {
        PartitionStatus::Decided => "decided",
        PartitionStatus::Inconsistent => "inconsistent",
        PartitionStatus::Degenerate => "degenerate",
        PartitionStatus::Exhausted => "exhausted",
    }
}

impl PartitionReport {
    pub fn new(rec: &PartitionRecord, elapsed_us: u64) -> Self {
        PartitionReport {
            partition: rec.partition.to_string(),
            status: status_name(&rec.status).into(),
            attempts: rec.attempts,
            objective: rec.objective.as_ref().map(|o| o.a.iter().map(|row| rats(row)).collect()),
            degrees: rec.degrees.clone(),
            objective_degree: rec.objective_degree,
            equations: rec.equations,
            quotient_dim: rec.quotient_dim,
            solution_count: rec.solution_count,
            bound: rec.bound.as_ref().map(|b| b.to_string()),
            v: rec.param.as_ref().map(|p| poly(p.v())),
            real_roots: rec.decision.as_ref().map(|d| d.real_roots),
            decide: rec.decide(),
            elapsed_us,
        }
    }
}

impl WitnessReport {
    pub fn new(w: &Witness) -> Self {
        WitnessReport {
            partition: w.partition.to_string(),
            v: poly(w.param.v()),
            coords: w.param.coords().iter().map(poly).collect(),
            mu: rats(w.param.mu()),
            root_index: w.root_index,
            interval: [w.interval.0.to_string(), w.interval.1.to_string()],
            separators: w.blocks.iter().map(|b| rats(&b.separators)).collect(),
            approx: w.blocks.iter().map(|b| rats(&b.approx)).collect(),
            point: rats(&w.approximate_point()),
        }
    }

    /// Rebuilds the certificate, for checking with
    /// [`symreal_core::witness::certify`].
    pub fn to_witness(&self) -> Result<Witness, CliError> {
        let partition = parse_partition(&self.partition)?;
        let bv = BlockVars::new(&partition);
        let v = UniPoly::new(parse_rats(&self.v)?);
        let coords = self.coords.iter().map(|c| parse_rats(c).map(UniPoly::new)).collect::<Result<Vec<_>, _>>()?;
        let mu = parse_rats(&self.mu)?;
        if coords.len() != bv.len() || mu.len() != bv.len() || self.separators.len() != self.approx.len() {
            return Err(CliError::Input("witness shape does not match its partition".into()));
        }
        let param = ZeroDimParam::new(bv.e().clone(), v, coords, mu);
        let interval = (parse_rats(&self.interval[..1])?.remove(0), parse_rats(&self.interval[1..])?.remove(0));
        let blocks = self
            .separators
            .iter()
            .zip(&self.approx)
            .map(|(s, a)| Ok(BlockWitness { separators: parse_rats(s)?, approx: parse_rats(a)? }))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(Witness { partition, param, root_index: self.root_index, interval, blocks })
    }
}

impl Report {
    /// `elapsed_us[k]` is the time spent on `verdict.per_partition[k]`.
    pub fn new(verdict: &Verdict, elapsed_us: &[u64]) -> Self {
        Report {
            empty: verdict.empty,
            seed: verdict.seed,
            unreliable: verdict.unreliable(),
            decisive: verdict.decisive.as_ref().map(|p| p.to_string()),
            inconclusive: verdict.inconclusive.iter().map(|p| p.to_string()).collect(),
            partitions: verdict
                .per_partition
                .iter()
                .enumerate()
                .map(|(k, r)| PartitionReport::new(r, elapsed_us.get(k).copied().unwrap_or(0)))
                .collect(),
            witness: verdict.witness.as_ref().map(WitnessReport::new),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed report: {}", e)))
    }
}
