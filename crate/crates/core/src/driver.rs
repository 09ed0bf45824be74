//! The emptiness decision over all orbit types.
//!
//! Partitions are examined one at a time by [`examine_partition`]; the
//! records are folded into a [`Verdict`] by [`assemble`], which stops at the
//! first partition carrying a real point. [`real_emptiness`] runs both
//! sequentially. Callers with threads can run `examine_partition` in any
//! order and still get the same verdict from `assemble`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{MultiPoly, Rational, UniPoly};
use crate::critsys::{condition_a_probe, critical_system, phi_in_elementary, sample_a, ObjectiveSpec};
use crate::realcount::count_real_roots;
use crate::realcount::{decide_detailed, Decision};
use crate::symmetry::{apply_t_lambda, is_invariant, partitions_min_length, to_elementary, BlockVars, Partition};
use crate::witness::{build_witness, Witness};
use crate::zerodim::{c_lambda_bound, solve_zero_dim_with, verify_param, Outcome, SolveOptions, TermOrder, ZeroDimParam};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    /// Objective coefficients are drawn from `[-bound, bound]`.
    pub coefficient_bound: u64,
    /// Objectives tried per partition before giving up on it.
    pub max_resamples: usize,
    /// Restricts the iteration to these partitions.
    pub partition_filter: Option<Vec<Partition>>,
    pub check_condition_a: bool,
    pub emit_witness_data: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            coefficient_bound: 1 << 10,
            max_resamples: 4,
            partition_filter: None,
            check_condition_a: false,
            emit_witness_data: false,
        }
    }
}

/// How the examination of one partition ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionStatus {
    /// The critical set was solved and the fibers counted.
    Decided,
    /// Some collapsed equation is a nonzero constant: no points of this type.
    Inconsistent,
    /// Some collapsed equation vanishes identically.
    Degenerate,
    /// Every sampled objective gave an infinite or unsolvable critical set.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionRecord {
    pub partition: Partition,
    pub status: PartitionStatus,
    /// Objective used for the final attempt.
    pub objective: Option<ObjectiveSpec>,
    /// Number of objectives tried.
    pub attempts: usize,
    /// Degrees of the collapsed equations in the z-variables.
    pub degrees: Vec<u32>,
    pub objective_degree: u32,
    pub equations: usize,
    pub quotient_dim: Option<usize>,
    pub param: Option<ZeroDimParam>,
    /// `deg v`, the number of complex critical points.
    pub solution_count: Option<usize>,
    pub bound: Option<BigInt>,
    pub decision: Option<Decision>,
}

impl PartitionRecord {
    /// `Some(true)` when no real point of this orbit type was found,
    /// `Some(false)` when one was, `None` when inconclusive.
    pub fn decide(&self) -> Option<bool> {
        match self.status {
            PartitionStatus::Decided => self.decision.as_ref().map(|d| d.empty),
            PartitionStatus::Inconsistent => Some(true),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub empty: bool,
    pub seed: u64,
    pub per_partition: Vec<PartitionRecord>,
    /// Partitions that ended without a decision; a `true` verdict is then
    /// unreliable.
    pub inconclusive: Vec<Partition>,
    /// The partition whose decision produced `empty = false`.
    pub decisive: Option<Partition>,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn unreliable(&self) -> bool {
        self.empty && !self.inconclusive.is_empty()
    }
}

/// A validated input system ready for per-partition work.
#[derive(Clone, Debug)]
pub struct Plan {
    pub system: Vec<MultiPoly>,
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub config: RunConfig,
    /// Set when the answer follows from the input alone.
    pub immediate: Option<bool>,
}

const PROBE_TRIALS: usize = 8;

/// Checks the input and lists the partitions to examine.
/// One variable: real points are the real roots of the gcd.
fn univariate_empty(f: &[MultiPoly]) -> bool {
    let uni = |p: &MultiPoly| {
        let mut c = alloc::vec![Rational::zero(); p.degree_in(0) as usize + 1];
        for (m, x) in p.terms() {
            c[m.exps()[0] as usize] = x.clone();
        }
        UniPoly::new(c)
    };
    let g = f.iter().skip(1).fold(uni(&f[0]), |g, p| g.gcd(&uni(p)));
    count_real_roots(&g) == 0
}

pub fn plan(f: &[MultiPoly], cfg: &RunConfig) -> Result<Plan> {
    let s = f.len();
    let n = f.first().map(|p| p.nvars()).unwrap_or(0);
    let mut immediate = None;
    if s == 0 {
        immediate = Some(false);
    }
    if f.iter().any(|p| !p.vars().same(f[0].vars())) {
        return Err(Error::VariableMismatch);
    }
    if s > 0 && s >= n && n != 1 {
        return Err(Error::TooManyInputEquations { s, n });
    }
    let finest = Partition::finest(n.max(1));
    for (index, p) in f.iter().enumerate() {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !is_invariant(&apply_t_lambda(p, &finest)?, &finest) {
            return Err(Error::NotSymmetric { index });
        }
    }
    if f.iter().any(|p| p.total_degree() == Some(0)) {
        immediate = Some(true);
    } else if n == 1 && s > 0 {
        immediate = Some(univariate_empty(f));
    }
    if immediate.is_none() && cfg.check_condition_a && !condition_a_probe(f, PROBE_TRIALS, cfg.seed) {
        return Err(Error::ConditionA);
    }
    let mut partitions = if immediate.is_some() { Vec::new() } else { partitions_min_length(n, s) };
    if let Some(filter) = &cfg.partition_filter {
        if immediate.is_none() {
            if let Some(bad) = filter.iter().find(|p| p.n() != n || p.length() < s) {
                return Err(Error::InvalidPartition(alloc::format!("{} is not a partition of {} with at least {} parts", bad, n, s)));
            }
        }
        partitions.retain(|p| filter.contains(p));
    }
    Ok(Plan { system: f.to_vec(), n, partitions, config: cfg.clone(), immediate })
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Seed of the `attempt`-th objective for `partition`.
pub fn partition_seed(seed: u64, partition: &Partition, attempt: usize) -> u64 {
    let tag = fnv1a(alloc::format!("{}", partition).as_bytes());
    (seed ^ tag).wrapping_add((attempt as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Runs the pipeline for one partition with a fixed objective.
pub fn examine_with_objective(f: &[MultiPoly], partition: &Partition, spec: &ObjectiveSpec, solver_seed: u64) -> Result<PartitionRecord> {
    let mut rec = collapse(f, partition)?;
    if let Ok(zeta_g) = &rec.1 {
        solve_once(&mut rec.0, zeta_g, partition, spec, solver_seed)?;
        rec.0.attempts = 1;
    }
    Ok(rec.0)
}

type Collapsed = (PartitionRecord, core::result::Result<Vec<MultiPoly>, PartitionStatus>);

fn collapse(f: &[MultiPoly], partition: &Partition) -> Result<Collapsed> {
    let f_l: Vec<MultiPoly> = f.iter().map(|p| apply_t_lambda(p, partition)).collect::<Result<_>>()?;
    let degrees: Vec<u32> = f_l.iter().map(|p| p.total_degree().unwrap_or(0)).collect();
    let objective_degree = partition.multiplicities().iter().map(|&t| if t % 2 == 1 { t as u32 + 1 } else { t as u32 }).max().unwrap_or(0);
    let mut rec = PartitionRecord {
        partition: partition.clone(),
        status: PartitionStatus::Exhausted,
        objective: None,
        attempts: 0,
        degrees,
        objective_degree,
        equations: 0,
        quotient_dim: None,
        param: None,
        solution_count: None,
        bound: None,
        decision: None,
    };
    if f_l.iter().any(|p| p.is_zero()) {
        rec.status = PartitionStatus::Degenerate;
        return Ok((rec, Err(PartitionStatus::Degenerate)));
    }
    if f_l.iter().any(|p| p.total_degree() == Some(0)) {
        rec.status = PartitionStatus::Inconsistent;
        return Ok((rec, Err(PartitionStatus::Inconsistent)));
    }
    let zeta_g = f_l.iter().map(|p| to_elementary(p, partition)).collect::<Result<Vec<_>>>()?;
    Ok((rec, Ok(zeta_g)))
}

/// One objective; returns whether the critical set came out finite.
fn solve_once(
    rec: &mut PartitionRecord,
    zeta_g: &[MultiPoly],
    partition: &Partition,
    spec: &ObjectiveSpec,
    solver_seed: u64,
) -> Result<bool> {
    let bv = BlockVars::new(partition);
    let phi = phi_in_elementary(spec);
    let cs = critical_system(zeta_g, &phi)?;
    rec.objective = Some(spec.clone());
    rec.equations = cs.equations.len();
    let opts = SolveOptions { order: TermOrder::Weighted(bv.e_weights()), first_mu: None, max_retries: 8 };
    let report = solve_zero_dim_with(&cs.equations, &cs.vars, solver_seed, &opts);
    rec.quotient_dim = report.evidence.quotient_dim;
    let Outcome::Finite(param) = report.outcome else {
        return Ok(false);
    };
    if !verify_param(&param, &cs.equations) {
        return Ok(false);
    }
    let delta = rec.degrees.iter().copied().max().unwrap_or(0).max(rec.objective_degree);
    rec.bound = Some(c_lambda_bound(partition, &rec.degrees, delta));
    rec.solution_count = Some(param.degree());
    rec.decision = Some(decide_detailed(&param, partition, true)?);
    rec.param = Some(param);
    rec.status = PartitionStatus::Decided;
    Ok(true)
}

/// Runs the pipeline for one partition, resampling the objective when the
/// critical set is not finite.
pub fn examine_partition(plan: &Plan, partition: &Partition) -> Result<PartitionRecord> {
    let (mut rec, zeta_g) = collapse(&plan.system, partition)?;
    let Ok(zeta_g) = zeta_g else {
        return Ok(rec);
    };
    let cfg = &plan.config;
    for attempt in 0..cfg.max_resamples.max(1) {
        let seed = partition_seed(cfg.seed, partition, attempt);
        let spec = sample_a(partition, seed, cfg.coefficient_bound);
        rec.attempts = attempt + 1;
        if solve_once(&mut rec, &zeta_g, partition, &spec, seed.rotate_left(17))? {
            break;
        }
    }
    Ok(rec)
}

/// Folds per-partition records, given in plan order, into the verdict.
/// Records after the first real point are dropped.
pub fn assemble(plan: &Plan, records: Vec<PartitionRecord>) -> Result<Verdict> {
    let cfg = &plan.config;
    let mut verdict = Verdict {
        empty: plan.immediate.unwrap_or(true),
        seed: cfg.seed,
        per_partition: Vec::new(),
        inconclusive: Vec::new(),
        decisive: None,
        witness: None,
    };
    if plan.immediate.is_some() {
        return Ok(verdict);
    }
    for rec in records {
        let d = rec.decide();
        if d.is_none() {
            verdict.inconclusive.push(rec.partition.clone());
        }
        let stop = d == Some(false);
        if stop {
            verdict.empty = false;
            verdict.decisive = Some(rec.partition.clone());
            if cfg.emit_witness_data {
                let (Some(param), Some(decision)) = (&rec.param, &rec.decision) else {
                    return Err(Error::NoWitness);
                };
                verdict.witness = Some(build_witness(param, &rec.partition, decision)?);
            }
        }
        verdict.per_partition.push(rec);
        if stop {
            break;
        }
    }
    if !verdict.empty {
        verdict.inconclusive.clear();
    }
    Ok(verdict)
}

/// Decides whether the real zero set of the symmetric system `f` is empty.
pub fn real_emptiness(f: &[MultiPoly], cfg: &RunConfig) -> Result<Verdict> {
    let plan = plan(f, cfg)?;
    let mut records = Vec::with_capacity(plan.partitions.len());
    for p in &plan.partitions {
        let rec = examine_partition(&plan, p)?;
        let stop = rec.decide() == Some(false);
        records.push(rec);
        if stop {
            break;
        }
    }
    assemble(&plan, records)
}

/// The certificate of a non-empty verdict.
pub fn verdict_witness(verdict: &Verdict) -> Result<&Witness> {
    verdict.witness.as_ref().ok_or(Error::NoWitness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{poly_parse, rat, Vars};
    use crate::witness::certify;

    fn xs(n: usize) -> Vars {
        let names: Vec<_> = (1..=n).map(|i| alloc::format!("x{}", i)).collect();
        Vars::new(&names)
    }

    fn quartic_system() -> Vec<MultiPoly> {
        alloc::vec![poly_parse("x1^2 + x2^2 + x3^2 + x4^2 - 6*x1*x2*x3*x4 - 1", &xs(4)).unwrap()]
    }

    #[test]
    fn quartic_nonempty_with_certificate() {
        let cfg = RunConfig { emit_witness_data: true, ..RunConfig::default() };
        let f = quartic_system();
        let v = real_emptiness(&f, &cfg).unwrap();
        assert!(!v.empty);
        assert!(v.decisive.is_some());
        let w = verdict_witness(&v).unwrap();
        certify(w, &f).unwrap();
    }

    #[test]
    fn quartic_restricted_to_two_squared() {
        let l: Partition = "2^2".parse().unwrap();
        let cfg = RunConfig { partition_filter: Some(alloc::vec![l.clone()]), ..RunConfig::default() };
        let v = real_emptiness(&quartic_system(), &cfg).unwrap();
        assert!(!v.empty);
        assert_eq!(v.decisive, Some(l.clone()));
        // the reference objective for 2^2
        let spec = ObjectiveSpec::new(&l, alloc::vec![alloc::vec![rat(-9), rat(5)]]).unwrap();
        let rec = examine_with_objective(&quartic_system(), &l, &spec, 0).unwrap();
        assert_eq!(rec.solution_count, Some(4));
        assert_eq!(rec.decide(), Some(false));
    }

    #[test]
    fn degenerate_inputs() {
        let v = xs(3);
        let cfg = RunConfig::default();
        assert!(!real_emptiness(&[], &cfg).unwrap().empty);
        let c = poly_parse("3", &v).unwrap();
        assert!(real_emptiness(&[c], &cfg).unwrap().empty);
        let bad = poly_parse("x1 + 2*x2", &v).unwrap();
        assert_eq!(real_emptiness(&[bad], &cfg), Err(Error::NotSymmetric { index: 0 }));
        let g = poly_parse("x1 + x2 + x3", &v).unwrap();
        let three = [g.clone(), g.clone(), g];
        assert!(matches!(real_emptiness(&three, &cfg), Err(Error::TooManyInputEquations { .. })));
        let z = MultiPoly::zero(&v);
        assert_eq!(real_emptiness(&[z], &cfg), Err(Error::ZeroPolynomial));
        let filtered = RunConfig { partition_filter: Some(alloc::vec!["2^2".parse().unwrap()]), ..RunConfig::default() };
        let sphere = poly_parse("x1^2 + x2^2 + x3^2 - 1", &v).unwrap();
        assert!(matches!(real_emptiness(&[sphere], &filtered), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn one_variable() {
        let v = xs(1);
        let cfg = RunConfig::default();
        let p = |s: &str| poly_parse(s, &v).unwrap();
        assert!(real_emptiness(&[p("x1^2 + 1")], &cfg).unwrap().empty);
        assert!(!real_emptiness(&[p("x1^2 - 2")], &cfg).unwrap().empty);
        assert!(!real_emptiness(&[p("x1^2 - 2"), p("x1^3 - 2*x1")], &cfg).unwrap().empty);
        assert!(real_emptiness(&[p("x1^2 - 2"), p("x1 - 1")], &cfg).unwrap().empty);
    }

    #[test]
    fn small_spheres() {
        let cfg = RunConfig::default();
        let pos = poly_parse("x1^2 + x2^2 + x3^2 + 1", &xs(3)).unwrap();
        let v = real_emptiness(&[pos], &cfg).unwrap();
        assert!(v.empty && !v.unreliable());
        let sph = poly_parse("x1^2 + x2^2 + x3^2 - 1", &xs(3)).unwrap();
        assert!(!real_emptiness(&[sph], &cfg).unwrap().empty);
    }

    #[test]
    fn determinism_and_singular_input() {
        let cfg = RunConfig { seed: 7, ..RunConfig::default() };
        assert_eq!(real_emptiness(&quartic_system(), &cfg), real_emptiness(&quartic_system(), &cfg));
        let cone = poly_parse("x1^2 + x2^2 + x3^2", &xs(3)).unwrap();
        let checked = RunConfig { check_condition_a: true, ..RunConfig::default() };
        assert_eq!(real_emptiness(&[cone], &checked), Err(Error::ConditionA));
    }
}
