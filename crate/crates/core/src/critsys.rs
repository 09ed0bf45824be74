//! The random invariant objective, the critical-point system in elementary
//! coordinates, and a probabilistic check of the Jacobian rank condition.

use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{jacobian, minors_k, MultiPoly, Rational, UniPoly, Vars};
use crate::symmetry::{power_sums_in_z, power_sums_over, BlockVars, Partition};
use crate::{Error, Result};

/// Coefficients of the objective `sum c_i P_{t_i+1,i} + sum a_{j,i} P_{j,i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectiveSpec {
    pub partition: Partition,
    /// `a[i][j-1]` multiplies `P_{j,i}`.
    pub a: Vec<Vec<Rational>>,
    /// `c[i]` is set iff `t_i` is odd.
    pub c: Vec<bool>,
}

impl ObjectiveSpec {
    /// Builds an objective from explicit coefficients, with the parity bits derived
    /// from the partition.
    pub fn new(partition: &Partition, a: Vec<Vec<Rational>>) -> Result<Self> {
        let mults = partition.multiplicities();
        if a.len() != mults.len() {
            return Err(Error::BlockMismatch { expected: mults.len(), got: a.len() });
        }
        for (ai, &t) in a.iter().zip(&mults) {
            if ai.len() != t {
                return Err(Error::BlockMismatch { expected: t, got: ai.len() });
            }
        }
        let c = mults.iter().map(|t| t % 2 == 1).collect();
        Ok(ObjectiveSpec { partition: partition.clone(), a, c })
    }
}

/// Draws the coefficients uniformly from `{-bound..bound} \ {0}`; the top
/// coefficient of an even-size block is drawn from `{1..bound}` so the
/// objective stays proper.
pub fn sample_a(partition: &Partition, seed: u64, bound: u64) -> ObjectiveSpec {
    let bound = bound.max(2) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = partition
        .multiplicities()
        .iter()
        .map(|&t| {
            (1..=t)
                .map(|j| {
                    let mag = rng.gen_range(1..=bound);
                    let positive = (j == t && t % 2 == 0) || rng.gen_bool(0.5);
                    Rational::from_integer(if positive { mag } else { -mag }.into())
                })
                .collect()
        })
        .collect();
    ObjectiveSpec::new(partition, a).expect("shape matches partition")
}

/// The objective over the z-variables of the partition.
pub fn build_phi_a(spec: &ObjectiveSpec) -> MultiPoly {
    let bv = BlockVars::new(&spec.partition);
    let p = power_sums_in_z(&bv);
    let mut phi = MultiPoly::zero(bv.z());
    for (b, ai) in spec.a.iter().enumerate() {
        let range = bv.block_range(b);
        if spec.c[b] {
            let t = range.len() as u16 + 1;
            let terms = range.clone().map(|r| (crate::algebra::Monomial::var(bv.len(), r, t), Rational::one()));
            phi = &phi + &MultiPoly::from_terms(bv.z(), terms);
        }
        for (j, c) in ai.iter().enumerate() {
            phi = &phi + &p[range.start + j].scale(c);
        }
    }
    phi
}

/// The objective written directly over the e-variables, by Newton's
/// identities (equal to `to_elementary(build_phi_a(spec))`).
pub fn phi_in_elementary(spec: &ObjectiveSpec) -> MultiPoly {
    let bv = BlockVars::new(&spec.partition);
    let mut phi = MultiPoly::zero(bv.e());
    for (b, ai) in spec.a.iter().enumerate() {
        let range = bv.block_range(b);
        let idx: Vec<usize> = range.clone().collect();
        let top = range.len() + usize::from(spec.c[b]);
        let p = power_sums_over(top, bv.e(), &idx);
        if spec.c[b] {
            phi = &phi + &p[top - 1];
        }
        for (j, c) in ai.iter().enumerate() {
            phi = &phi + &p[j].scale(c);
        }
    }
    phi
}

/// Polynomials whose common zeros are the critical points of the objective
/// on the variety, in elementary coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalSystem {
    pub equations: Vec<MultiPoly>,
    /// Number of input equations.
    pub s: usize,
    /// Number of e-variables.
    pub ell: usize,
    pub vars: Vars,
    /// Total degrees of the input equations followed by that of the objective.
    pub degrees: Vec<u32>,
}

/// `zeta_g` followed by all `(s+1)`-minors of `Jac(zeta_g, zeta_phi)`; when
/// `s` equals the number of variables only `zeta_g` is kept.
pub fn critical_system(zeta_g: &[MultiPoly], zeta_phi: &MultiPoly) -> Result<CriticalSystem> {
    let vars = zeta_phi.vars().clone();
    let s = zeta_g.len();
    let ell = vars.len();
    if s > ell {
        return Err(Error::TooManyEquations { s, vars: ell });
    }
    if zeta_g.iter().any(|g| !g.vars().same(&vars)) {
        return Err(Error::VariableMismatch);
    }
    let mut equations: Vec<MultiPoly> = zeta_g.to_vec();
    if s < ell {
        let mut rows = zeta_g.to_vec();
        rows.push(zeta_phi.clone());
        let names: Vec<&str> = vars.names().iter().map(|s| s.as_str()).collect();
        let jac = jacobian(&rows, &names)?;
        equations.extend(minors_k(&jac, s + 1)?);
    }
    let degrees = zeta_g.iter().chain(core::iter::once(zeta_phi)).map(|p| p.total_degree().unwrap_or(0)).collect();
    Ok(CriticalSystem { equations, s, ell, vars, degrees })
}

/// Restriction of `f` to the line `base + t * dir`.
pub fn restrict_to_line(f: &MultiPoly, base: &[Rational], dir: &[Rational]) -> UniPoly {
    let lines: Vec<UniPoly> = base.iter().zip(dir).map(|(b, d)| UniPoly::new(alloc::vec![b.clone(), d.clone()])).collect();
    let mut pows: Vec<Vec<UniPoly>> = lines.iter().map(|l| alloc::vec![UniPoly::one(), l.clone()]).collect();
    let mut acc = UniPoly::zero();
    for (m, c) in f.terms() {
        let mut term = UniPoly::constant(c.clone());
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let table = &mut pows[i];
            while table.len() <= e as usize {
                let next = table.last().unwrap() * &lines[i];
                table.push(next);
            }
            term = &term * &table[e as usize];
        }
        acc = &acc + &term;
    }
    acc
}

/// Looks for a point of `V(f)` where the Jacobian of `f` has rank below
/// `s = f.len()`. Each trial intersects the variety with a random rational
/// line and tests, by exact gcds, whether the intersection meets the locus
/// where every `s`-minor vanishes. The first trial uses a line through the
/// origin. `false` reports a violation; `true` only means none was found.
pub fn condition_a_probe(f: &[MultiPoly], trials: usize, seed: u64) -> bool {
    condition_a_probe_with_points(f, &[], trials, seed)
}

/// As [`condition_a_probe`], additionally checking the supplied points.
pub fn condition_a_probe_with_points(f: &[MultiPoly], points: &[Vec<Rational>], trials: usize, seed: u64) -> bool {
    let s = f.len();
    let Some(first) = f.first() else {
        return true;
    };
    let vars = first.vars().clone();
    let n = vars.len();
    if s == 0 || s > n {
        return true;
    }
    let names: Vec<&str> = vars.names().iter().map(|s| s.as_str()).collect();
    let Ok(jac) = jacobian(f, &names) else {
        return true;
    };
    let Ok(minors) = minors_k(&jac, s) else {
        return true;
    };
    for pt in points {
        if pt.len() != n {
            continue;
        }
        let on_variety = f.iter().all(|p| p.eval(pt).map(|v| v.is_zero()).unwrap_or(false));
        if on_variety && minors.iter().all(|m| m.eval(pt).map(|v| v.is_zero()).unwrap_or(false)) {
            return false;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| Rational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=7).into());
    for trial in 0..trials {
        let base: Vec<Rational> = (0..n).map(|_| if trial == 0 { Rational::zero() } else { draw(&mut rng) }).collect();
        let dir: Vec<Rational> = (0..n).map(|_| draw(&mut rng)).collect();
        if dir.iter().all(|d| d.is_zero()) {
            continue;
        }
        let mut g = UniPoly::zero();
        for p in f {
            g = g.gcd(&restrict_to_line(p, &base, &dir));
        }
        if g.is_zero() {
            // the whole line lies in V(f); test the minors along it
            g = UniPoly::zero();
        } else if g.deg0() == 0 {
            continue;
        }
        for m in &minors {
            g = g.gcd(&restrict_to_line(m, &base, &dir));
            if !g.is_zero() && g.deg0() == 0 {
                break;
            }
        }
        if g.is_zero() || g.deg0() > 0 {
            return false;
        }
    }
    true
}
