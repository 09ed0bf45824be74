//! Exact solving of zero-dimensional polynomial systems into a rational
//! parametrization `((v, v_1..v_l), mu)`.

mod bound;
mod groebner;
mod param;
mod quotient;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use bound::{c_lambda_bound, c_lambda_weighted_bound};
pub use groebner::{Groebner, TermOrder};
pub use param::{verify_param, ZeroDimParam};
pub use quotient::Quotient;

use crate::algebra::linalg::{self, QMatrix};
use crate::algebra::{squarefree_part, MultiPoly, Rational, UniPoly, Vars};

/// How a solve ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Finite(ZeroDimParam),
    /// The ideal has positive dimension.
    NonFinite,
    /// No separating linear form was found within the retry budget.
    NotSeparated,
}

/// Summary of the Groebner basis backing a solve.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DimensionEvidence {
    pub basis_size: usize,
    pub leading_monomials: Vec<String>,
    /// Variables with no pure power among the leading monomials.
    pub free_variables: Vec<String>,
    /// Dimension of the quotient algebra when finite.
    pub quotient_dim: Option<usize>,
    pub radical: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub outcome: Outcome,
    pub evidence: DimensionEvidence,
    /// Number of distinct complex solutions (`deg v`) when finite.
    pub solution_count: usize,
    /// Separating forms tried after the first one.
    pub retries: usize,
}

impl SolveReport {
    pub fn param(&self) -> Option<&ZeroDimParam> {
        match &self.outcome {
            Outcome::Finite(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.outcome, Outcome::Finite(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub order: TermOrder,
    /// First linear form to try; defaults to the first variable.
    pub first_mu: Option<Vec<Rational>>,
    pub max_retries: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { order: TermOrder::Grevlex, first_mu: None, max_retries: 8 }
    }
}

/// Solves with grevlex, `mu = vars[0]` first and up to 8 random retries.
pub fn solve_zero_dim(system: &[MultiPoly], vars: &Vars, seed: u64) -> SolveReport {
    solve_zero_dim_with(system, vars, seed, &SolveOptions::default())
}

pub fn solve_zero_dim_with(system: &[MultiPoly], vars: &Vars, seed: u64, opts: &SolveOptions) -> SolveReport {
    let gb = Groebner::new(system, vars, opts.order.clone());
    let mut evidence = DimensionEvidence {
        basis_size: gb.len(),
        leading_monomials: gb
            .leading_monomials()
            .iter()
            .map(|m| MultiPoly::monomial(vars, m.clone(), Rational::one()).to_string())
            .collect(),
        free_variables: gb.free_variables().iter().map(|&i| vars.names()[i].clone()).collect(),
        quotient_dim: None,
        radical: None,
    };
    let Some(q) = Quotient::new(&gb) else {
        return SolveReport { outcome: Outcome::NonFinite, evidence, solution_count: 0, retries: 0 };
    };
    evidence.quotient_dim = Some(q.dim());
    let n = vars.len();
    let first = opts.first_mu.clone().unwrap_or_else(|| {
        let mut mu = alloc::vec![Rational::zero(); n];
        if n > 0 {
            mu[0] = Rational::one();
        }
        mu
    });
    if q.dim() == 0 {
        evidence.radical = Some(true);
        let param = ZeroDimParam::new(vars.clone(), UniPoly::one(), alloc::vec![UniPoly::zero(); n], first);
        return SolveReport { outcome: Outcome::Finite(param), evidence, solution_count: 0, retries: 0 };
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hermite: Option<(QMatrix, usize)> = None;
    let mut mu = first;
    let mut retries = 0;
    loop {
        if let Some((param, radical)) = try_form(&q, vars, &mu, &mut hermite) {
            evidence.radical = Some(radical);
            let count = param.degree();
            return SolveReport { outcome: Outcome::Finite(param), evidence, solution_count: count, retries };
        }
        if retries == opts.max_retries {
            evidence.radical = hermite.as_ref().map(|(_, r)| *r == q.dim());
            return SolveReport { outcome: Outcome::NotSeparated, evidence, solution_count: 0, retries };
        }
        retries += 1;
        mu = (0..n).map(|_| Rational::from_integer(rng.gen_range(-16i64..=16).into())).collect();
    }
}

/// Incremental echelon form remembering how each reduced vector combines
/// the inserted ones.
struct Echelon {
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Reduces `w`; returns the remainder and the combination of inserted
    /// vectors (with `w` itself at position `slot`) that it equals.
    fn reduce(&self, w: &[Rational], slot: usize, width: usize) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = w.to_vec();
        let mut comb = alloc::vec![Rational::zero(); width];
        if slot < width {
            comb[slot] = Rational::one();
        }
        for (piv, row, rc) in &self.rows {
            if r[*piv].is_zero() {
                continue;
            }
            let f = r[*piv].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in comb.iter_mut().zip(rc) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        (r, comb)
    }

    /// Inserts a nonzero remainder.
    fn push(&mut self, mut r: Vec<Rational>, mut comb: Vec<Rational>) {
        let piv = r.iter().position(|x| !x.is_zero()).expect("nonzero remainder");
        let inv = r[piv].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for x in comb.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((piv, r, comb));
    }
}

/// Attempts to build the parametrization with linear form `mu`. Returns the
/// parametrization and whether the ideal turned out radical.
fn try_form(q: &Quotient, vars: &Vars, mu: &[Rational], hermite: &mut Option<(QMatrix, usize)>) -> Option<(ZeroDimParam, bool)> {
    if let Some(param) = try_cyclic(q, vars, mu) {
        return Some((param, true));
    }
    let d = q.dim();
    // Krylov sequence 1, mu, mu^2, ... up to the first dependency
    let mut powers: Vec<Vec<Rational>> = alloc::vec![q.one()];
    let mut ech = Echelon::new();
    let width = d + 1;
    let minpoly = loop {
        let k = powers.len() - 1;
        let (r, comb) = ech.reduce(&powers[k], k, width);
        if r.iter().all(|x| x.is_zero()) {
            break UniPoly::new(comb[..=k].to_vec());
        }
        ech.push(r, comb);
        let next = q.mul_linear(mu, &powers[k]);
        powers.push(next);
    };
    let v = squarefree_part(&minpoly).ok()?;
    let dv = v.deg0();
    let radical_separating = minpoly.deg0() == d && dv == d;
    let transform: Option<&QMatrix> = if radical_separating {
        None
    } else {
        if hermite.is_none() {
            let h = q.hermite();
            let r = linalg::rank(&h);
            *hermite = Some((h, r));
        }
        let (h, r) = hermite.as_ref().unwrap();
        if dv != *r {
            return None;
        }
        Some(h)
    };
    let apply = |w: &[Rational]| -> Vec<Rational> {
        match transform {
            Some(h) => linalg::mat_vec(h, w),
            None => w.to_vec(),
        }
    };
    let mut basis = Echelon::new();
    for (m, w) in powers.iter().take(dv).enumerate() {
        let (r, comb) = basis.reduce(&apply(w), m, dv);
        if r.iter().all(|x| x.is_zero()) {
            return None;
        }
        basis.push(r, comb);
    }
    let (content, v) = v.primitive();
    let _ = content;
    let v = if v.leading_coeff() < Rational::zero() { -&v } else { v };
    let dvp = v.derivative();
    let mut coords = Vec::with_capacity(vars.len());
    for k in 0..vars.len() {
        let (r, comb) = basis.reduce(&apply(&q.var(k)), dv, dv);
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        // x_k = sum comb'_m mu^m where comb holds minus the coefficients
        let qk = UniPoly::new(comb.iter().map(|c| -c.clone()).collect());
        coords.push(qk.mul_mod(&dvp, &v));
    }
    let param = ZeroDimParam::new(vars.clone(), v, coords, mu.to_vec());
    Some((param, transform.is_none()))
}

/// The common case where `1, mu, .., mu^(d-1)` is a basis of the quotient
/// and the minimal polynomial of `mu` is squarefree, done over the integers:
/// `P_j = (L M)^j 1 = L^j mu^j`.
fn try_cyclic(q: &Quotient, vars: &Vars, mu: &[Rational]) -> Option<ZeroDimParam> {
    let d = q.dim();
    let (m, l) = q.integer_mul_matrix(mu);
    let mut cols: Vec<Vec<BigInt>> = alloc::vec![q.one().iter().map(|x| x.to_integer()).collect()];
    for _ in 0..d {
        let prev = cols.last().unwrap();
        let next = m
            .iter()
            .map(|row| row.iter().zip(prev).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(BigInt::zero(), |acc, (a, b)| acc + a * b))
            .collect();
        cols.push(next);
    }
    let krylov: Vec<Vec<BigInt>> = (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect();
    let mut rhs: Vec<Vec<Rational>> = alloc::vec![cols[d].iter().cloned().map(Rational::from_integer).collect()];
    rhs.extend((0..vars.len()).map(|k| q.var(k)));
    let sol = linalg::solve_square(&krylov, &rhs)?;
    // P_d = sum c_j P_j gives mu^d = sum c_j L^(j-d) mu^j
    let lpow: Vec<Rational> = (0..=d).map(|j| Rational::from_integer(num_traits::pow(l.clone(), j))).collect();
    let mut minpoly: Vec<Rational> = (0..d).map(|j| -(&sol[0][j] * &lpow[j] / &lpow[d])).collect();
    minpoly.push(Rational::one());
    let minpoly = UniPoly::new(minpoly);
    if !minpoly.is_squarefree() {
        return None;
    }
    let (_, v) = minpoly.primitive();
    let dvp = v.derivative();
    let coords = sol[1..].iter().map(|c| UniPoly::new(c.iter().zip(&lpow).map(|(x, p)| x * p).collect()).mul_mod(&dvp, &v)).collect();
    Some(ZeroDimParam::new(vars.clone(), v, coords, mu.to_vec()))
}
