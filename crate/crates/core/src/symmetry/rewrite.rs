use alloc::vec::Vec;

use num_traits::One;

use super::blocks::BlockVars;
use super::partition::Partition;
use crate::algebra::{subsets, Monomial, MultiPoly, Rational, Vars};
use crate::{Error, Result};

/// Elementary symmetric polynomials `E_{j,i}` of each block, as polynomials
/// over the z-variables, in flat `(j, i)` order.
pub fn elementary_in_z(bv: &BlockVars) -> Vec<MultiPoly> {
    let mut out = Vec::with_capacity(bv.len());
    for b in 0..bv.partition().num_blocks() {
        let range = bv.block_range(b);
        let t = range.len();
        for j in 1..=t {
            let terms = subsets(t, j).into_iter().map(|sub| {
                let mut m = Monomial::one(bv.len());
                for k in sub {
                    m.exps_mut()[range.start + k] = 1;
                }
                (m, Rational::one())
            });
            out.push(MultiPoly::from_terms(bv.z(), terms));
        }
    }
    out
}

/// Power sums `P_{j,i}` of each block over the z-variables, flat order.
pub fn power_sums_in_z(bv: &BlockVars) -> Vec<MultiPoly> {
    let mut out = Vec::with_capacity(bv.len());
    for b in 0..bv.partition().num_blocks() {
        let range = bv.block_range(b);
        for j in 1..=range.len() {
            let terms = range.clone().map(|r| (Monomial::var(bv.len(), r, j as u16), Rational::one()));
            out.push(MultiPoly::from_terms(bv.z(), terms));
        }
    }
    out
}

/// Rewrites an invariant `g` over the z-variables as a polynomial in the
/// e-variables (the unique `zeta_g` with `zeta_g(E) = g`).
///
/// Classical reduction: the lex-leading term `c z^a` of an invariant has
/// exponents non-increasing inside every block, and equals the leading term
/// of `c prod E_{j,i}^{a_j - a_{j+1}}`. Subtracting strictly lowers the
/// leading monomial, so the loop ends; a leading term with increasing
/// exponents proves `g` is not invariant.
pub fn to_elementary(g: &MultiPoly, partition: &Partition) -> Result<MultiPoly> {
    let bv = BlockVars::new(partition);
    if g.nvars() != bv.len() {
        return Err(Error::Arity { expected: bv.len(), got: g.nvars() });
    }
    let g = g.with_vars(bv.z())?;
    let elem = elementary_in_z(&bv);
    let mut powers: Vec<Vec<MultiPoly>> = elem.iter().map(|e| alloc::vec![MultiPoly::one(bv.z()), e.clone()]).collect();
    let mut rest = g;
    let mut out: Vec<(Monomial, Rational)> = Vec::new();
    while !rest.is_zero() {
        let (lead, c) = rest.terms().iter().max_by(|a, b| a.0.lex_cmp(&b.0)).cloned().expect("nonzero polynomial has terms");
        let a = lead.exps();
        let mut e_exps = alloc::vec![0u16; bv.len()];
        for b in 0..partition.num_blocks() {
            let range = bv.block_range(b);
            for r in range.clone() {
                let next = if r + 1 < range.end { a[r + 1] } else { 0 };
                if a[r] < next {
                    return Err(Error::NotInvariant);
                }
                e_exps[r] = a[r] - next;
            }
        }
        let mut prod = MultiPoly::constant(bv.z(), c.clone());
        for (r, &d) in e_exps.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let table = &mut powers[r];
            while table.len() <= d as usize {
                let next = table.last().unwrap() * &elem[r];
                table.push(next);
            }
            prod = &prod * &table[d as usize];
        }
        rest = &rest - &prod;
        out.push((Monomial::from_exps(&e_exps), c));
    }
    Ok(MultiPoly::from_terms(bv.e(), out))
}

/// The unique `gamma_g` over the p-variables with `gamma_g(P) = g`.
pub fn to_power_sums(g: &MultiPoly, partition: &Partition) -> Result<MultiPoly> {
    let bv = BlockVars::new(partition);
    let zeta = to_elementary(g, partition)?;
    zeta.substitute(&elementary_in_power_sums(&bv), bv.p())
}

/// `e_{j,i}` expressed over the p-variables by Newton's identities
/// `j e_j = sum_{m=1}^{j} (-1)^{m-1} e_{j-m} p_m`.
pub fn elementary_in_power_sums(bv: &BlockVars) -> Vec<MultiPoly> {
    let mut out = Vec::with_capacity(bv.len());
    for b in 0..bv.partition().num_blocks() {
        let range = bv.block_range(b);
        let mut e: Vec<MultiPoly> = alloc::vec![MultiPoly::one(bv.p())];
        for j in 1..=range.len() {
            let mut acc = MultiPoly::zero(bv.p());
            for m in 1..=j {
                let pm = MultiPoly::var(bv.p(), range.start + m - 1);
                let term = &e[j - m] * &pm;
                acc = if m % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            e.push(acc.scale(&Rational::new(1.into(), (j as i64).into())));
        }
        out.extend(e.into_iter().skip(1));
    }
    out
}

/// `P_j(z_1..z_t)` written in `e1..et` (with `e_m = 0` for `m > t`).
pub fn power_sum_in_elementary(j: usize, t: usize) -> MultiPoly {
    let names: Vec<_> = (1..=t).map(|m| alloc::format!("e{}", m)).collect();
    let vars = Vars::new(&names);
    let idx: Vec<usize> = (0..t).collect();
    power_sums_over(j, &vars, &idx).pop().expect("j >= 1")
}

/// `P_1..P_jmax` of one block, over `vars`, where `idx[m-1]` is the position
/// of `e_m` in `vars`.
pub(crate) fn power_sums_over(jmax: usize, vars: &Vars, idx: &[usize]) -> Vec<MultiPoly> {
    let t = idx.len();
    let e = |m: usize| MultiPoly::var(vars, idx[m - 1]);
    let mut p: Vec<MultiPoly> = Vec::with_capacity(jmax);
    for j in 1..=jmax {
        let mut acc = MultiPoly::zero(vars);
        for m in 1..=(j - 1).min(t) {
            let term = &e(m) * &p[j - m - 1];
            acc = if m % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        if j <= t {
            let sign = if j % 2 == 1 { 1i64 } else { -1 };
            acc = &acc + &e(j).scale(&Rational::from_integer((sign * j as i64).into()));
        }
        p.push(acc);
    }
    p
}
