//! Sign determination at the real roots of a univariate polynomial and
//! Thom encodings of those roots.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Signed;

use super::sturm::{count_real_roots, int_tarski_query};
use crate::algebra::intpoly::{self, IntPoly};
use crate::algebra::linalg;
use crate::algebra::{Rational, UniPoly};
use crate::{Error, Result};

/// A real root of `polynomial`, identified by the signs of the successive
/// derivatives `v', v'', ..., v^(d-1)` at the root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThomEncoding {
    pub polynomial: UniPoly,
    /// Position among the real roots, ascending from 0.
    pub root_index: usize,
    pub signs: Vec<i8>,
}

/// `M1[e][s]`: sign `s` (ordered 0, +, -) raised to the power `e`.
fn m1(e: u8, s: i8) -> i64 {
    match (e, s) {
        (0, _) => 1,
        (_, 0) => 0,
        (1, s) => i64::from(s),
        (_, _) => 1,
    }
}

const SIGNS: [i8; 3] = [0, 1, -1];

/// The sign conditions realized by `qs` on the real roots of the squarefree
/// `p`, each with the number of roots realizing it. Conditions come out in
/// a fixed but unspecified order.
pub fn sign_determination(p: &UniPoly, qs: &[UniPoly]) -> Vec<(Vec<i8>, usize)> {
    let r = count_real_roots(p);
    if r == 0 {
        return Vec::new();
    }
    let pi = intpoly::from_rational(p);
    let dpi = intpoly::derivative(&pi);
    let taq = |q: &IntPoly| int_tarski_query(q, &pi, &dpi);
    let mut conds: Vec<Vec<i8>> = alloc::vec![Vec::new()];
    let mut counts: Vec<usize> = alloc::vec![r];
    // chosen rows: exponent vector, positive multiple of the product mod p,
    // Tarski query
    let one: IntPoly = alloc::vec![1.into()];
    let mut rows: Vec<(Vec<u8>, IntPoly, i64)> = alloc::vec![(Vec::new(), one, r as i64)];
    for q in qs {
        let q = intpoly::from_rational(&q.rem(p));
        let q2 = intpoly::mul_mod(&q, &q, &pi);
        // q vanishes at r - TaQ(q^2) roots; without zeros only two signs occur
        let signs: &[i8] = if taq(&q2) == r as i64 { &SIGNS[1..] } else { &SIGNS };
        let cand_conds: Vec<Vec<i8>> = conds
            .iter()
            .flat_map(|c| {
                signs.iter().map(move |&s| {
                    let mut c = c.clone();
                    c.push(s);
                    c
                })
            })
            .collect();
        let mut cand_rows: Vec<(Vec<u8>, IntPoly, i64)> = Vec::with_capacity(rows.len() * 3);
        for (alpha, prod, t0) in &rows {
            for e in 0..signs.len() as u8 {
                let mut a = alpha.clone();
                a.push(e);
                let (poly, t) = match e {
                    0 => (prod.clone(), *t0),
                    1 => {
                        let pr = intpoly::mul_mod(prod, &q, &pi);
                        let t = taq(&pr);
                        (pr, t)
                    }
                    _ => {
                        let pr = intpoly::mul_mod(prod, &q2, &pi);
                        let t = taq(&pr);
                        (pr, t)
                    }
                };
                cand_rows.push((a, poly, t));
            }
        }
        let entry = |alpha: &[u8], sigma: &[i8]| -> i64 { alpha.iter().zip(sigma).map(|(&e, &s)| m1(e, s)).product() };
        let mat: Vec<Vec<Rational>> =
            cand_rows.iter().map(|(a, _, _)| cand_conds.iter().map(|c| Rational::from_integer(entry(a, c).into())).collect()).collect();
        let rhs: Vec<Rational> = cand_rows.iter().map(|(_, _, t)| Rational::from_integer((*t).into())).collect();
        let sol = linalg::solve(&mat, &rhs).expect("sign determination matrix is invertible");
        let keep: Vec<usize> = (0..cand_conds.len()).filter(|&k| sol[k].is_positive()).collect();
        conds = keep.iter().map(|&k| cand_conds[k].clone()).collect();
        counts = keep.iter().map(|&k| sol[k].to_integer().try_into().expect("small count")).collect();
        // independent rows on the surviving columns
        let mut chosen: Vec<(Vec<u8>, IntPoly, i64)> = Vec::new();
        let mut basis: Vec<Vec<Rational>> = Vec::new();
        for (i, row) in cand_rows.into_iter().enumerate() {
            if chosen.len() == keep.len() {
                break;
            }
            let restricted: Vec<Rational> = keep.iter().map(|&k| mat[i][k].clone()).collect();
            let mut trial = basis.clone();
            trial.push(restricted);
            if linalg::rank(&trial) == trial.len() {
                basis = trial;
                chosen.push(row);
            }
        }
        rows = chosen;
    }
    conds.into_iter().zip(counts).collect()
}

fn thom_cmp(a: &[i8], b: &[i8], lc_sign: i8) -> Ordering {
    let d = a.len();
    for k in (0..d).rev() {
        if a[k] != b[k] {
            let next = if k + 1 < d { a[k + 1] } else { lc_sign };
            return if next > 0 { a[k].cmp(&b[k]) } else { b[k].cmp(&a[k]) };
        }
    }
    Ordering::Equal
}

/// Successive derivatives `v', ..., v^(d-1)`.
pub fn derivative_list(v: &UniPoly) -> Vec<UniPoly> {
    let d = v.deg0();
    let mut out = Vec::with_capacity(d.saturating_sub(1));
    let mut cur = v.derivative();
    for _ in 1..d {
        out.push(cur.clone());
        cur = cur.derivative();
    }
    out
}

/// Thom encodings of the real roots of `v`, ascending.
pub fn thom_encode(v: &UniPoly) -> Result<Vec<ThomEncoding>> {
    if v.is_zero() || !v.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let lc_sign: i8 = if v.leading_coeff().is_positive() { 1 } else { -1 };
    let mut conds: Vec<Vec<i8>> = sign_determination(v, &derivative_list(v)).into_iter().map(|(c, _)| c).collect();
    conds.sort_by(|a, b| thom_cmp(a, b, lc_sign));
    Ok(conds.into_iter().enumerate().map(|(i, signs)| ThomEncoding { polynomial: v.clone(), root_index: i, signs }).collect())
}

/// Signs of each of `qs` at every real root of `v`, keyed by Thom encoding.
pub fn signs_at_roots(v: &UniPoly, qs: &[UniPoly]) -> Result<Vec<(ThomEncoding, Vec<i8>)>> {
    if v.is_zero() || !v.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let lc_sign: i8 = if v.leading_coeff().is_positive() { 1 } else { -1 };
    let ders = derivative_list(v);
    let nd = ders.len();
    let mut all = ders;
    all.extend(qs.iter().cloned());
    let mut conds: Vec<Vec<i8>> = sign_determination(v, &all).into_iter().map(|(c, _)| c).collect();
    conds.sort_by(|a, b| thom_cmp(&a[..nd], &b[..nd], lc_sign));
    Ok(conds
        .into_iter()
        .enumerate()
        .map(|(i, mut c)| {
            let tail = c.split_off(nd);
            (ThomEncoding { polynomial: v.clone(), root_index: i, signs: c }, tail)
        })
        .collect())
}
