//! Exact real-root counting on the fibers of a parametrization and the
//! emptiness decision for one orbit type.

mod habicht;
mod sturm;
mod thom;

use alloc::vec::Vec;

pub use habicht::{pmv, sturm_habicht, SturmHabichtSeq};
pub use sturm::{
    cauchy_index, count_real_roots, isolate_real_roots, rational_roots, refine, sign_at_isolated_root, signed_remainder_sequence,
    signs_at_isolated_roots, tarski_query, Sturm,
};
pub use thom::{derivative_list, sign_determination, signs_at_roots, thom_encode, ThomEncoding};

use crate::algebra::{Rational, UniPoly};
use crate::symmetry::{fiber_polynomials, Partition};
use crate::zerodim::ZeroDimParam;
use crate::{Error, Result};

/// Number of distinct real roots of `rho(theta, u)`, from the signs of the
/// principal subresultant coefficients at the Thom-encoded `theta`.
pub fn fiber_real_root_count(s: &SturmHabichtSeq, theta: &ThomEncoding) -> Result<usize> {
    let at = signs_at_roots(&theta.polynomial, &s.principal_coeffs)?;
    let (_, signs) = at.into_iter().find(|(e, _)| e.signs == theta.signs).ok_or(Error::NotSquarefree)?;
    if signs[0] == 0 {
        // leading coefficient vanishes: the specialization drops degree
        return Err(Error::ZeroPolynomial);
    }
    Ok(pmv(&signs).max(0) as usize)
}

/// A real root of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealRoot {
    Rational(Rational),
    Algebraic(ThomEncoding),
}

/// Real-root counts of every fiber polynomial above one real root of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberCounts {
    pub root: RealRoot,
    pub counts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    /// `true` when no real point of this orbit type exists.
    pub empty: bool,
    pub real_roots: usize,
    pub fibers: Vec<FiberCounts>,
    /// Index into `fibers` of the first root whose fibers are all fully real.
    pub witness: Option<usize>,
}

/// `false` iff some real root of `v` has every fiber polynomial with as many
/// distinct real roots as its degree (a real point exists).
pub fn decide(r: &ZeroDimParam, partition: &Partition) -> Result<bool> {
    Ok(decide_detailed(r, partition, true)?.empty)
}

/// Thom encodings and signs of `qs` at the real roots of the squarefree
/// `v`, read off isolating intervals instead of sign determination.
fn signs_by_isolation(v: &UniPoly, qs: &[UniPoly]) -> Vec<(ThomEncoding, Vec<i8>)> {
    let ivs = isolate_real_roots(v);
    let ders = derivative_list(v);
    let per_q = |q: &UniPoly| signs_at_isolated_roots(q, v, &ivs);
    let der_signs: Vec<Vec<i8>> = ders.iter().map(per_q).collect();
    let q_signs: Vec<Vec<i8>> = qs.iter().map(per_q).collect();
    (0..ivs.len())
        .map(|k| {
            let enc = ThomEncoding { polynomial: v.clone(), root_index: k, signs: der_signs.iter().map(|s| s[k]).collect() };
            (enc, q_signs.iter().map(|s| s[k]).collect())
        })
        .collect()
}

/// As [`decide`], reporting per-root fiber counts. With `fast_path`,
/// rational roots of `v` are handled by direct substitution and classical
/// Sturm counting, and the remaining roots by isolating intervals; without
/// it every root goes through sign determination on Thom encodings.
pub fn decide_detailed(r: &ZeroDimParam, partition: &Partition, fast_path: bool) -> Result<Decision> {
    let v = r.v();
    if v.deg0() == 0 {
        return Ok(Decision { empty: true, real_roots: 0, fibers: Vec::new(), witness: None });
    }
    if !v.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let rhos = fiber_polynomials(r, partition)?;
    let sizes = partition.multiplicities();
    let mut fibers = Vec::new();
    let mut rest = v.clone();
    if fast_path {
        for tau in rational_roots(v) {
            let counts = rhos.iter().map(|rho| count_real_roots(&rho.eval_t(&tau))).collect();
            fibers.push(FiberCounts { root: RealRoot::Rational(tau.clone()), counts });
            rest = rest.exact_div(&UniPoly::new(alloc::vec![-tau, Rational::from_integer(1.into())]));
        }
    }
    if rest.deg0() > 0 && count_real_roots(&rest) > 0 {
        let seqs: Vec<SturmHabichtSeq> = rhos.iter().map(sturm_habicht).collect::<Result<_>>()?;
        let mut all: Vec<UniPoly> = Vec::new();
        for s in &seqs {
            all.extend(s.principal_coeffs.iter().map(|c| c.rem(&rest)));
        }
        let at = if fast_path { signs_by_isolation(&rest, &all) } else { signs_at_roots(&rest, &all)? };
        for (enc, signs) in at {
            let mut counts = Vec::with_capacity(seqs.len());
            let mut offset = 0;
            for s in &seqs {
                let k = s.principal_coeffs.len();
                let part = &signs[offset..offset + k];
                if part[0] == 0 {
                    return Err(Error::ZeroPolynomial);
                }
                counts.push(pmv(part).max(0) as usize);
                offset += k;
            }
            fibers.push(FiberCounts { root: RealRoot::Algebraic(enc), counts });
        }
    }
    let witness = fibers.iter().position(|f| f.counts.iter().zip(&sizes).all(|(c, t)| c == t));
    Ok(Decision { empty: witness.is_none(), real_roots: fibers.len(), fibers, witness })
}
