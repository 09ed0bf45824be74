//! Classical Sturm sequences, Cauchy indices and rational root isolation.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::algebra::intpoly::{self, IntPoly};
use crate::algebra::{Rational, UniPoly};

/// Signed remainder sequence `p, q, -rem(p, q), ...` (each term scaled by a
/// positive constant).
pub fn signed_remainder_sequence(p: &UniPoly, q: &UniPoly) -> Vec<UniPoly> {
    int_sequence(p, q).iter().map(intpoly::to_rational).collect()
}

fn int_sequence(p: &UniPoly, q: &UniPoly) -> Vec<IntPoly> {
    if p.is_zero() {
        return Vec::new();
    }
    let a = intpoly::from_rational(p);
    let q = q.rem(p);
    signed_terms(intpoly::subresultant_prs(&a, &intpoly::from_rational(&q)))
}

fn signed_terms(prs: Vec<(IntPoly, i8)>) -> Vec<IntPoly> {
    prs.into_iter().map(|(p, s)| if s < 0 { p.into_iter().map(|c| -c).collect() } else { p }).collect()
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn var_at_infinity(seq: &[IntPoly], positive: bool) -> usize {
    variations(seq.iter().map(|p| intpoly::sign_at_infinity(p, positive)))
}

fn var_at(seq: &[IntPoly], x: &Rational) -> usize {
    variations(seq.iter().map(|p| intpoly::sign_at(p, x)))
}

/// Cauchy index of `q / p` over the whole real line.
pub fn cauchy_index(q: &UniPoly, p: &UniPoly) -> i64 {
    let seq = int_sequence(p, &q.rem(p));
    var_at_infinity(&seq, false) as i64 - var_at_infinity(&seq, true) as i64
}

fn int_cauchy_index(q: &IntPoly, p: &IntPoly) -> i64 {
    let r = if q.is_empty() { IntPoly::new() } else { intpoly::pos_rem(q, p) };
    let seq = signed_terms(intpoly::subresultant_prs(p, &r));
    var_at_infinity(&seq, false) as i64 - var_at_infinity(&seq, true) as i64
}

/// Tarski query on integer data: `dp` is the derivative of `p`, and `q`
/// may be any positive multiple of the polynomial of interest.
pub(crate) fn int_tarski_query(q: &IntPoly, p: &IntPoly, dp: &IntPoly) -> i64 {
    int_cauchy_index(&intpoly::mul(dp, q), p)
}

/// Tarski query: `sum sign(q(x))` over the distinct real roots `x` of `p`.
pub fn tarski_query(q: &UniPoly, p: &UniPoly) -> i64 {
    cauchy_index(&p.derivative().mul_mod(q, p), p)
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &UniPoly) -> usize {
    if p.is_zero() || p.deg0() == 0 {
        return 0;
    }
    tarski_query(&UniPoly::one(), p) as usize
}

/// Sturm sequence of `p` for repeated interval counting.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(p: &UniPoly) -> Self {
        Sturm { seq: int_sequence(p, &p.derivative()) }
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    pub fn count_in(&self, a: &Rational, b: &Rational) -> usize {
        var_at(&self.seq, a).saturating_sub(var_at(&self.seq, b))
    }

    pub fn count_all(&self) -> usize {
        var_at_infinity(&self.seq, false).saturating_sub(var_at_infinity(&self.seq, true))
    }
}

/// Smallest power of two at least `x > 0`.
fn dyadic_above(x: &Rational) -> Rational {
    let mut b = Rational::from_integer(1.into());
    while &b < x {
        b = &b + &b;
    }
    b
}

/// Disjoint intervals, ascending, each containing exactly one real root of
/// `p`. An interval `(a, b)` with `a == b` is an exact rational root;
/// otherwise the root lies strictly inside and `p(a) p(b) < 0` on the
/// squarefree part.
pub fn isolate_real_roots(p: &UniPoly) -> Vec<(Rational, Rational)> {
    if p.is_zero() || p.deg0() == 0 {
        return Vec::new();
    }
    let sq = p.exact_div(&p.gcd(&p.derivative()));
    let sturm = Sturm::new(&sq);
    let si = intpoly::from_rational(&sq);
    let bound = dyadic_above(&sq.root_bound());
    let mut out = Vec::new();
    let mut stack = alloc::vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count_in(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 && intpoly::sign_at(&si, &b) == 0 {
            out.push((b.clone(), b));
            continue;
        }
        if n == 1 && intpoly::sign_at(&si, &a) != 0 {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / Rational::from_integer(2.into());
        stack.push((mid.clone(), b));
        stack.push((a, mid));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Halves the isolating interval of a squarefree `p` until its width is at
/// most `width`, or until it hits the root exactly.
pub fn refine(p: &UniPoly, interval: &(Rational, Rational), width: &Rational) -> (Rational, Rational) {
    let (mut a, mut b) = interval.clone();
    if a == b {
        return (a, b);
    }
    let pi = intpoly::from_rational(p);
    let sa = intpoly::sign_at(&pi, &a);
    while &(&b - &a) > width {
        let mid = (&a + &b) / Rational::from_integer(2.into());
        let sm = intpoly::sign_at(&pi, &mid);
        if sm == 0 {
            return (mid.clone(), mid);
        }
        if sm == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    (a, b)
}

/// Sign of `q` at the unique root of the squarefree `p` isolated by
/// `interval`, by refinement.
pub fn sign_at_isolated_root(q: &UniPoly, p: &UniPoly, interval: &(Rational, Rational)) -> i8 {
    signs_at_isolated_roots(q, p, core::slice::from_ref(interval))[0]
}

/// Signs of `q` at the roots of the squarefree `p` isolated by `intervals`.
///
/// Zeros come from `gcd(p, q)`; otherwise each interval is halved until
/// `|q(m)|` at its midpoint exceeds the radius times a bound on `|q'|`.
pub fn signs_at_isolated_roots(q: &UniPoly, p: &UniPoly, intervals: &[(Rational, Rational)]) -> Vec<i8> {
    let q = q.rem(p);
    if q.is_zero() {
        return alloc::vec![0; intervals.len()];
    }
    let gi = intpoly::from_rational(&q.gcd(p));
    let pi = intpoly::from_rational(p);
    let qi = intpoly::from_rational(&q);
    let slope: IntPoly = intpoly::derivative(&qi).into_iter().map(|c| c.abs()).collect();
    let two = Rational::from_integer(2.into());
    intervals
        .iter()
        .map(|(a, b)| {
            if a == b {
                return intpoly::sign_at(&qi, a);
            }
            if gi.len() > 1 && intpoly::sign_at(&gi, a) * intpoly::sign_at(&gi, b) < 0 {
                return 0;
            }
            let (mut a, mut b) = (a.clone(), b.clone());
            let sa = intpoly::sign_at(&pi, &a);
            loop {
                let mid = (&a + &b) / &two;
                let radius = (&b - &a) / &two;
                let reach = if a.abs() > b.abs() { a.abs() } else { b.abs() };
                let qm = intpoly::eval(&qi, &mid);
                if qm.abs() > radius * intpoly::eval(&slope, &reach) {
                    return if qm.is_positive() { 1 } else { -1 };
                }
                let sm = intpoly::sign_at(&pi, &mid);
                if sm == 0 {
                    return intpoly::sign_at(&qi, &mid);
                }
                if sm == sa {
                    a = mid;
                } else {
                    b = mid;
                }
            }
        })
        .collect()
}

/// The rational roots of `p`, ascending.
///
/// A rational root of the primitive integer form of `p` has a denominator
/// dividing the leading coefficient `c`, so `c x` is an integer; each
/// isolating interval is shrunk until `c` times it contains at most two
/// integers, which are then tested exactly.
pub fn rational_roots(p: &UniPoly) -> Vec<Rational> {
    if p.is_zero() || p.deg0() == 0 {
        return Vec::new();
    }
    let sq = p.exact_div(&p.gcd(&p.derivative())).normalized();
    let lc = sq.leading_coeff();
    let lc_int = lc.to_integer();
    let width = Rational::new(BigInt::from(1), lc_int.clone());
    let si = intpoly::from_rational(&sq);
    let mut out = Vec::new();
    for iv in isolate_real_roots(&sq) {
        let (a, b) = refine(&sq, &iv, &width);
        if a == b {
            out.push(a);
            continue;
        }
        let lo = (&a * &lc).floor().to_integer();
        let hi = (&b * &lc).ceil().to_integer();
        let mut k = lo;
        while k <= hi {
            let x = Rational::new(k.clone(), lc_int.clone());
            if x > a && x < b && intpoly::sign_at(&si, &x) == 0 {
                out.push(x);
                break;
            }
            k += 1;
        }
    }
    out
}
