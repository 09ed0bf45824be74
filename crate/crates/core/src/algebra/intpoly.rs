//! Dense integer polynomials used internally for remainder sequences.
//! Coefficients run from the constant term up; the zero polynomial is the
//! empty vector.

use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, UniPoly};

pub(crate) type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Divides by the positive content; signs are preserved.
pub(crate) fn primitive_part(mut p: IntPoly) -> IntPoly {
    trim(&mut p);
    let mut g = BigInt::zero();
    for c in &p {
        g = g.gcd(c);
        if g.is_one() {
            return p;
        }
    }
    if !g.is_zero() {
        for c in &mut p {
            *c /= &g;
        }
    }
    p
}

/// A positive multiple of `p` with coprime integer coefficients.
pub(crate) fn from_rational(p: &UniPoly) -> IntPoly {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    primitive_part(p.coeffs().iter().map(|c| c.numer() * (&den / c.denom())).collect())
}

/// `(c, a)` with `p = c * a`, `a` primitive with positive leading
/// coefficient.
pub(crate) fn scaled(p: &UniPoly) -> (Rational, IntPoly) {
    let (c, a) = p.primitive();
    (c, a.coeffs().iter().map(|x| x.numer().clone()).collect())
}

/// `c * a mod m` as a rational polynomial.
pub(crate) fn rem_scaled(a: &IntPoly, c: Rational, m: &UniPoly) -> UniPoly {
    let (_, mi) = scaled(m);
    if a.len() < mi.len() {
        return to_rational(a).scale(&c);
    }
    let r = prem(a, &mi);
    let e = a.len() - mi.len() + 1;
    let f = c / Rational::from_integer(num_traits::pow(mi.last().unwrap().clone(), e));
    to_rational(&r).scale(&f)
}

pub(crate) fn to_rational(p: &IntPoly) -> UniPoly {
    UniPoly::new(p.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

/// `lc(b)^(deg a - deg b + 1) * (a mod b)`.
pub(crate) fn prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    trim(&mut r);
    if r.len() <= db {
        return r;
    }
    let mut steps = r.len() - db;
    while r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[k + i] -= &lr * c;
        }
        r.pop();
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb.clone(), steps);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// A positive multiple of the remainder of `a` by `b`, made primitive.
pub(crate) fn pos_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut r = prem(a, b);
    if a.len() >= b.len() && b.last().unwrap().is_negative() && (a.len() - b.len()).is_multiple_of(2) {
        for c in r.iter_mut() {
            *c = -&*c;
        }
    }
    primitive_part(r)
}

fn exact_div(p: IntPoly, d: &BigInt) -> IntPoly {
    if d.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / d).collect()
}

/// Subresultant remainder sequence of `a` and `b` (`deg b < deg a`), each
/// term paired with the sign relating it to the signed Euclidean remainder
/// sequence `a, b, -rem(a, b), ...`.
pub(crate) fn subresultant_prs(a: &IntPoly, b: &IntPoly) -> Vec<(IntPoly, i8)> {
    let mut out: Vec<(IntPoly, i8)> = Vec::new();
    let (mut a, mut b) = (a.clone(), b.clone());
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return out;
    }
    out.push((a.clone(), 1));
    if b.is_empty() {
        return out;
    }
    out.push((b.clone(), 1));
    let minus_one = -BigInt::one();
    let mut d = a.len() - b.len();
    let mut beta = if d % 2 == 0 { minus_one.clone() } else { BigInt::one() };
    let mut psi = minus_one;
    loop {
        let n = out.len();
        let (prev, cur) = (&out[n - 2].0, &out[n - 1].0);
        let lc = cur.last().unwrap().clone();
        let next = exact_div(prem(prev, cur), &beta);
        if next.is_empty() {
            break;
        }
        // S_{i+1} = -sign(beta) sign(lc)^(d+1) sign(S_{i-1}) r_{i+1}
        let lc_sign: i8 = if lc.is_negative() && d % 2 == 0 { -1 } else { 1 };
        let beta_sign: i8 = if beta.is_negative() { -1 } else { 1 };
        let sign = -beta_sign * lc_sign * out[n - 2].1;
        let d_next = cur.len() - next.len();
        let neg_lc = -&lc;
        psi = if d == 0 { psi } else { num_traits::pow(neg_lc.clone(), d) / num_traits::pow(psi, d - 1) };
        beta = neg_lc * num_traits::pow(psi.clone(), d_next);
        d = d_next;
        out.push((next, sign));
    }
    out
}

pub(crate) fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return IntPoly::new();
    }
    let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub(crate) fn sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (c, y) in out.iter_mut().zip(b) {
        *c -= y;
    }
    trim(&mut out);
    out
}

/// `a / b` when `b` divides `a` exactly in `Z[x]`.
pub(crate) fn div_exact(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut r = a.clone();
    trim(&mut r);
    if r.is_empty() {
        return r;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    if db == 0 {
        return exact_div(r, lb);
    }
    let mut q = alloc::vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = &r[k + db] / lb;
        if !c.is_zero() {
            for (i, y) in b.iter().enumerate() {
                r[k + i] -= &c * y;
            }
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()), "inexact division");
    q
}

pub(crate) fn derivative(p: &IntPoly) -> IntPoly {
    p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

/// A positive multiple of `a * b mod m`, made primitive.
pub(crate) fn mul_mod(a: &IntPoly, b: &IntPoly, m: &IntPoly) -> IntPoly {
    let prod = mul(a, b);
    if prod.is_empty() {
        return prod;
    }
    pos_rem(&prod, m)
}

/// Primitive gcd with positive leading coefficient.
pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (primitive_part(a.clone()), primitive_part(b.clone()));
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return normalize_sign(a);
    }
    if a.len() == b.len() {
        let r = pos_rem(&a, &b);
        a = b;
        b = r;
    }
    let last = subresultant_prs(&a, &b).pop().map(|(p, _)| p).unwrap_or_default();
    normalize_sign(primitive_part(last))
}

fn normalize_sign(mut a: IntPoly) -> IntPoly {
    if a.last().is_some_and(|c| c.is_negative()) {
        for c in &mut a {
            *c = -&*c;
        }
    }
    a
}

fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Sign of `p(x)`, by Horner on the homogenized form.
pub(crate) fn sign_at(p: &IntPoly, x: &Rational) -> i8 {
    let (num, den) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in p.iter().rev() {
        acc = acc * num + c * &dpow;
        dpow *= den;
    }
    // acc = den^(d+1) p(x) / den, and den > 0
    sign_of(&acc)
}

/// `p(x)` as a rational.
pub(crate) fn eval(p: &IntPoly, x: &Rational) -> Rational {
    let (num, den) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in p.iter().rev() {
        acc = acc * num + c * &dpow;
        dpow *= den;
    }
    // acc = den^(d+1) p(x) / den
    Rational::new(acc * den, dpow)
}

pub(crate) fn sign_at_infinity(p: &IntPoly, positive: bool) -> i8 {
    let Some(lc) = p.last() else {
        return 0;
    };
    let s = sign_of(lc);
    if positive || p.len() % 2 == 1 {
        s
    } else {
        -s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn remainders_and_gcds() {
        let a = from_rational(&UniPoly::from_roots(&[rat(1), rat(2), ratio(-1, 3)]));
        let b = from_rational(&UniPoly::from_roots(&[rat(2), ratio(5, 2)]));
        let g = gcd(&a, &b);
        assert_eq!(to_rational(&g), UniPoly::from_ints(&[-2, 1]));
        let r = pos_rem(&a, &b);
        let exact = UniPoly::from_roots(&[rat(1), rat(2), ratio(-1, 3)]).rem(&UniPoly::from_roots(&[rat(2), ratio(5, 2)]));
        // positive multiple of the rational remainder
        let ratio_lc = exact.leading_coeff() / Rational::from_integer(r.last().unwrap().clone());
        assert!(ratio_lc > rat(0));
        assert_eq!(to_rational(&r).scale(&ratio_lc), exact);
        let seq = subresultant_prs(&a, &derivative(&a));
        let mut want = alloc::vec![UniPoly::from_roots(&[rat(1), rat(2), ratio(-1, 3)])];
        want.push(want[0].derivative());
        while let Some(r) = Some(want[want.len() - 2].rem(&want[want.len() - 1])).filter(|r| !r.is_zero()) {
            want.push(-&r);
        }
        assert_eq!(seq.len(), want.len());
        for ((p, s), w) in seq.iter().zip(&want) {
            let q = to_rational(p);
            let c = w.leading_coeff() / q.leading_coeff();
            assert_eq!(q.scale(&c), *w);
            assert_eq!(c > rat(0), *s > 0);
        }
        for x in [rat(-3), ratio(1, 7), rat(2), ratio(-1, 3)] {
            let p = UniPoly::from_roots(&[rat(1), rat(2), ratio(-1, 3)]);
            assert_eq!(sign_at(&a, &x), p.sign_at(&x));
        }
    }
}
