use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly;
use super::rational::{sign, Rational};
use crate::{Error, Result};

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upwards. The zero polynomial has no coefficients; every
/// other value has a nonzero last coefficient.
///
/// The variable is implicit (`t` for parametrizations, `u` for fibers).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(alloc::vec![c])
    }

    /// `t`
    pub fn x() -> Self {
        Self::new(alloc::vec![Rational::zero(), Rational::one()])
    }

    /// `c * t^d`
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = alloc::vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| &acc * &Self::new(alloc::vec![-r, Rational::one()]))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![Rational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(BigInt::from(i))).collect())
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign(&self.eval(x))
    }

    /// Sign as the variable tends to `+inf` (`positive = true`) or `-inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = sign(&self.leading_coeff());
                if positive || d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// `self(q(t))`
    pub fn compose(&self, q: &UniPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lc_inv = d.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quo = alloc::vec![Rational::zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quo), Self::new(rem))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.coeffs.len() < d.coeffs.len() {
            return self.clone();
        }
        let (c, a) = intpoly::scaled(self);
        intpoly::rem_scaled(&a, c, d)
    }

    /// Quotient of an exact division; panics in debug builds if inexact.
    pub fn exact_div(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let g = intpoly::gcd(&intpoly::from_rational(self), &intpoly::from_rational(other));
        intpoly::to_rational(&g).monic()
    }

    /// Returns `(c, p)` with `self = c * p`, `p` having coprime integer
    /// coefficients and positive leading coefficient.
    pub fn primitive(&self) -> (Rational, UniPoly) {
        if self.is_zero() {
            return (Rational::one(), Self::zero());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut factor = Rational::new(den, g);
        if self.leading_coeff().is_negative() {
            factor = -factor;
        }
        (factor.recip(), self.scale(&factor))
    }

    /// Primitive integer representative with positive leading coefficient.
    pub fn normalized(&self) -> UniPoly {
        self.primitive().1
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).deg0() == 0
    }

    pub fn mul_mod(&self, other: &UniPoly, modulus: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (ca, a) = intpoly::scaled(self);
        let (cb, b) = intpoly::scaled(other);
        intpoly::rem_scaled(&intpoly::mul(&a, &b), ca * cb, modulus)
    }

    /// Inverse modulo `modulus` if `self` and `modulus` are coprime.
    pub fn inverse_mod(&self, modulus: &UniPoly) -> Option<UniPoly> {
        // extended Euclid: track s with s*self = r (mod modulus)
        let (mut r0, mut r1) = (modulus.clone(), self.rem(modulus));
        let (mut s0, mut s1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.deg0() != 0 || r0.is_zero() {
            return None;
        }
        Some(s0.scale(&r0.leading_coeff().recip()).rem(modulus))
    }

    /// Cauchy bound: every real root lies in `(-bound, bound)`.
    pub fn root_bound(&self) -> Rational {
        let lc = self.leading_coeff().abs();
        let m = self.coeffs[..self.coeffs.len().saturating_sub(1)].iter().map(|c| c.abs() / &lc).fold(Rational::zero(), |a, b| {
            if b > a {
                b
            } else {
                a
            }
        });
        m + Rational::one()
    }
}

/// `p / gcd(p, p')`, normalized to primitive integer coefficients with
/// positive leading coefficient.
pub fn squarefree_part(p: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    Ok(p.exact_div(&g).normalized())
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "t")?
                    } else {
                        write!(f, "t^{}", i)?
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn squarefree_examples() {
        // (t-1)^2 (t+2)
        let p = &(&UniPoly::from_ints(&[-1, 1]) * &UniPoly::from_ints(&[-1, 1])) * &UniPoly::from_ints(&[2, 1]);
        assert_eq!(squarefree_part(&p).unwrap(), UniPoly::from_ints(&[-2, 1, 1]));
        let q = UniPoly::from_ints(&[-27, 60, 62, -360, 200]);
        assert_eq!(squarefree_part(&q).unwrap(), q);
        let q2 = q.scale(&ratio(-3, 7));
        assert_eq!(squarefree_part(&q2).unwrap(), q);
        assert_eq!(squarefree_part(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn division_and_inverse() {
        let a = UniPoly::from_ints(&[1, 2, 3, 4]);
        let b = UniPoly::from_ints(&[-1, 0, 2]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.deg0() < 2);
        let inv = a.inverse_mod(&b).unwrap();
        assert_eq!(inv.mul_mod(&a, &b), UniPoly::one());
        assert!(UniPoly::from_ints(&[-1, 1]).inverse_mod(&UniPoly::from_ints(&[-1, 0, 1])).is_none());
    }

    #[test]
    fn eval_compose_and_display() {
        let p = UniPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(p.eval(&ratio(1, 2)), ratio(-3, 4));
        assert_eq!(p.compose(&UniPoly::from_ints(&[1, 1])), UniPoly::from_ints(&[0, 2, 1]));
        assert_eq!(alloc::format!("{}", UniPoly::from_ints(&[-27, 60, 62, -360, 200])), "200*t^4 - 360*t^3 + 62*t^2 + 60*t - 27");
        assert_eq!(p.sign_at_infinity(false), 1);
        assert_eq!(UniPoly::from_ints(&[0, 0, 0, -2]).sign_at_infinity(false), 1);
        assert!(p.root_bound() > rat(1));
    }
}
