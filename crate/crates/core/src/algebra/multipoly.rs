use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rational::Rational;
use crate::{Error, Result};

/// Ordered list of variable names shared by a family of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn same(&self, other: &Vars) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted in strictly decreasing graded reverse lexicographic
/// order with no zero coefficients, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly { vars: vars.clone(), terms: Vec::new() }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(vars.len()), c));
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The variable `vars[i]`.
    pub fn var(vars: &Vars, i: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), i, 1), Rational::one())
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(vars: &Vars, terms: I) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), vars.len());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(vars, acc)
    }

    fn from_map(vars: &Vars, acc: BTreeMap<Monomial, Rational>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        MultiPoly { vars: vars.clone(), terms }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in decreasing grevlex order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.weighted_degree(weights)).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exps()[i] as u32).max().unwrap_or(0)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == d)
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.binary_search_by(|(t, _)| m.cmp(t)).map(|i| self.terms[i].1.clone()).unwrap_or_else(|_| Rational::zero())
    }

    fn check_vars(&self, other: &MultiPoly) {
        assert!(self.vars.same(&other.vars), "polynomials over different variable lists");
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        if !self.vars.same(&other.vars) {
            return Err(Error::VariableMismatch);
        }
        Ok(self + other)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Partial derivative with respect to `vars[i]`.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        let terms = self.terms.iter().filter(|(m, _)| m.exps()[i] > 0).map(|(m, c)| {
            let e = m.exps()[i];
            let mut m = m.clone();
            m.exps_mut()[i] = e - 1;
            (m, c * Rational::from_integer(e.into()))
        });
        // Lowering the same exponent by one preserves the grevlex order.
        MultiPoly { vars: self.vars.clone(), terms: terms.collect() }
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars() {
            return Err(Error::Arity { expected: self.nvars(), got: point.len() });
        }
        let mut powers: Vec<Vec<Rational>> = point.iter().map(|x| alloc::vec![Rational::one(), x.clone()]).collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &point[i];
                    table.push(next);
                }
                term *= &table[e as usize];
            }
            total += term;
        }
        Ok(total)
    }

    /// Ring homomorphism sending `vars[i]` to `images[i]`; all images must
    /// share one variable list, which becomes the variable list of the result.
    pub fn substitute(&self, images: &[MultiPoly], target: &Vars) -> Result<MultiPoly> {
        if images.len() != self.nvars() {
            return Err(Error::Arity { expected: self.nvars(), got: images.len() });
        }
        if images.iter().any(|p| !p.vars.same(target)) {
            return Err(Error::VariableMismatch);
        }
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| alloc::vec![MultiPoly::one(target), p.clone()]).collect();
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &images[i];
                    table.push(next);
                }
                term = &term * &table[e as usize];
            }
            for (tm, tc) in term.terms {
                *acc.entry(tm).or_insert_with(Rational::zero) += tc;
            }
        }
        Ok(MultiPoly::from_map(target, acc))
    }

    /// Reinterprets the polynomial over another variable list of the same
    /// length (pure renaming).
    pub fn with_vars(&self, vars: &Vars) -> Result<MultiPoly> {
        if vars.len() != self.nvars() {
            return Err(Error::Arity { expected: self.nvars(), got: vars.len() });
        }
        Ok(MultiPoly { vars: vars.clone(), terms: self.terms.clone() })
    }

    /// Applies a permutation of variable positions: variable `i` becomes
    /// variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        MultiPoly::from_terms(&self.vars, self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())))
    }

    /// Returns `(d, p)` with `p = d * self` having coprime integer
    /// coefficients and positive leading coefficient.
    pub fn primitive(&self) -> (Rational, MultiPoly) {
        use num_integer::Integer;
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut den = num_bigint::BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut factor = Rational::new(den, g);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        let p = self.scale(&factor);
        (factor, p)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, other: &MultiPoly) -> MultiPoly {
        self.check_vars(other);
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                core::cmp::Ordering::Greater => {
                    terms.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                core::cmp::Ordering::Less => {
                    terms.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        terms.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        MultiPoly { vars: self.vars.clone(), terms }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, other: &MultiPoly) -> MultiPoly {
        self + &(-other)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, other: &MultiPoly) -> MultiPoly {
        self.check_vars(other);
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    alloc::collections::btree_map::Entry::Occupied(mut e) => *e.get_mut() += prod,
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        MultiPoly::from_map(&self.vars, acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, other: MultiPoly) -> MultiPoly {
                (&self).$m(&other)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, other: &MultiPoly) -> MultiPoly {
                (&self).$m(other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.names()[i].clone()),
                    _ => factors.push(alloc::format!("{}^{}", self.vars.names()[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
