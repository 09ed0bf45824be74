use core::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector. Ordered by graded reverse lexicographic order, which is
/// the canonical term order of [`MultiPoly`](super::MultiPoly).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn var(nvars: usize, i: usize, e: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exps_mut(&mut self) -> &mut [u16] {
        &mut self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial { exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Index of the variable if this is a pure power `x_i^e` with `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut out = Self::one(self.nvars());
        for (i, &e) in self.exps.iter().enumerate() {
            out.exps[perm[i]] = e;
        }
        out
    }

    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| revlex_tail(&self.exps, &other.exps))
    }

    /// Weighted degree first, ties broken by reverse lexicographic order.
    pub fn weighted_grevlex_cmp(&self, other: &Monomial, weights: &[u32]) -> Ordering {
        self.weighted_degree(weights).cmp(&other.weighted_degree(weights)).then_with(|| revlex_tail(&self.exps, &other.exps))
    }

    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.iter().cmp(other.exps.iter())
    }
}

fn revlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
