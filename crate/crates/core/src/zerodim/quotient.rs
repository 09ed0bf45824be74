use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::groebner::Groebner;
use crate::algebra::linalg::QMatrix;
use crate::algebra::{Monomial, Rational};

/// The finite-dimensional algebra `Q[x]/I` on its monomial basis.
///
/// Elements are coordinate vectors on `basis`; `basis[0]` is `1`.
#[derive(Clone, Debug)]
pub struct Quotient {
    basis: Vec<Monomial>,
    /// `mult[k][r][c]` is the coefficient of `basis[r]` in `x_k * basis[c]`.
    mult: Vec<QMatrix>,
}

impl Quotient {
    pub fn new(gb: &Groebner) -> Option<Self> {
        let basis = gb.staircase()?;
        let d = basis.len();
        let index: BTreeMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let n = gb.vars().len();
        let mut mult = Vec::with_capacity(n);
        for k in 0..n {
            let xk = Monomial::var(n, k, 1);
            let mut m = alloc::vec![alloc::vec![Rational::zero(); d]; d];
            for (c, b) in basis.iter().enumerate() {
                let prod = b.mul(&xk);
                if let Some(&r) = index.get(&prod) {
                    m[r][c] = Rational::one();
                    continue;
                }
                for (tm, tc) in gb.normal_form_terms(alloc::vec![(prod, Rational::one())]) {
                    m[index[&tm]][c] = tc;
                }
            }
            mult.push(m);
        }
        Some(Quotient { basis, mult })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn one(&self) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::zero(); self.dim()];
        if !v.is_empty() {
            v[0] = Rational::one();
        }
        v
    }

    /// `x_k * f`.
    pub fn mul_var(&self, k: usize, f: &[Rational]) -> Vec<Rational> {
        crate::algebra::linalg::mat_vec(&self.mult[k], f)
    }

    /// `(sum_k mu_k x_k) * f`.
    pub fn mul_linear(&self, mu: &[Rational], f: &[Rational]) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); self.dim()];
        for (k, c) in mu.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.mul_var(k, f)) {
                *o += c * x;
            }
        }
        out
    }

    /// `(L * M, L)` where `M` is the matrix of multiplication by
    /// `sum_k mu_k x_k` and `L` clears its denominators.
    pub fn integer_mul_matrix(&self, mu: &[Rational]) -> (Vec<Vec<BigInt>>, BigInt) {
        let d = self.dim();
        let mut m = alloc::vec![alloc::vec![Rational::zero(); d]; d];
        for (k, c) in mu.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (row, src) in m.iter_mut().zip(&self.mult[k]) {
                for (x, y) in row.iter_mut().zip(src) {
                    if !y.is_zero() {
                        *x += c * y;
                    }
                }
            }
        }
        let l = m.iter().flatten().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ints = m.iter().map(|row| row.iter().map(|x| x.numer() * (&l / x.denom())).collect()).collect();
        (ints, l)
    }

    /// Coordinate vector of the variable `x_k`.
    pub fn var(&self, k: usize) -> Vec<Rational> {
        self.mul_var(k, &self.one())
    }

    /// Hermite trace matrix `Tr(b_i b_j)`; its rank is the number of distinct
    /// complex points.
    pub fn hermite(&self) -> QMatrix {
        let d = self.dim();
        let n = self.mult.len();
        // table[i][j] = b_i * b_j, built along the staircase
        let mut table: Vec<Vec<Vec<Rational>>> = Vec::with_capacity(d);
        for i in 0..d {
            if i == 0 {
                table.push(
                    (0..d)
                        .map(|j| {
                            let mut e = alloc::vec![Rational::zero(); d];
                            e[j] = Rational::one();
                            e
                        })
                        .collect(),
                );
                continue;
            }
            let b = &self.basis[i];
            let k = (0..n).find(|&k| b.exps()[k] > 0).expect("non-unit monomial");
            let mut prev = b.clone();
            prev.exps_mut()[k] -= 1;
            let p = self.basis.iter().position(|m| *m == prev).expect("staircase is closed under division");
            let row: Vec<Vec<Rational>> = (0..d).map(|j| self.mul_var(k, &table[p][j])).collect();
            table.push(row);
        }
        let traces: Vec<Rational> =
            (0..d).map(|m| table[m].iter().enumerate().fold(Rational::zero(), |acc, (c, col)| acc + &col[c])).collect();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        table[i][j].iter().zip(&traces).filter(|(a, _)| !a.is_zero()).fold(Rational::zero(), |acc, (a, t)| acc + a * t)
                    })
                    .collect()
            })
            .collect()
    }
}
