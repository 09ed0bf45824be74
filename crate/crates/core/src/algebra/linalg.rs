//! Dense exact linear algebra over the rationals.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;

pub type QMatrix = Vec<Vec<Rational>>;

/// Reduced row echelon form; returns the reduced matrix and pivot columns.
pub fn rref(a: &[Vec<Rational>]) -> (QMatrix, Vec<usize>) {
    let mut m: QMatrix = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &f * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(a: &[Vec<Rational>]) -> usize {
    rref(a).1.len()
}

/// Some solution of `a x = b`, or `None` if the system is inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = a.first().map_or(0, |r| r.len());
    let aug: QMatrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (m, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = alloc::vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// Solves `a x_j = b_j` for square nonsingular `a` and every right-hand
/// side column `b_j` (`rhs[j]`) by fraction-free Gauss-Jordan elimination.
/// `None` if `a` is singular.
pub fn solve_square(a: &[Vec<BigInt>], rhs: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let d = a.len();
    let k = rhs.len();
    // integer augmented rows, each scaled by its denominator lcm
    let mut m: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            let den = rhs.iter().fold(BigInt::one(), |l, b| l.lcm(b[i].denom()));
            let mut row: Vec<BigInt> = a[i].iter().map(|x| x * &den).collect();
            row.extend(rhs.iter().map(|b| b[i].numer() * (&den / b[i].denom())));
            row
        })
        .collect();
    let mut prev = BigInt::one();
    for c in 0..d {
        let p = (c..d).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let pivot_row = m[c].clone();
        let piv = &pivot_row[c];
        for (i, row) in m.iter_mut().enumerate() {
            if i == c {
                continue;
            }
            let f = core::mem::take(&mut row[c]);
            for (j, (x, y)) in row.iter_mut().zip(&pivot_row).enumerate() {
                if j == c {
                    continue;
                }
                let t = &*x * piv - &f * y;
                let (q, r) = t.div_rem(&prev);
                if !r.is_zero() {
                    return None;
                }
                *x = q;
            }
        }
        prev = piv.clone();
    }
    Some((0..k).map(|j| (0..d).map(|i| Rational::new(m[i][d + j].clone(), m[i][i].clone())).collect()).collect())
}

/// Basis of the right kernel `{x : a x = 0}`.
pub fn kernel(a: &[Vec<Rational>], cols: usize) -> QMatrix {
    let (m, pivots) = rref(a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = alloc::vec![Rational::zero(); cols];
        x[free] = Rational::one();
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = -m[r][free].clone();
        }
        basis.push(x);
    }
    basis
}

pub fn mat_vec(a: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(x).filter(|(r, v)| !r.is_zero() && !v.is_zero()).fold(Rational::zero(), |acc, (r, v)| acc + r * v))
        .collect()
}

/// `a^T x`
pub fn mat_t_vec(a: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut out = alloc::vec![Rational::zero(); cols];
    for (row, xi) in a.iter().zip(x) {
        if xi.is_zero() {
            continue;
        }
        for (o, r) in out.iter_mut().zip(row) {
            if !r.is_zero() {
                *o += r * xi;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn m(rows: &[&[i64]]) -> QMatrix {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_solve_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let x = solve(&a, &[rat(6), rat(12), rat(2)]).unwrap();
        assert_eq!(mat_vec(&a, &x), alloc::vec![rat(6), rat(12), rat(2)]);
        assert!(solve(&a, &[rat(1), rat(1), rat(1)]).is_none());
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&a, &k[0]).iter().all(|x| x.is_zero()));
        assert_eq!(mat_t_vec(&a, &[rat(1), rat(0), rat(1)]), alloc::vec![rat(2), rat(2), rat(4)]);
        let ints = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> { rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect() };
        assert!(solve_square(&ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]), &[]).is_none());
        let b = ints(&[&[0, 2, 3], &[4, 1, -6], &[1, 5, 7]]);
        let rhs = alloc::vec![alloc::vec![rat(1), crate::algebra::ratio(-1, 3), rat(2)], alloc::vec![rat(0), rat(5), rat(0)]];
        let xs = solve_square(&b, &rhs).unwrap();
        let bq: QMatrix = b.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
        for (x, want) in xs.iter().zip(&rhs) {
            assert_eq!(&mat_vec(&bq, x), want);
            assert_eq!(Some(x.clone()), solve(&bq, want));
        }
    }
}
