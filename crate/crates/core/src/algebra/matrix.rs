use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::multipoly::{MultiPoly, Vars};
use crate::{Error, Result};

/// Rectangular matrix of polynomials over one variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Arity { expected: rows * cols, got: entries.len() });
        }
        if let Some(first) = entries.first() {
            if entries.iter().any(|e| e.vars() != first.vars()) {
                return Err(Error::VariableMismatch);
            }
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[MultiPoly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<F: FnMut(&MultiPoly) -> Result<MultiPoly>>(&self, f: F) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(self.rows, self.cols, entries)
    }

    /// Product with a matrix of constants (given row-major, `self.cols x cols`).
    pub fn mul_constant(&self, other: &[Vec<super::Rational>]) -> Result<PolyMatrix> {
        if other.len() != self.cols {
            return Err(Error::Arity { expected: self.cols, got: other.len() });
        }
        let cols = other.first().map_or(0, |r| r.len());
        let vars = self.entries.first().map(|e| e.vars().clone()).unwrap_or_else(|| Vars::new::<&str>(&[]));
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            for c in 0..cols {
                let mut acc = MultiPoly::zero(&vars);
                for (k, orow) in other.iter().enumerate() {
                    acc = &acc + &self.get(r, k).scale(&orow[c]);
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(self.rows, cols, entries)
    }
}

/// Matrix with entry `(i, j) = d polys[i] / d vars[j]`.
pub fn jacobian(polys: &[MultiPoly], vars: &[&str]) -> Result<PolyMatrix> {
    let mut entries = Vec::with_capacity(polys.len() * vars.len());
    for p in polys {
        for name in vars {
            let i = p.vars().index_of(name).ok_or_else(|| Error::UnknownVariable { name: (*name).into(), pos: 0 })?;
            entries.push(p.derivative(i));
        }
    }
    PolyMatrix::new(polys.len(), vars.len(), entries)
}

/// All `k x k` minors. Row subsets are enumerated in lexicographic order in
/// the outer loop, column subsets lexicographically in the inner loop.
pub fn minors_k(m: &PolyMatrix, k: usize) -> Result<Vec<MultiPoly>> {
    if k == 0 || k > m.rows.min(m.cols) {
        return Err(Error::MinorSize { k, rows: m.rows, cols: m.cols });
    }
    let row_sets = subsets(m.rows, k);
    let col_sets = subsets(m.cols, k);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rs in &row_sets {
        let mut memo = BTreeMap::new();
        for cs in &col_sets {
            let mask = cs.iter().fold(0u64, |acc, &c| acc | (1 << c));
            out.push(det_rec(m, rs, 0, mask, &mut memo));
        }
    }
    Ok(out)
}

/// Laplace expansion along the rows `rows[level..]`, restricted to the
/// columns in `mask`; memoized on `(level, mask)`.
fn det_rec(m: &PolyMatrix, rows: &[usize], level: usize, mask: u64, memo: &mut BTreeMap<(usize, u64), MultiPoly>) -> MultiPoly {
    let vars = m.entries[0].vars();
    if level == rows.len() {
        return MultiPoly::one(vars);
    }
    if let Some(p) = memo.get(&(level, mask)) {
        return p.clone();
    }
    let mut acc = MultiPoly::zero(vars);
    let mut sign_pos = true;
    for c in 0..m.cols {
        if mask & (1 << c) == 0 {
            continue;
        }
        let a = m.get(rows[level], c);
        if !a.is_zero() {
            let sub = det_rec(m, rows, level + 1, mask & !(1 << c), memo);
            let term = a * &sub;
            acc = if sign_pos { &acc + &term } else { &acc - &term };
        }
        sign_pos = !sign_pos;
    }
    memo.insert((level, mask), acc.clone());
    acc
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_parse;

    #[test]
    fn jacobian_examples() {
        let v = Vars::new(&["e1_1", "e2_1"]);
        let g = poly_parse("2*e1_1^2 - 6*e2_1^2 - 4*e2_1 - 1", &v).unwrap();
        let j = jacobian(&[g], &["e1_1", "e2_1"]).unwrap();
        assert_eq!(j.get(0, 0), &poly_parse("4*e1_1", &v).unwrap());
        assert_eq!(j.get(0, 1), &poly_parse("-12*e2_1 - 4", &v).unwrap());

        let w = Vars::new(&["x1", "x2"]);
        let j = jacobian(&[poly_parse("x1*x2", &w).unwrap(), poly_parse("x1 + x2", &w).unwrap()], &["x1", "x2"]).unwrap();
        assert_eq!(j.row(0), &[poly_parse("x2", &w).unwrap(), poly_parse("x1", &w).unwrap()]);
        assert_eq!(j.row(1), &[poly_parse("1", &w).unwrap(), poly_parse("1", &w).unwrap()]);
        let c = jacobian(&[poly_parse("7", &w).unwrap()], &["x1", "x2"]).unwrap();
        assert!(c.row(0).iter().all(|e| e.is_zero()));
        assert!(jacobian(&[poly_parse("x1", &w).unwrap()], &["y"]).is_err());
    }

    #[test]
    fn quartic_minor() {
        let v = Vars::new(&["e1_1", "e2_1"]);
        let g = poly_parse("2*e1_1^2 - 6*e2_1^2 - 4*e2_1 - 1", &v).unwrap();
        let phi = poly_parse("5*e1_1^2 - 9*e1_1 - 10*e2_1 - 3", &v).unwrap();
        let j = jacobian(&[g, phi], &["e1_1", "e2_1"]).unwrap();
        let m = minors_k(&j, 2).unwrap();
        assert_eq!(m, alloc::vec![poly_parse("120*e1_1*e2_1 - 108*e2_1 - 36", &v).unwrap()]);
    }

    #[test]
    fn constant_matrix_first_minors() {
        let v = Vars::new(&["x"]);
        let c = |s: &str| poly_parse(s, &v).unwrap();
        let m = PolyMatrix::new(2, 2, alloc::vec![c("1"), c("0"), c("0"), c("1")]).unwrap();
        assert_eq!(minors_k(&m, 1).unwrap(), alloc::vec![c("1"), c("0"), c("0"), c("1")]);
        assert!(minors_k(&m, 3).is_err());
        assert!(minors_k(&m, 0).is_err());
    }

    #[test]
    fn subset_order() {
        assert_eq!(
            subsets(4, 2),
            alloc::vec![alloc::vec![0, 1], alloc::vec![0, 2], alloc::vec![0, 3], alloc::vec![1, 2], alloc::vec![1, 3], alloc::vec![2, 3]]
        );
        assert_eq!(subsets(3, 0), alloc::vec![alloc::vec![]]);
    }
}
