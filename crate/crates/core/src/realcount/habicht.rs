//! Signed subresultants of a polynomial in `u` with coefficients in `Q[t]`
//! and its `u`-derivative.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::algebra::intpoly::{self, IntPoly};
use crate::algebra::{BiPoly, Rational, UniPoly};
use crate::{Error, Result};

/// Signed subresultant sequence of `(rho, d rho / du)`.
///
/// `sequence[k]` and `principal_coeffs[k]` belong to index `j = p - k`
/// where `p = deg_u rho`; `sequence[0] = rho`, `sequence[1] = d rho / du`,
/// and `principal_coeffs[0]` is the leading coefficient of `rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmHabichtSeq {
    pub source: BiPoly,
    pub derivative: BiPoly,
    pub sequence: Vec<BiPoly>,
    pub principal_coeffs: Vec<UniPoly>,
}

impl SturmHabichtSeq {
    pub fn degree(&self) -> usize {
        self.source.degree_u().unwrap_or(0)
    }

    /// Number of distinct real roots of the specialization whose principal
    /// coefficient signs are `signs` (same indexing as `principal_coeffs`).
    pub fn count_from_signs(signs: &[i8]) -> i64 {
        pmv(signs)
    }
}

/// Generalized permanences minus variations of a sign list whose first entry
/// is nonzero.
pub fn pmv(signs: &[i8]) -> i64 {
    let mut total = 0i64;
    let mut last: Option<(usize, i8)> = None;
    for (k, &s) in signs.iter().enumerate() {
        if s == 0 {
            continue;
        }
        if let Some((i, si)) = last {
            let d = k - i;
            if d % 2 == 1 {
                let eps: i64 = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
                total += eps * i64::from(si * s);
            }
        }
        last = Some((k, s));
    }
    total
}

/// Sylvester-Habicht matrix of index `j` over `Z[t]`: rows `u^{q-j-1} P,
/// ..., P, Q, ..., u^{p-j-1} Q`, columns indexed by degree `p+q-j-1` down
/// to `0`.
fn syha(p: &[IntPoly], q: &[IntPoly], j: usize) -> Vec<Vec<IntPoly>> {
    let (dp, dq) = (p.len() - 1, q.len() - 1);
    let cols = dp + dq - j;
    let row_of = |poly: &[IntPoly], shift: usize| -> Vec<IntPoly> {
        (0..cols)
            .map(|c| {
                let deg = cols - 1 - c;
                if deg >= shift {
                    poly.get(deg - shift).cloned().unwrap_or_default()
                } else {
                    IntPoly::new()
                }
            })
            .collect()
    };
    let mut rows = Vec::with_capacity(dp + dq - 2 * j);
    for shift in (0..dq - j).rev() {
        rows.push(row_of(p, shift));
    }
    for shift in 0..dp - j {
        rows.push(row_of(q, shift));
    }
    rows
}

/// Coefficients of the subresultant of index `j`, degree `0..=j` in `u`:
/// the minors on the first `size - 1` columns plus one trailing column,
/// all read off a single fraction-free elimination.
fn sres_coeffs(mut m: Vec<Vec<IntPoly>>, j: usize) -> Vec<IntPoly> {
    let size = m.len();
    let cols = m[0].len();
    let mut negate = false;
    let mut prev: IntPoly = alloc::vec![1.into()];
    for k in 0..size - 1 {
        let Some(p) = (k..size).find(|&i| !m[i][k].is_empty()) else {
            return alloc::vec![IntPoly::new(); j + 1];
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..size {
            for c in k + 1..cols {
                let num = intpoly::sub(&intpoly::mul(&m[i][c], &m[k][k]), &intpoly::mul(&m[i][k], &m[k][c]));
                m[i][c] = intpoly::div_exact(&num, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let last = &m[size - 1];
    (0..=j)
        .map(|deg| {
            let d = last[cols - 1 - deg].clone();
            if negate {
                d.into_iter().map(|c| -c).collect()
            } else {
                d
            }
        })
        .collect()
}

/// Computes the signed subresultant sequence of `rho` and its derivative.
pub fn sturm_habicht(rho: &BiPoly) -> Result<SturmHabichtSeq> {
    let p = rho.degree_u().ok_or(Error::ZeroPolynomial)?;
    if p == 0 {
        return Err(Error::ZeroPolynomial);
    }
    let d = rho.derivative_u();
    let q = p - 1;
    // rho = c * r with r over Z[t]; sres_j scales by c^(p + q - 2j)
    let mut den = BigInt::one();
    for coeff in rho.coeffs() {
        for x in coeff.coeffs() {
            den = den.lcm(x.denom());
        }
    }
    let c = Rational::new(1.into(), den.clone());
    let to_int = |b: &BiPoly| -> Vec<IntPoly> {
        b.coeffs().iter().map(|u| u.coeffs().iter().map(|x| x.numer() * (&den / x.denom())).collect()).collect()
    };
    let (ri, di) = (to_int(rho), to_int(&d));
    let mut sequence = alloc::vec![rho.clone(), d.clone()];
    let mut principal = alloc::vec![rho.leading_coeff(), d.leading_coeff()];
    for j in (0..q).rev() {
        let scale = num_traits::pow(c.clone(), p + q - 2 * j);
        let coeffs: Vec<UniPoly> = sres_coeffs(syha(&ri, &di, j), j).iter().map(|x| intpoly::to_rational(x).scale(&scale)).collect();
        principal.push(coeffs[j].clone());
        sequence.push(BiPoly::new(coeffs));
    }
    Ok(SturmHabichtSeq { source: rho.clone(), derivative: d, sequence, principal_coeffs: principal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio, Rational};
    use crate::realcount::sturm::count_real_roots;

    fn sign(q: &Rational) -> i8 {
        use num_traits::{Signed, Zero};
        if q.is_zero() {
            0
        } else if q.is_positive() {
            1
        } else {
            -1
        }
    }

    fn count_at(s: &SturmHabichtSeq, t: &Rational) -> i64 {
        let signs: Vec<i8> = s.principal_coeffs.iter().map(|c| sign(&c.eval(t))).collect();
        pmv(&signs)
    }

    #[test]
    fn quadratic_discriminant() {
        // u^2 - t
        let rho = BiPoly::new(alloc::vec![UniPoly::from_ints(&[0, -1]), UniPoly::zero(), UniPoly::one()]);
        let s = sturm_habicht(&rho).unwrap();
        assert_eq!(s.principal_coeffs.len(), 3);
        assert_eq!(count_at(&s, &rat(3)), 2);
        assert_eq!(count_at(&s, &rat(0)), 1);
        assert_eq!(count_at(&s, &ratio(-1, 2)), 0);
        // u - q(t)
        let lin = BiPoly::new(alloc::vec![UniPoly::from_ints(&[1, 2, 3]), UniPoly::one()]);
        let s = sturm_habicht(&lin).unwrap();
        for t in -3..3 {
            assert_eq!(count_at(&s, &rat(t)), 1);
        }
        assert!(sturm_habicht(&BiPoly::new(alloc::vec![UniPoly::one()])).is_err());
    }

    #[test]
    fn constant_coefficients_match_sturm() {
        let polys: [&[i64]; 6] = [&[-1, 0, 1], &[1, 0, 1], &[6, -11, 6, -1], &[1, 0, 0, 1], &[-2, 0, 0, 0, 1], &[0, -2, 0, 1, 0, 3]];
        for c in polys {
            let u = UniPoly::from_ints(c);
            let rho = BiPoly::from_u_poly(&u);
            let s = sturm_habicht(&rho).unwrap();
            assert_eq!(count_at(&s, &rat(0)), count_real_roots(&u) as i64, "{:?}", c);
            assert_eq!(s.sequence[0], rho);
            let p = s.degree();
            for (k, e) in s.sequence.iter().enumerate() {
                assert!(e.is_zero() || e.degree_u().unwrap() <= p - k);
            }
        }
        // repeated roots: (u - 1)^2 (u + 1) has two distinct real roots
        let u = UniPoly::from_roots(&[rat(1), rat(1), rat(-1)]);
        let s = sturm_habicht(&BiPoly::from_u_poly(&u)).unwrap();
        assert_eq!(count_at(&s, &rat(0)), 2);
    }

    #[test]
    fn pmv_rule() {
        assert_eq!(pmv(&[1, 1, 1]), 2);
        assert_eq!(pmv(&[1, -1, 1]), -2);
        assert_eq!(pmv(&[1, 0, 1]), 0);
        assert_eq!(pmv(&[1, 0, 0, 1]), -1);
        assert_eq!(pmv(&[1, 1, 0, 0]), 1);
    }
}
