use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::rational::Rational;
use super::unipoly::UniPoly;

/// Element of `Q[t][u]`: a polynomial in `u` whose coefficients are
/// polynomials in `t`. `coeffs[i]` multiplies `u^i`; the last entry is
/// nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    /// Lifts a polynomial in `u` with constant coefficients.
    pub fn from_u_poly(p: &UniPoly) -> Self {
        Self::new(p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> UniPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_u(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_t(&self) -> usize {
        self.coeffs.iter().map(|c| c.deg0()).max().unwrap_or(0)
    }

    /// Leading coefficient in `u`, a polynomial in `t`.
    pub fn leading_coeff(&self) -> UniPoly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn derivative_u(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.scale(&Rational::from_integer(BigInt::from(i)))).collect())
    }

    /// Specializes `t` to a rational value, giving a polynomial in `u`.
    pub fn eval_t(&self, t: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.eval(t)).collect())
    }

    /// Reduces every coefficient modulo `v(t)`.
    pub fn rem_t(&self, v: &UniPoly) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.rem(v)).collect())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*u", c)?,
                _ => write!(f, "({})*u^{}", c, i)?,
            }
        }
        Ok(())
    }
}
