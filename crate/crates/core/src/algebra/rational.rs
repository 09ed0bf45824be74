use alloc::string::String;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

/// Exact rational number; always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"-3"`, `"7/4"` or `"-7/4"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Syntax { pos: 0, msg: String::from("malformed rational literal") };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Syntax { pos: 0, msg: String::from("zero denominator") });
    }
    Ok(Rational::new(num, den))
}

pub(crate) fn sign(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.numer() > &BigInt::zero() {
        1
    } else {
        -1
    }
}
