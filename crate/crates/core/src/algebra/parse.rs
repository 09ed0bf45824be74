//! Recursive-descent reader for polynomial expressions.
//!
//! Grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ['/' integer] | ident | '(' expr ')' | '-' atom
//! ident  := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! There is no implicit multiplication: `2x` is rejected.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_traits::Zero;

use super::multipoly::{MultiPoly, Vars};
use super::rational::Rational;
use crate::{Error, Result};

pub fn poly_parse(text: &str, vars: &Vars) -> Result<MultiPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, vars };
    p.skip_ws();
    if p.at_end() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        self.skip_ws();
        if matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'(') {
            return Err(self.err("missing operator (implicit multiplication is not allowed)"));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(Error::BadExponent { pos: start });
            }
            let digits = self.digits();
            let e: u32 = digits.parse().map_err(|_| Error::BadExponent { pos: start })?;
            self.skip_ws();
            if matches!(self.peek(), Some(b'/' | b'.')) {
                return Err(Error::BadExponent { pos: start });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().map_err(|_| self.err("bad integer"))?;
                let save = self.pos;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        return Err(self.err("`/` is only allowed inside a rational literal"));
                    }
                    let den: BigInt = self.digits().parse().map_err(|_| self.err("bad integer"))?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    return Ok(MultiPoly::constant(self.vars, Rational::new(num, den)));
                }
                self.pos = save;
                Ok(MultiPoly::constant(self.vars, Rational::from_integer(num)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                match self.vars.index_of(name) {
                    Some(i) => Ok(MultiPoly::var(self.vars, i)),
                    None => Err(Error::UnknownVariable { name: name.to_string(), pos: start }),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio, Monomial};

    fn vars4() -> Vars {
        Vars::new(&["x1", "x2", "x3", "x4"])
    }

    #[test]
    fn quadric() {
        let v = Vars::new(&["x1", "x2"]);
        let p = poly_parse("x1^2 + x2^2 - 1", &v).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coeff(&Monomial::from_exps(&[2, 0])), rat(1));
        assert_eq!(p.coeff(&Monomial::from_exps(&[0, 2])), rat(1));
        assert_eq!(p.constant_term(), rat(-1));
    }

    #[test]
    fn quartic_input() {
        let p = poly_parse("x1^2+x2^2+x3^2+x4^2-6*x1*x2*x3*x4-1", &vars4()).unwrap();
        assert_eq!(p.num_terms(), 6);
        assert_eq!(p.coeff(&Monomial::from_exps(&[1, 1, 1, 1])), rat(-6));
        let pt = [rat(1), rat(1), ratio(1, 2), ratio(1, 2)];
        assert_eq!(p.eval(&pt).unwrap(), rat(0));
    }

    #[test]
    fn cancellation_gives_zero() {
        let v = Vars::new(&["x1", "x2"]);
        assert!(poly_parse("(x1+x2)^2 - x1^2 - 2*x1*x2 - x2^2", &v).unwrap().is_zero());
    }

    #[test]
    fn rational_literals_and_unary_minus() {
        let v = Vars::new(&["x"]);
        let p = poly_parse("-3/4*x^2 + -(x - 1/2)", &v).unwrap();
        assert_eq!(p.eval(&[rat(2)]).unwrap(), ratio(-3 * 4, 4) - rat(2) + ratio(1, 2));
    }

    #[test]
    fn errors() {
        let v = Vars::new(&["x1", "x2"]);
        assert!(matches!(poly_parse("x1 + y", &v), Err(Error::UnknownVariable { pos: 5, .. })));
        assert!(matches!(poly_parse("x1^-2", &v), Err(Error::BadExponent { .. })));
        assert!(matches!(poly_parse("x1^(2)", &v), Err(Error::BadExponent { .. })));
        assert!(matches!(poly_parse("x1^1/2", &v), Err(Error::BadExponent { .. })));
        assert!(matches!(poly_parse("2x1", &v), Err(Error::Syntax { .. })));
        assert!(matches!(poly_parse("x1 +", &v), Err(Error::Syntax { .. })));
        assert!(matches!(poly_parse("(x1", &v), Err(Error::Syntax { .. })));
        assert!(matches!(poly_parse("x1/x2", &v), Err(Error::Syntax { .. })));
        assert!(matches!(poly_parse("", &v), Err(Error::Syntax { .. })));
    }
}
