//! Recursive-descent parser for the textual grammar shared by rational
//! functions and operators:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'n' | 'S' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{Poly, RatFunc, Rational};
use crate::error::{Error, Result};

/// Values an expression can evaluate to.
pub trait ExprValue: Sized {
    fn from_integer(v: BigInt) -> Self;
    fn var_n() -> Self;
    fn var_s() -> Result<Self>;
    fn add(self, o: Self) -> Self;
    fn sub(self, o: Self) -> Self;
    fn mul(self, o: Self) -> Self;
    fn div(self, o: Self) -> Result<Self>;
    fn neg(self) -> Self;
    fn pow(self, e: u32) -> Self;
}

impl ExprValue for RatFunc {
    fn from_integer(v: BigInt) -> Self {
        RatFunc::constant(Rational::from_integer(v))
    }
    fn var_n() -> Self {
        RatFunc::var()
    }
    fn var_s() -> Result<Self> {
        Err(Error::Parse {
            offset: 0,
            message: "shift operator S is not allowed in a rational function".into(),
        })
    }
    fn add(self, o: Self) -> Self {
        &self + &o
    }
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
    fn div(self, o: Self) -> Result<Self> {
        self.checked_div(&o).ok_or(Error::Parse {
            offset: 0,
            message: "division by zero".into(),
        })
    }
    fn neg(self) -> Self {
        -&self
    }
    fn pow(self, e: u32) -> Self {
        RatFunc::pow(&self, e)
    }
}

pub fn parse_expr<T: ExprValue>(src: &str) -> Result<T> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let v = p.expr::<T>()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr<T: ExprValue>(&mut self) -> Result<T> {
        let mut acc = self.term::<T>()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<T: ExprValue>(&mut self) -> Result<T> {
        let mut acc = self.unary::<T>()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    acc = acc.div(self.unary()?).map_err(|e| match e {
                        Error::Parse { message, .. } => Error::Parse {
                            offset: at,
                            message,
                        },
                        other => other,
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary<T: ExprValue>(&mut self) -> Result<T> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary::<T>()?.neg());
        }
        self.power()
    }

    fn power<T: ExprValue>(&mut self) -> Result<T> {
        let base = self.atom::<T>()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            let e: u32 = digits
                .parse()
                .map_err(|_| self.err("expected a nonnegative integer exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom<T: ExprValue>(&mut self) -> Result<T> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'n') => {
                self.pos += 1;
                Ok(T::var_n())
            }
            Some(b'S') => {
                let at = self.pos;
                self.pos += 1;
                T::var_s().map_err(|e| match e {
                    Error::Parse { message, .. } => Error::Parse {
                        offset: at,
                        message,
                    },
                    other => other,
                })
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(T::from_integer(d.parse().expect("digits")))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parse a polynomial in `n` (no division by non-constants allowed).
pub fn parse_poly(src: &str) -> Result<Poly> {
    let f: RatFunc = parse_expr(src)?;
    if !f.den().is_one() {
        return Err(Error::Parse {
            offset: 0,
            message: "expected a polynomial".into(),
        });
    }
    Ok(f.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn precedence() {
        let f: RatFunc = parse_expr("1/2*n").unwrap();
        assert_eq!(f, RatFunc::var().scale(&rat(1, 2)));
        let g: RatFunc = parse_expr("-2^2").unwrap();
        assert_eq!(g, RatFunc::constant(int(-4)));
        let h: RatFunc = parse_expr("(n+1)^2 - n^2").unwrap();
        assert_eq!(h.to_string(), "2*n+1");
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_expr::<RatFunc>("n + * 2") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_expr::<RatFunc>("1/(n-n)").is_err());
        assert!(parse_expr::<RatFunc>("S").is_err());
        assert!(parse_expr::<RatFunc>("(n").is_err());
        assert!(parse_poly("1/n").is_err());
        assert_eq!(parse_poly("n^2-1").unwrap().degree(), Some(2));
    }
}
