//! Exact scalars, dense univariate polynomials and reduced rational
//! functions in the recurrence index `n`.

mod parse;
mod poly;
mod ratfunc;

pub use parse::{parse_expr, parse_poly, ExprValue};
pub use poly::Poly;
pub use ratfunc::RatFunc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational with the usual reduced form (positive
/// denominator, zero stored as `0/1`).
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `p/q`, `p` or `-p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse {
        offset: 0,
        message: format!("not a rational: {s:?}"),
    };
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// `Some(v)` when `r` is an integer that fits in `i64`.
pub fn as_integer(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        num_traits::ToPrimitive::to_i64(r.numer())
    } else {
        None
    }
}

pub fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_positive()
}

/// Rising factorial `(a)_k`.
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut t = a.clone();
    for _ in 0..k {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

/// Minimal field interface shared by point values and symbolic values, so
/// closed-form atoms can be written once and evaluated either way.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    /// `None` when `o` is zero.
    fn checked_div(&self, o: &Self) -> Option<Self>;

    fn from_int(v: i64) -> Self {
        Self::from_rational(&int(v))
    }

    fn add_rat(&self, r: &Rational) -> Self {
        self.plus(&Self::from_rational(r))
    }

    fn scale(&self, r: &Rational) -> Self {
        self.times(&Self::from_rational(r))
    }

    fn negated(&self) -> Self {
        Self::zero_value().minus(self)
    }

    /// Integer power; negative exponents invert (and may fail).
    fn powi(&self, e: i64) -> Option<Self> {
        let mut acc = Self::one_value();
        for _ in 0..e.unsigned_abs() {
            acc = acc.times(self);
        }
        if e < 0 {
            Self::one_value().checked_div(&acc)
        } else {
            Some(acc)
        }
    }

    /// `(self)_k` as a product of `k` consecutive factors.
    fn rising(&self, k: u32) -> Self {
        let mut acc = Self::one_value();
        for j in 0..k {
            acc = acc.times(&self.plus(&Self::from_int(j as i64)));
        }
        acc
    }
}

impl Field for Rational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn checked_div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            None
        } else {
            Some(self / o)
        }
    }
}

impl Field for RatFunc {
    fn zero_value() -> Self {
        RatFunc::zero()
    }
    fn one_value() -> Self {
        RatFunc::one()
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunc::constant(r.clone())
    }
    fn is_zero_value(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn checked_div(&self, o: &Self) -> Option<Self> {
        RatFunc::checked_div(self, o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("5/2").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational(" 4/-6 ").unwrap(), rat(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(
            parse_rational_list("1,2,5/2").unwrap(),
            vec![int(1), int(2), rat(5, 2)]
        );
        assert!(parse_rational_list("").unwrap().is_empty());
    }

    #[test]
    fn pochhammer_small() {
        assert_eq!(pochhammer(&int(-2), 3), int(0));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&int(7), 0), int(1));
    }

    #[test]
    fn nonpositive_integers() {
        assert!(is_nonpositive_integer(&int(0)));
        assert!(is_nonpositive_integer(&int(-4)));
        assert!(!is_nonpositive_integer(&rat(-1, 2)));
        assert!(!is_nonpositive_integer(&int(1)));
    }
}
