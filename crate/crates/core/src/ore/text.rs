use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use super::OreOperator;
use crate::error::{Error, Result};
use crate::exactnum::{parse_expr, ExprValue, RatFunc, Rational};

fn coeff_is_negative(c: &RatFunc) -> bool {
    c.num().leading().is_some_and(|lc| lc.is_negative())
}

fn render_coeff(c: &RatFunc) -> String {
    let s = c.to_string();
    if c.den().is_one() && c.num().term_count() > 1 {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for OreOperator {
    /// `c_J(n)*S^J + ... + c_0(n)`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.terms().rev() {
            let neg = coeff_is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let shift = match j {
                0 => String::new(),
                1 => "S".to_string(),
                _ => format!("S^{j}"),
            };
            if shift.is_empty() {
                write!(f, "{}", render_coeff(&abs))?;
            } else if abs.is_one() {
                f.write_str(&shift)?;
            } else {
                write!(f, "{}*{}", render_coeff(&abs), shift)?;
            }
        }
        Ok(())
    }
}

impl ExprValue for OreOperator {
    fn from_integer(v: BigInt) -> Self {
        OreOperator::constant(Rational::from_integer(v))
    }
    fn var_n() -> Self {
        OreOperator::from_coeff(RatFunc::var())
    }
    fn var_s() -> Result<Self> {
        Ok(OreOperator::shift(1))
    }
    fn add(self, o: Self) -> Self {
        &self + &o
    }
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
    fn mul(self, o: Self) -> Self {
        self.compose(&o)
    }
    /// Right division by an `S`-free, nonzero operator.
    fn div(self, o: Self) -> Result<Self> {
        let bad = |m: &str| Error::Parse {
            offset: 0,
            message: m.to_string(),
        };
        match o.degree() {
            None => Err(bad("division by zero")),
            Some(0) => {
                let inv = o.coeff(0).inv().expect("nonzero");
                Ok(self.compose(&OreOperator::from_coeff(inv)))
            }
            Some(_) => Err(bad("division by an operator involving S")),
        }
    }
    fn neg(self) -> Self {
        -&self
    }
    fn pow(self, e: u32) -> Self {
        OreOperator::pow(&self, e)
    }
}

impl FromStr for OreOperator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_highest_power_first() {
        let l: OreOperator = "((n+3)*(n+4))/((n+1)*(n+2))*S^2 - (2*n+6)/(n+1)*S + 1"
            .parse()
            .unwrap();
        assert_eq!(
            l.to_string(),
            "(n^2+7*n+12)/(n^2+3*n+2)*S^2 - (2*n+6)/(n+1)*S + 1"
        );
        let m: OreOperator = "-S + n - 2".parse().unwrap();
        assert_eq!(m.to_string(), "-S + (n-2)");
        assert_eq!(OreOperator::zero().to_string(), "0");
    }

    #[test]
    fn text_round_trip() {
        for s in [
            "S - 1",
            "1/(2*n+3)*S + 1/(2*n+3)",
            "-1/2*n*S^3 + (n^2+1)/n",
            "(1/3)/(n+1/2)*S^2 - 7",
        ] {
            let l: OreOperator = s.parse().unwrap();
            let back: OreOperator = l.to_string().parse().unwrap();
            assert_eq!(back, l, "{s} -> {l}");
        }
    }

    #[test]
    fn rejects_division_by_shift() {
        assert!("1/S".parse::<OreOperator>().is_err());
        assert!("S/(n-n)".parse::<OreOperator>().is_err());
    }
}
