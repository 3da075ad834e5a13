use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Rational};

/// Reduced rational function `num/den` in `n`: `gcd(num, den) = 1` and `den`
/// is monic, so equal functions have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        Self::try_new(num, den).expect("rational function with zero denominator")
    }

    pub fn try_new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading().expect("nonzero").clone();
        if lc.is_one() {
            Some(RatFunc { num, den })
        } else {
            let inv = lc.recip();
            Some(RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            })
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// The symbol `n`.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    /// `n + c`.
    pub fn linear(c: Rational) -> Self {
        Self::from_poly(Poly::linear(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value when the function is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// `None` is the pole flag: the reduced denominator vanishes at `x`.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            // gcd(num, den) = 1 rules out a common root
            debug_assert!(!self.num.eval(x).is_zero());
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn eval_int(&self, n: i64) -> Option<Rational> {
        self.eval(&Rational::from_integer(n.into()))
    }

    /// `f(n + delta)`.
    pub fn shift(&self, delta: i64) -> Self {
        self.shift_by(&Rational::from_integer(delta.into()))
    }

    pub fn shift_by(&self, delta: &Rational) -> Self {
        if delta.is_zero() || self.is_constant() {
            return self.clone();
        }
        // shifting preserves coprimality and leading coefficients
        RatFunc {
            num: self.num.shift(delta),
            den: self.den.shift(delta),
        }
    }

    /// `f(-n)`.
    pub fn reflect(&self) -> Self {
        RatFunc::new(self.num.reflect(), self.den.reflect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn checked_div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        Some(RatFunc::new(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Smallest positive integer scaling that makes both polynomials have
    /// integer coefficients; used by the JSON form.
    pub fn integer_parts(&self) -> (Vec<num_bigint::BigInt>, Vec<num_bigint::BigInt>) {
        use num_integer::Integer;
        let mut l = num_bigint::BigInt::one();
        for c in self.num.coeffs().iter().chain(self.den.coeffs()) {
            l = l.lcm(c.denom());
        }
        let lr = Rational::from_integer(l);
        let conv = |p: &Poly| {
            p.coeffs()
                .iter()
                .map(|c| (c * &lr).to_integer())
                .collect::<Vec<_>>()
        };
        let mut num = conv(&self.num);
        let mut den = conv(&self.den);
        // strip a common integer content
        let mut g = num_bigint::BigInt::zero();
        for c in num.iter().chain(den.iter()) {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            num.iter_mut().for_each(|c| *c /= &g);
            den.iter_mut().for_each(|c| *c /= &g);
        }
        (num, den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| {
            let s = p.to_string();
            if p.term_count() > 1 || (s.contains('/') && !p.is_constant()) {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.is_constant() && self.num.coeff(0).denom().is_one() {
            self.num.to_string()
        } else {
            format!("({})", self.num)
        };
        write!(f, "{}/{}", num, wrap(&self.den))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, o: &RatFunc) -> RatFunc {
        self.checked_div(o)
            .expect("rational function division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<Rational> for RatFunc {
    fn from(r: Rational) -> Self {
        RatFunc::constant(r)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}
