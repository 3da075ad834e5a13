//! Linear recurrence operators `Σ c_j(n) S^j` with rational-function
//! coefficients, multiplied with the commutation rule `S·a(n) = a(n+1)·S`.

mod euclid;
mod text;

pub use euclid::Lclm;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactnum::{RatFunc, Rational};
use crate::hypergeom::TruncSeries;

/// Element of `Q(n)<S>`. Only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OreOperator {
    coeffs: BTreeMap<usize, RatFunc>,
}

/// Result of applying an operator to a sequence at one index.
#[derive(Clone, PartialEq, Debug)]
pub enum Applied {
    Value(TruncSeries),
    /// The coefficient of `S^power` has a pole at the requested index.
    Pole {
        power: usize,
    },
}

impl OreOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeff(RatFunc::one())
    }

    pub fn from_coeff(c: RatFunc) -> Self {
        Self::term(c, 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeff(RatFunc::constant(c))
    }

    /// `c · S^power`.
    pub fn term(c: RatFunc, power: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(power, c);
        }
        OreOperator { coeffs }
    }

    /// `S^power`.
    pub fn shift(power: usize) -> Self {
        Self::term(RatFunc::one(), power)
    }

    /// Sums terms, merging equal powers and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (usize, RatFunc)>>(terms: I) -> Self {
        let mut coeffs: BTreeMap<usize, RatFunc> = BTreeMap::new();
        for (j, c) in terms {
            if c.is_zero() {
                continue;
            }
            let merged = match coeffs.remove(&j) {
                Some(prev) => &prev + &c,
                None => c,
            };
            if !merged.is_zero() {
                coeffs.insert(j, merged);
            }
        }
        OreOperator { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero operator.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading(&self) -> Option<&RatFunc> {
        self.coeffs.values().next_back()
    }

    pub fn coeff(&self, power: usize) -> RatFunc {
        self.coeffs
            .get(&power)
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    /// Nonzero terms in increasing power.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &RatFunc)> {
        self.coeffs.iter().map(|(j, c)| (*j, c))
    }

    /// `c · self`.
    pub fn left_scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        OreOperator {
            coeffs: self.coeffs.iter().map(|(j, a)| (*j, c * a)).collect(),
        }
    }

    /// Noncommutative product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                terms.push((i + j, a * &b.shift(*i as i64)));
            }
        }
        Self::from_terms(terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.compose(self))
    }

    /// Product of factors written left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a OreOperator>>(factors: I) -> Self {
        factors
            .into_iter()
            .fold(Self::one(), |acc, f| acc.compose(f))
    }

    /// Left-multiplies by the inverse leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::ZeroOperator)?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        Ok(self.left_scale(&lc.inv().expect("stored coefficients are nonzero")))
    }

    /// Coefficients evaluated at `n0`, or the first power with a pole.
    pub fn eval_coeffs(&self, n0: i64) -> std::result::Result<Vec<(usize, Rational)>, usize> {
        self.coeffs
            .iter()
            .map(|(j, c)| c.eval_int(n0).map(|v| (*j, v)).ok_or(*j))
            .collect()
    }

    /// `(L·u)_{n0} = Σ c_j(n0) u_{n0+j}` on a sequence of truncated series.
    pub fn apply<F>(&self, seq: F, n0: i64) -> Result<Applied>
    where
        F: Fn(i64) -> Result<TruncSeries>,
    {
        let vals = match self.eval_coeffs(n0) {
            Ok(v) => v,
            Err(power) => return Ok(Applied::Pole { power }),
        };
        let mut acc: Option<TruncSeries> = None;
        let mut order: Option<i64> = None;
        for (j, c) in vals {
            let s = seq(n0 + j as i64)?;
            match order {
                Some(o) if o != s.order() => return Err(Error::OrderMismatch(o, s.order())),
                _ => order = Some(s.order()),
            }
            let term = s.scale(&c);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
        }
        match acc {
            Some(a) => Ok(Applied::Value(a)),
            // zero operator: order taken from the sequence itself
            None => Ok(Applied::Value(TruncSeries::zero(seq(n0)?.order()))),
        }
    }

    /// The same operator with `S^power`'s coefficient increased by `delta`;
    /// used for fault injection.
    pub fn perturbed(&self, power: usize, delta: &Rational) -> Self {
        let mut terms: Vec<_> = self.terms().map(|(j, c)| (j, c.clone())).collect();
        terms.push((power, RatFunc::constant(delta.clone())));
        Self::from_terms(terms)
    }
}

impl Add for &OreOperator {
    type Output = OreOperator;
    fn add(self, o: &OreOperator) -> OreOperator {
        OreOperator::from_terms(self.terms().chain(o.terms()).map(|(j, c)| (j, c.clone())))
    }
}

impl Sub for &OreOperator {
    type Output = OreOperator;
    fn sub(self, o: &OreOperator) -> OreOperator {
        self + &(-o)
    }
}

impl Neg for &OreOperator {
    type Output = OreOperator;
    fn neg(self) -> OreOperator {
        OreOperator {
            coeffs: self.coeffs.iter().map(|(j, c)| (*j, -c)).collect(),
        }
    }
}

impl Mul for &OreOperator {
    type Output = OreOperator;
    fn mul(self, o: &OreOperator) -> OreOperator {
        self.compose(o)
    }
}

impl Add for OreOperator {
    type Output = OreOperator;
    fn add(self, o: OreOperator) -> OreOperator {
        &self + &o
    }
}

impl Sub for OreOperator {
    type Output = OreOperator;
    fn sub(self, o: OreOperator) -> OreOperator {
        &self - &o
    }
}

impl Mul for OreOperator {
    type Output = OreOperator;
    fn mul(self, o: OreOperator) -> OreOperator {
        self.compose(&o)
    }
}

impl Neg for OreOperator {
    type Output = OreOperator;
    fn neg(self) -> OreOperator {
        -&self
    }
}
