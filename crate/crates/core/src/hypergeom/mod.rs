//! The six parameter layouts, their instantiation at an integer index, and
//! exact truncated coefficients of `pFq`.

mod series;

pub use series::TruncSeries;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, is_nonpositive_integer, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::I,
        Family::II,
        Family::III,
        Family::IV,
        Family::V,
        Family::VI,
    ];

    pub fn uses_mu(self) -> bool {
        !matches!(self, Family::I | Family::II)
    }

    /// Parameter blocks of the family, upper row then lower row.
    pub fn rows(self) -> (Vec<Block>, Vec<Block>) {
        use Block::*;
        use Param::*;
        let plus = |p| Delta { param: p, sign: 1 };
        let minus = |p| Delta { param: p, sign: -1 };
        match self {
            Family::I => (vec![Extra], vec![plus(Lambda), Extra]),
            Family::II => (vec![minus(Lambda), Extra], vec![Extra]),
            Family::III => (vec![plus(Mu), Extra], vec![plus(Lambda), Extra]),
            Family::IV => (vec![minus(Lambda), Extra], vec![minus(Mu), Extra]),
            Family::V => (vec![minus(Lambda), plus(Mu), Extra], vec![Extra]),
            Family::VI => (vec![Extra], vec![plus(Lambda), minus(Mu), Extra]),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::I => "I",
            Family::II => "II",
            Family::III => "III",
            Family::IV => "IV",
            Family::V => "V",
            Family::VI => "VI",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "I" => Family::I,
            "II" => Family::II,
            "III" => Family::III,
            "IV" => Family::IV,
            "V" => Family::V,
            "VI" => Family::VI,
            other => return Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Param {
    Lambda,
    Mu,
}

/// One entry of a parameter row.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Block {
    /// `Δ(m; p + n)` for sign `+1`, `Δ(m; 1 - p - n)` for sign `-1`.
    Delta { param: Param, sign: i8 },
    /// The free parameters `(a_p)` or `(b_q)`.
    Extra,
}

/// A member of one of the six families, before fixing `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    family: Family,
    m: u32,
    lambda: Rational,
    mu: Option<Rational>,
    upper: Vec<Rational>,
    lower: Vec<Rational>,
}

impl FamilySpec {
    pub fn new(
        family: Family,
        m: u32,
        lambda: Rational,
        mu: Option<Rational>,
        upper: Vec<Rational>,
        lower: Vec<Rational>,
    ) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSpec("m must be a positive integer".into()));
        }
        match (&mu, family.uses_mu()) {
            (None, true) => {
                return Err(Error::InvalidSpec(format!("family {family} requires mu")));
            }
            (Some(_), false) => {
                return Err(Error::InvalidSpec(format!("family {family} has no mu")));
            }
            _ => {}
        }
        // equal lambda and mu cancel the Delta blocks of III and IV
        if matches!(family, Family::III | Family::IV) && mu.as_ref() == Some(&lambda) {
            return Err(Error::InvalidSpec(
                "lambda and mu must be distinct for families III and IV".into(),
            ));
        }
        Ok(FamilySpec {
            family,
            m,
            lambda,
            mu,
            upper,
            lower,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn mu(&self) -> Option<&Rational> {
        self.mu.as_ref()
    }

    /// The free upper parameters `(a_p)`.
    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    /// The free lower parameters `(b_q)`.
    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    pub fn p(&self) -> usize {
        self.upper.len()
    }

    pub fn q(&self) -> usize {
        self.lower.len()
    }

    fn delta_block(&self, param: Param, sign: i8, n: i64, out: &mut Vec<Rational>) {
        let base = match param {
            Param::Lambda => self.lambda.clone(),
            Param::Mu => self.mu.clone().expect("validated"),
        };
        let x = if sign > 0 {
            base + int(n)
        } else {
            Rational::one() - base - int(n)
        };
        let m = int(self.m as i64);
        for j in 0..self.m {
            out.push((&x + int(j as i64)) / &m);
        }
    }

    /// Concrete parameter lists at index `n`.
    pub fn instantiate(&self, n: i64) -> Result<SeriesInstance> {
        let (up_rows, low_rows) = self.family.rows();
        let expand = |rows: &[Block], extra: &[Rational]| {
            let mut out = Vec::new();
            for b in rows {
                match *b {
                    Block::Delta { param, sign } => self.delta_block(param, sign, n, &mut out),
                    Block::Extra => out.extend_from_slice(extra),
                }
            }
            out
        };
        let upper = expand(&up_rows, &self.upper);
        let lower = expand(&low_rows, &self.lower);
        SeriesInstance::with_index(upper, lower, n)
    }

    /// Truncated `F_n` at order `order`.
    pub fn series(&self, n: i64, order: usize) -> Result<TruncSeries> {
        Ok(self.instantiate(n)?.coeff_stream(order))
    }

    /// Whether `F_n` is defined for every `n` in the range.
    pub fn defined_on(&self, range: std::ops::RangeInclusive<i64>) -> bool {
        range.into_iter().all(|n| self.instantiate(n).is_ok())
    }
}

/// Parameter lists of a concrete `pFq`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesInstance {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
}

impl SeriesInstance {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Result<Self> {
        Self::with_index(upper, lower, 0)
    }

    fn with_index(upper: Vec<Rational>, lower: Vec<Rational>, n: i64) -> Result<Self> {
        if let Some(bad) = lower.iter().find(|b| is_nonpositive_integer(b)) {
            return Err(Error::UndefinedSeries {
                n,
                param: bad.clone(),
            });
        }
        Ok(SeriesInstance { upper, lower })
    }

    pub fn upper_full(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower_full(&self) -> &[Rational] {
        &self.lower
    }

    /// `U_0 .. U_K` from `(k+1)·Π(b_j+k)·U_{k+1} = Π(a_j+k)·U_k`.
    pub fn coeff_stream(&self, order: usize) -> TruncSeries {
        let mut c = Vec::with_capacity(order + 1);
        let mut u = Rational::one();
        c.push(u.clone());
        for k in 0..order {
            if u.is_zero() {
                c.push(Rational::zero());
                continue;
            }
            let kr = int(k as i64);
            let mut num = Rational::one();
            for a in &self.upper {
                num *= a + &kr;
            }
            let mut den = &kr + Rational::one();
            for b in &self.lower {
                den *= b + &kr;
            }
            u = u * num / den;
            c.push(u.clone());
        }
        TruncSeries::new(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{pochhammer, rat};

    fn legendre() -> FamilySpec {
        FamilySpec::new(Family::V, 1, int(1), Some(int(1)), vec![], vec![int(1)]).unwrap()
    }

    /// Termwise product of Pochhammer symbols, independent of the
    /// recurrence used by `coeff_stream`.
    fn pochhammer_oracle(upper: &[Rational], lower: &[Rational], order: usize) -> Vec<Rational> {
        (0..=order as u32)
            .map(|k| {
                let mut num = Rational::one();
                for a in upper {
                    num *= pochhammer(a, k);
                }
                let mut den = pochhammer(&int(1), k);
                for b in lower {
                    den *= pochhammer(b, k);
                }
                num / den
            })
            .collect()
    }

    #[test]
    fn instantiate_examples() {
        let inst = legendre().instantiate(2).unwrap();
        assert_eq!(inst.upper_full(), &[int(-2), int(3)]);
        assert_eq!(inst.lower_full(), &[int(1)]);

        let bessel = FamilySpec::new(Family::I, 2, rat(1, 2), None, vec![], vec![]).unwrap();
        assert_eq!(
            bessel.instantiate(0).unwrap().lower_full(),
            &[rat(1, 4), rat(3, 4)]
        );

        let iii =
            FamilySpec::new(Family::III, 1, int(0), Some(int(2)), vec![], vec![int(1)]).unwrap();
        assert_eq!(
            iii.instantiate(0),
            Err(Error::UndefinedSeries {
                n: 0,
                param: int(0)
            })
        );
        assert!(iii.instantiate(1).is_ok());
    }

    #[test]
    fn spec_validation() {
        assert!(FamilySpec::new(Family::I, 0, int(1), None, vec![], vec![]).is_err());
        assert!(FamilySpec::new(Family::III, 1, int(1), None, vec![], vec![]).is_err());
        assert!(FamilySpec::new(Family::II, 1, int(1), Some(int(2)), vec![], vec![]).is_err());
        assert!(FamilySpec::new(Family::III, 1, int(1), Some(int(1)), vec![], vec![]).is_err());
        assert!(FamilySpec::new(Family::IV, 2, int(1), Some(int(1)), vec![], vec![]).is_err());
        // Legendre sits in family V with lambda = mu
        assert!(FamilySpec::new(Family::V, 1, int(1), Some(int(1)), vec![], vec![]).is_ok());
    }

    #[test]
    fn legendre_coefficients() {
        let l = legendre();
        let f1 = l.series(1, 2).unwrap();
        assert_eq!(f1.coeffs(), &[int(1), int(-2), int(0)]);
        let f2 = l.series(2, 2).unwrap();
        assert_eq!(f2.coeffs(), &[int(1), int(-6), int(6)]);
        for n in 0..4 {
            let inst = l.instantiate(n).unwrap();
            assert_eq!(
                inst.coeff_stream(6).coeffs(),
                pochhammer_oracle(inst.upper_full(), inst.lower_full(), 6).as_slice()
            );
        }
        assert_eq!(l.series(7, 0).unwrap().coeffs(), &[int(1)]);
    }

    #[test]
    fn six_layouts() {
        let a = vec![rat(2, 7)];
        let b = vec![rat(5, 3)];
        let lam = rat(1, 3);
        let mu = rat(7, 5);
        let mk = |f: Family| {
            let mu = f.uses_mu().then(|| mu.clone());
            FamilySpec::new(f, 2, lam.clone(), mu, a.clone(), b.clone()).unwrap()
        };
        let counts: Vec<_> = Family::ALL
            .iter()
            .map(|&f| {
                let i = mk(f).instantiate(3).unwrap();
                (i.upper_full().len(), i.lower_full().len())
            })
            .collect();
        assert_eq!(counts, vec![(1, 3), (3, 1), (3, 3), (3, 3), (5, 1), (1, 5)]);
        // VI lower row: Δ(2; λ+3), Δ(2; 1-μ-3), b
        let vi = mk(Family::VI).instantiate(3).unwrap();
        let x = &lam + int(3);
        let y = int(1) - &mu - int(3);
        assert_eq!(
            vi.lower_full(),
            &[
                &x / int(2),
                (&x + int(1)) / int(2),
                &y / int(2),
                (&y + int(1)) / int(2),
                rat(5, 3)
            ]
        );
    }
}
