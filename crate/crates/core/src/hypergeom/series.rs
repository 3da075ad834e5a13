use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Poly, Rational};

/// Power series in `x` truncated after `x^K`. The empty series stands for
/// order `-1` (the derivative of an order-0 series).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        TruncSeries { coeffs }
    }

    pub fn zero(order: i64) -> Self {
        TruncSeries {
            coeffs: vec![Rational::zero(); (order + 1).max(0) as usize],
        }
    }

    pub fn order(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: i64) -> Self {
        let len = ((order + 1).max(0) as usize).min(self.coeffs.len());
        TruncSeries {
            coeffs: self.coeffs[..len].to_vec(),
        }
    }

    /// `x·F` at the same order.
    pub fn times_x(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut c = Vec::with_capacity(self.coeffs.len());
        c.push(Rational::zero());
        c.extend_from_slice(&self.coeffs[..self.coeffs.len() - 1]);
        TruncSeries { coeffs: c }
    }

    /// `F'`, one order lower.
    pub fn derivative(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch(self.order(), o.order()));
        }
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&-Rational::one()))
    }

    /// `p(x)·F` truncated to the order of `F`.
    pub fn mul_poly(&self, p: &Poly) -> Self {
        let len = self.coeffs.len();
        let mut c = vec![Rational::zero(); len];
        for (i, pc) in p.coeffs().iter().enumerate().take(len) {
            if pc.is_zero() {
                continue;
            }
            for k in 0..len - i {
                c[i + k] += pc * &self.coeffs[k];
            }
        }
        TruncSeries { coeffs: c }
    }

    /// Coefficients of `F(alpha + beta·x)` to the same order, by binomial
    /// expansion of each `(alpha + beta·x)^k`. Exact when `F` is a
    /// polynomial of degree at most the order (otherwise the tail of `F`
    /// would contribute when `alpha != 0`).
    pub fn affine_compose(&self, alpha: &Rational, beta: &Rational) -> Self {
        let len = self.coeffs.len();
        let mut out = vec![Rational::zero(); len];
        // row holds the coefficients of (alpha + beta x)^k
        let mut row = vec![Rational::one()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                let mut next = vec![Rational::zero(); row.len() + 1];
                for (i, r) in row.iter().enumerate() {
                    next[i] += r * alpha;
                    next[i + 1] += r * beta;
                }
                row = next;
            }
            if c.is_zero() {
                continue;
            }
            for (i, r) in row.iter().enumerate().take(len) {
                out[i] += c * r;
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Index of the first coefficient that differs.
    pub fn first_difference(&self, o: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&o.coeffs)
            .position(|(a, b)| a != b)
            .or_else(|| {
                (self.coeffs.len() != o.coeffs.len()).then(|| self.coeffs.len().min(o.coeffs.len()))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn s(c: &[i64]) -> TruncSeries {
        TruncSeries::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn x_times_and_derivative() {
        let f = s(&[1, -2]);
        assert_eq!(f.times_x(), s(&[0, 1]));
        assert_eq!(f.derivative(), s(&[-2]));
        // x·1 at order 0 is the zero series of order 0
        assert_eq!(s(&[1]).times_x(), s(&[0]));
        assert_eq!(s(&[1, -6, 6]).derivative(), s(&[-6, 12]));
        assert_eq!(s(&[5]).derivative().order(), -1);
    }

    /// Independent expansion: evaluate the composed polynomial at K+1
    /// points and compare with direct evaluation of F at alpha + beta*x.
    fn eval(c: &[Rational], x: &Rational) -> Rational {
        c.iter().rev().fold(Rational::zero(), |acc, v| acc * x + v)
    }

    #[test]
    fn affine_examples() {
        let half = rat(1, 2);
        let mhalf = rat(-1, 2);
        // F_1(y) = 1 - 2y at y = (1-x)/2 gives x
        assert_eq!(s(&[1, -2]).affine_compose(&half, &mhalf), s(&[0, 1]));
        let f = s(&[3, 1, 4, 1, 5]);
        assert_eq!(f.affine_compose(&int(0), &int(1)), f);
        // F_2(y) = 1 - 6y + 6y^2 gives (3x^2 - 1)/2
        assert_eq!(
            s(&[1, -6, 6]).affine_compose(&half, &mhalf),
            TruncSeries::new(vec![rat(-1, 2), int(0), rat(3, 2)])
        );
        let g = f.affine_compose(&rat(2, 3), &rat(-5, 7));
        for x in [int(0), int(1), rat(-3, 2), int(4)] {
            let y = rat(2, 3) + rat(-5, 7) * &x;
            assert_eq!(eval(g.coeffs(), &x), eval(f.coeffs(), &y));
        }
    }

    #[test]
    fn poly_multiplication_truncates() {
        let f = s(&[1, 1, 1]);
        let p = Poly::new(vec![int(0), int(1), int(-1)]); // x - x^2
        assert_eq!(f.mul_poly(&p), s(&[0, 1, 0]));
    }

    #[test]
    fn first_difference_index() {
        assert_eq!(s(&[1, 2, 3]).first_difference(&s(&[1, 2, 4])), Some(2));
        assert_eq!(s(&[1, 2]).first_difference(&s(&[1, 2])), None);
    }
}
