//! Right Euclidean division and the derived GCRD / LCLM.

use super::OreOperator;
use crate::error::{Error, Result};
use crate::exactnum::RatFunc;

/// A least common left multiple together with its left cofactors:
/// `lclm = left · a = right · b` for the two inputs `a`, `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Lclm {
    pub lclm: OreOperator,
    pub left: OreOperator,
    pub right: OreOperator,
}

impl OreOperator {
    /// `self = q · divisor + r` with `deg r < deg divisor`.
    pub fn rdivmod(&self, divisor: &OreOperator) -> Result<(OreOperator, OreOperator)> {
        let dm = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lc = divisor.leading().expect("nonzero divisor").clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(dr) = rem.degree() {
            if dr < dm {
                break;
            }
            let d = dr - dm;
            let c = rem.leading().expect("nonzero") / &lc.shift(d as i64);
            let t = OreOperator::term(c.clone(), d);
            rem = &rem - &(&t * divisor);
            debug_assert!(rem.degree().is_none_or(|e| e < dr));
            quot.push((d, c));
        }
        Ok((OreOperator::from_terms(quot), rem))
    }

    /// Remainder of the right division.
    pub fn rrem(&self, divisor: &OreOperator) -> Result<OreOperator> {
        Ok(self.rdivmod(divisor)?.1)
    }

    /// Monic greatest common right divisor.
    pub fn gcrd(a: &OreOperator, b: &OreOperator) -> Result<OreOperator> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroOperator);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r = r0.rrem(&r1)?;
            r0 = r1;
            r1 = r;
        }
        r0.monic()
    }

    /// Monic least common left multiple, by the extended Euclidean algorithm.
    pub fn lclm(a: &OreOperator, b: &OreOperator) -> Result<OreOperator> {
        Ok(Self::lclm_with_cofactors(a, b)?.lclm)
    }

    pub fn lclm_with_cofactors(a: &OreOperator, b: &OreOperator) -> Result<Lclm> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroOperator);
        }
        // invariant: s_i·a + t_i·b = r_i
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (OreOperator::one(), OreOperator::zero());
        let (mut t0, mut t1) = (OreOperator::zero(), OreOperator::one());
        while !r1.is_zero() {
            let (q, r) = r0.rdivmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        // s1·a + t1·b = 0
        let multiple = &s1 * a;
        let inv: RatFunc = multiple
            .leading()
            .expect("lclm of nonzero operators is nonzero")
            .inv()
            .expect("nonzero");
        let left = s1.left_scale(&inv);
        let right = (-&t1).left_scale(&inv);
        let lclm = multiple.left_scale(&inv);
        debug_assert_eq!(lclm, &right * b);
        Ok(Lclm { lclm, left, right })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rational};

    fn op(s: &str) -> OreOperator {
        s.parse().unwrap()
    }

    fn const_op(r: Rational) -> OreOperator {
        OreOperator::constant(r)
    }

    #[test]
    fn remainder_matches_closed_form() {
        // p = 1, a_1 = 1, b = 3: remainder (a_1 - b)/(n + b + 1) = -2/(n+4)
        let l = op("(n+2)/(n+1)*S - 1");
        let m = op("S - (n+1)/(n+4)");
        let (q, r) = l.rdivmod(&m).unwrap();
        assert_eq!(r, op("-2/(n+4)"));
        assert_eq!(&(&q * &m) + &r, l);
    }

    #[test]
    fn trivial_divisions() {
        let l = op("n*S^2 + S - 3");
        assert_eq!(
            l.rdivmod(&l).unwrap(),
            (OreOperator::one(), OreOperator::zero())
        );
        let small = op("S + n");
        assert_eq!(
            small.rdivmod(&l).unwrap(),
            (OreOperator::zero(), small.clone())
        );
        assert_eq!(l.rdivmod(&OreOperator::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn gcrd_examples() {
        let l = op("3*n*S - 3");
        assert_eq!(OreOperator::gcrd(&l, &l).unwrap(), l.monic().unwrap());

        let right = op("(n+2)/(n+1)*S - 1");
        let q2 = &op("(n+4)/(n+1)*S - 1") * &right;
        assert_eq!(
            OreOperator::gcrd(&q2, &right).unwrap(),
            op("S - (n+1)/(n+2)")
        );

        // one step leaves the nonzero constant -2
        assert_eq!(
            OreOperator::gcrd(&op("S - 1"), &op("S + 1")).unwrap(),
            OreOperator::one()
        );
    }

    #[test]
    fn lclm_examples() {
        let l = op("2*S - 2*n");
        assert_eq!(OreOperator::lclm(&l, &l).unwrap(), l.monic().unwrap());

        let f1 = op("(n+2)/(n+1)*S - 1");
        let f2 = op("(n+3)/(n+1)*S - 1");
        let q2 = &op("(n+4)/(n+1)*S - 1") * &f1;
        let res = OreOperator::lclm_with_cofactors(&f1, &f2).unwrap();
        assert_eq!(res.lclm, q2.monic().unwrap());
        assert_eq!(&res.left * &f1, res.lclm);
        assert_eq!(&res.right * &f2, res.lclm);
    }

    #[test]
    fn lclm_with_scalar() {
        let l = op("S^2 - n");
        let c = const_op(rat(3, 2));
        assert_eq!(OreOperator::lclm(&l, &c).unwrap(), l.monic().unwrap());
        assert_eq!(
            OreOperator::lclm(&c, &const_op(int(-5))).unwrap(),
            OreOperator::one()
        );
    }
}
