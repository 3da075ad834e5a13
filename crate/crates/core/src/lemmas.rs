//! The product `Q_p` of first-order factors: its lclm form, its right
//! remainders and its explicit coefficients.

use crate::error::{Error, Result};
use crate::exactnum::{int, pochhammer, RatFunc, Rational};
use crate::ore::OreOperator;

fn n_plus(c: &Rational) -> RatFunc {
    RatFunc::linear(c.clone())
}

/// `(n+c)/(n+1)·S - 1`.
fn unit_factor(c: &Rational) -> OreOperator {
    let lead = &n_plus(c) / &n_plus(&int(1));
    OreOperator::from_terms([(1, lead), (0, RatFunc::constant(int(-1)))])
}

/// `Q_p = ((n+a_p+p)/(n+1)S - 1) ⋯ ((n+a_1+1)/(n+1)S - 1)`.
pub fn build_qp(a: &[Rational]) -> OreOperator {
    let factors: Vec<_> = (1..=a.len())
        .rev()
        .map(|i| unit_factor(&(&a[i - 1] + int(i as i64))))
        .collect();
    OreOperator::product(&factors)
}

/// `L_b = S - (n+1)/(n+b+1)`.
pub fn l_b(b: &Rational) -> OreOperator {
    let c = &n_plus(&int(1)) / &n_plus(&(b + int(1)));
    OreOperator::from_terms([(1, RatFunc::one()), (0, -c)])
}

/// `R_{p,b} = Π(a_i - b) / Π_{i=1..p}(n+b+i)`.
pub fn remainder_formula(a: &[Rational], b: &Rational) -> RatFunc {
    let mut r = RatFunc::one();
    for (i, ai) in a.iter().enumerate() {
        let step = &RatFunc::constant(ai - b) / &n_plus(&(b + int(i as i64 + 1)));
        r = &r * &step;
    }
    r
}

/// Closed-form remainder and the remainder of `Q_p` right-divided by `L_b`.
pub fn remainder_pair(a: &[Rational], b: &Rational) -> Result<(RatFunc, RatFunc)> {
    let rem = build_qp(a).rrem(&l_b(b))?;
    if rem.degree().is_some_and(|d| d > 0) {
        return Err(Error::InvalidArgument("remainder is not S-free".into()));
    }
    Ok((remainder_formula(a, b), rem.coeff(0)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LclmReport {
    pub lclm: OreOperator,
    pub product: OreOperator,
    pub degree: usize,
    pub equal: bool,
}

pub fn verify_lemma1(a: &[Rational]) -> Result<LclmReport> {
    for (i, x) in a.iter().enumerate() {
        if a[..i].contains(x) {
            return Err(Error::InvalidArgument(format!("repeated parameter {x}")));
        }
    }
    let product = build_qp(a).monic()?;
    let mut lclm = OreOperator::one();
    for ai in a {
        lclm = OreOperator::lclm(&lclm, &unit_factor(&(ai + int(1))))?;
    }
    Ok(LclmReport {
        degree: lclm.degree().unwrap_or(0),
        equal: lclm == product,
        lclm,
        product,
    })
}

/// `c_m(n)` as the terminating sum `Σ_k (m-p)_k/k! · Π(n+m+a_i+k)/(n+m+a_i)`.
pub fn c_m(a: &[Rational], m: usize) -> RatFunc {
    let p = a.len();
    let top = int(m as i64 - p as i64);
    let mut sum = RatFunc::zero();
    let mut fact = int(1);
    for k in 0..=(p - m) {
        if k > 0 {
            fact *= int(k as i64);
        }
        let mut term = RatFunc::constant(pochhammer(&top, k as u32) / &fact);
        for ai in a {
            let base = ai + int(m as i64);
            term = &term * &(&n_plus(&(&base + int(k as i64))) / &n_plus(&base));
        }
        sum = &sum + &term;
    }
    sum
}

/// Coefficients of `S^0 … S^p` from the closed form.
pub fn qp_coeffs(a: &[Rational]) -> Vec<RatFunc> {
    let p = a.len();
    (0..=p)
        .map(|m| {
            let fact: Rational = (1..=(p - m) as i64).map(int).product();
            let mut c = c_m(a, m).scale(&(int(1) / fact));
            for ai in a {
                c = &c * &n_plus(&(ai + int(m as i64)));
            }
            for i in 1..=m {
                c = &c / &n_plus(&int(i as i64));
            }
            c
        })
        .collect()
}

/// Whether the closed form matches the expanded product termwise.
pub fn verify_lemma2(a: &[Rational]) -> bool {
    let q = build_qp(a);
    qp_coeffs(a)
        .iter()
        .enumerate()
        .all(|(m, c)| *c == q.coeff(m))
        && q.degree() == Some(a.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{parse_expr, rat};

    fn rf(s: &str) -> RatFunc {
        parse_expr(s).unwrap()
    }

    #[test]
    fn qp_examples() {
        assert_eq!(build_qp(&[]), OreOperator::one());
        assert_eq!(
            build_qp(&[int(1), int(2)]),
            "((n+3)*(n+4))/((n+1)*(n+2))*S^2 - (2*n+6)/(n+1)*S + 1"
                .parse()
                .unwrap()
        );
        let a = [rat(3, 2)];
        assert!(build_qp(&a).rrem(&l_b(&a[0])).unwrap().is_zero());
    }

    #[test]
    fn remainder_examples() {
        assert_eq!(remainder_formula(&[int(1)], &int(3)), rf("-2/(n+4)"));
        assert!(remainder_formula(&[int(5)], &int(5)).is_zero());
        let (closed, computed) = remainder_pair(&[int(1), int(2)], &int(0)).unwrap();
        assert_eq!(closed, rf("2/((n+1)*(n+2))"));
        assert_eq!(closed, computed);
        let (closed, computed) = remainder_pair(&[], &rat(1, 2)).unwrap();
        assert_eq!((closed.clone(), computed), (RatFunc::one(), RatFunc::one()));
    }

    #[test]
    fn lemma1_examples() {
        let r = verify_lemma1(&[int(1), int(2)]).unwrap();
        assert!(r.equal);
        assert_eq!(r.degree, 2);
        assert!(verify_lemma1(&[int(0)]).unwrap().equal);
        let r = verify_lemma1(&[int(1), int(2), rat(5, 2), int(7)]).unwrap();
        assert!(r.equal);
        assert_eq!(r.degree, 4);
        assert!(verify_lemma1(&[int(1), int(1)]).is_err());
    }

    #[test]
    fn lemma2_examples() {
        let a = [rat(2, 3)];
        assert_eq!(c_m(&a, 1), RatFunc::one());
        assert_eq!(c_m(&a, 0), rf("-1/(n+2/3)"));
        let c = qp_coeffs(&a);
        assert_eq!(c[0], rf("-1"));
        assert_eq!(c[1], rf("(n+5/3)/(n+1)"));
        let a = [int(1), int(2)];
        assert_eq!(c_m(&a, 1), rf("-2/(n+2)"));
        assert_eq!(qp_coeffs(&a)[1], rf("-(2*n+6)/(n+1)"));
        assert_eq!(qp_coeffs(&[]), vec![RatFunc::one()]);
        assert!(verify_lemma2(&[int(1), int(1), rat(-3, 4)]));
    }
}
