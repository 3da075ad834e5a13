//! Left fractions `den⁻¹·num` of operators.

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::ore::OreOperator;

#[derive(Clone, PartialEq, Debug)]
pub struct OreFraction {
    den: OreOperator,
    num: OreOperator,
}

impl OreFraction {
    pub fn new(den: OreOperator, num: OreOperator) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(OreFraction { den, num })
    }

    pub fn from_operator(num: OreOperator) -> Self {
        OreFraction {
            den: OreOperator::one(),
            num,
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_operator(OreOperator::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_operator(OreOperator::zero())
    }

    pub fn den(&self) -> &OreOperator {
        &self.den
    }

    pub fn num(&self) -> &OreOperator {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &OreFraction) -> Result<OreFraction> {
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        let l = OreOperator::lclm_with_cofactors(&self.den, &o.den)?;
        let num = &(&l.left * &self.num) + &(&l.right * &o.num);
        OreFraction::new(l.lclm, num)
    }

    /// The composite `self ∘ o`.
    pub fn mul(&self, o: &OreFraction) -> Result<OreFraction> {
        if self.is_zero() || o.is_zero() {
            return Ok(OreFraction::zero());
        }
        // exchange: c·num_f = d·den_g
        let ex = OreOperator::lclm_with_cofactors(&self.num, &o.den)?;
        OreFraction::new(&ex.left * &self.den, &ex.right * &o.num)
    }

    /// Equality of the represented maps.
    pub fn same_as(&self, o: &OreFraction) -> Result<bool> {
        let l = OreOperator::lclm_with_cofactors(&self.den, &o.den)?;
        Ok(&l.left * &self.num == &l.right * &o.num)
    }
}
