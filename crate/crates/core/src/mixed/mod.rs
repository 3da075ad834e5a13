//! Mixed relations `π(x)F_n' = Σ E_δ(n) F_{n+δ}`, fractions of operators
//! and the passage from an `X` and a mixed relation to a `D` relation.

mod catalog;
mod fraction;
mod validate;

pub use catalog::{catalog, entry, CatalogEntry, Shape};
pub use fraction::OreFraction;
pub use validate::{validate_entry, Edit, EntryStatus, Validation};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactnum::{Poly, RatFunc};
use crate::ore::OreOperator;
use crate::theorem::{Relation, RelationKind};

#[derive(Clone, PartialEq, Debug)]
pub struct MRelation {
    /// Polynomial in `x`.
    pub pi: Poly,
    /// Nonzero `E_δ(n)` keyed by `δ`.
    pub offsets: BTreeMap<i64, RatFunc>,
}

impl MRelation {
    pub fn new(pi: Poly, mut offsets: BTreeMap<i64, RatFunc>) -> Result<Self> {
        offsets.retain(|_, c| !c.is_zero());
        if offsets.is_empty() {
            return Err(Error::InvalidArgument(
                "mixed relation without terms".into(),
            ));
        }
        if pi.is_zero() {
            return Err(Error::InvalidArgument("mixed relation with pi = 0".into()));
        }
        Ok(MRelation { pi, offsets })
    }

    pub fn min_offset(&self) -> i64 {
        *self.offsets.keys().next().expect("nonempty")
    }

    pub fn max_offset(&self) -> i64 {
        *self.offsets.keys().next_back().expect("nonempty")
    }

    /// `(s, P)` with `S^s·Σ E_δ(n) S^δ = P` and `P` free of negative powers.
    pub fn normalized(&self) -> (usize, OreOperator) {
        let s = (-self.min_offset()).max(0);
        let p = OreOperator::from_terms(
            self.offsets
                .iter()
                .map(|(d, c)| ((d + s) as usize, c.shift(s))),
        );
        (s as usize, p)
    }

    /// The relation satisfied by `G_n = F_{-n}`.
    pub fn reflected(&self) -> Self {
        MRelation {
            pi: self.pi.clone(),
            offsets: self
                .offsets
                .iter()
                .map(|(d, c)| (-d, c.reflect()))
                .collect(),
        }
    }

    /// Text form, e.g. `x*F' = (n-1/2)*F[n-1] + (-n+1/2)*F[n]`.
    pub fn render(&self) -> String {
        let pi = self.pi.fmt_in("x");
        let lhs = if self.pi.is_one() {
            "F'".to_string()
        } else {
            format!("({pi})*F'")
        };
        let rhs: Vec<String> = self
            .offsets
            .iter()
            .map(|(d, c)| {
                let idx = match d {
                    0 => "n".to_string(),
                    d if *d > 0 => format!("n+{d}"),
                    d => format!("n{d}"),
                };
                format!("({c})*F[{idx}]")
            })
            .collect();
        format!("{lhs} = {}", rhs.join(" + "))
    }
}

/// Horner evaluation of `π` at the fraction `f`.
fn eval_poly_at(pi: &Poly, f: &OreFraction) -> Result<OreFraction> {
    let mut acc = OreFraction::zero();
    for c in pi.coeffs().iter().rev() {
        acc = acc.mul(f)?.add(&OreFraction::constant(c.clone()))?;
    }
    Ok(acc)
}

/// A `D` relation derived from an `X` relation and a mixed relation of
/// the same sequence.
pub fn combine_x_m_to_d(x_rel: &Relation, m_rel: &MRelation) -> Result<Relation> {
    if x_rel.kind != RelationKind::X {
        return Err(Error::InvalidArgument("expected an X relation".into()));
    }
    if x_rel.degenerate {
        return Err(Error::InvalidArgument("X relation is degenerate".into()));
    }
    let fx = OreFraction::new(x_rel.lhs.clone(), x_rel.rhs.clone())?;
    let f_pi = eval_poly_at(&m_rel.pi, &fx)?;
    let f_dpi = eval_poly_at(&m_rel.pi.derivative(), &fx)?;
    let (s, p) = m_rel.normalized();
    let g = f_dpi.add(&OreFraction::new(OreOperator::shift(s), p)?)?;
    let ex = OreOperator::lclm_with_cofactors(f_pi.den(), g.den())?;
    let lhs = &ex.left * f_pi.num();
    let rhs = &ex.right * g.num();
    if lhs.is_zero() {
        return Err(Error::ZeroOperator);
    }
    Ok(Relation::from_operators(RelationKind::D, lhs, rhs))
}
