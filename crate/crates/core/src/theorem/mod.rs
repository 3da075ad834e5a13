//! Explicit factorizations of the two recurrences linking `xF_n`, `F_n'`
//! and `F_n` for the six families.

mod atoms;
mod signs;

pub use atoms::{Atom, Atoms};
pub use signs::SignProfile;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::{int, Field, RatFunc, Rational};
use crate::hypergeom::FamilySpec;
use crate::ore::OreOperator;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum RelationKind {
    /// `lhs(xF_n) = rhs(F_n)`.
    X,
    /// `lhs(F_n') = rhs(F_n)`.
    D,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::X => "X",
            RelationKind::D => "D",
        })
    }
}

impl FromStr for RelationKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "X" | "x" => Ok(RelationKind::X),
            "D" | "d" => Ok(RelationKind::D),
            other => Err(Error::InvalidArgument(format!(
                "unknown relation kind {other:?}"
            ))),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Relation {
    pub kind: RelationKind,
    pub lhs: OreOperator,
    pub rhs: OreOperator,
    /// Factors of `lhs`, leftmost first.
    pub factored_lhs: Vec<OreOperator>,
    pub factored_rhs: Vec<OreOperator>,
    /// Both sides annihilate their inputs.
    pub degenerate: bool,
}

impl Relation {
    pub fn from_factors(
        kind: RelationKind,
        factored_lhs: Vec<OreOperator>,
        factored_rhs: Vec<OreOperator>,
        degenerate: bool,
    ) -> Self {
        Relation {
            kind,
            lhs: OreOperator::product(&factored_lhs),
            rhs: OreOperator::product(&factored_rhs),
            factored_lhs,
            factored_rhs,
            degenerate,
        }
    }

    pub fn from_operators(kind: RelationKind, lhs: OreOperator, rhs: OreOperator) -> Self {
        Self::from_factors(kind, vec![lhs], vec![rhs], false)
    }

    /// Both sides left-multiplied by the inverse leading coefficient of `lhs`.
    pub fn monic_pair(&self) -> Result<(OreOperator, OreOperator)> {
        let inv = self
            .lhs
            .leading()
            .ok_or(Error::ZeroOperator)?
            .inv()
            .expect("nonzero");
        Ok((self.lhs.left_scale(&inv), self.rhs.left_scale(&inv)))
    }

    /// Same kind and same monic pair.
    pub fn equivalent(&self, other: &Relation) -> bool {
        self.kind == other.kind
            && matches!((self.monic_pair(), other.monic_pair()), (Ok(a), Ok(b)) if a == b)
    }
}

/// Symbolic constructor for the factors of one spec.
#[derive(Clone, Debug)]
pub struct Theorem {
    spec: FamilySpec,
    atoms: Atoms,
}

#[derive(Clone, Debug)]
enum Piece {
    Scalar(RatFunc),
    /// `(ε1ε2 S)^power`.
    Shift(u32),
    C(i64),
    F(Rational, i64),
}

/// `c·(S - r)`.
fn first_order(c: RatFunc, r: RatFunc) -> OreOperator {
    OreOperator::from_terms([(1, c.clone()), (0, -(&c * &r))])
}

fn n() -> RatFunc {
    RatFunc::var()
}

impl Theorem {
    pub fn new(spec: &FamilySpec) -> Self {
        Theorem {
            spec: spec.clone(),
            atoms: Atoms::new(spec),
        }
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn signs(&self) -> SignProfile {
        self.atoms.signs()
    }

    pub fn atoms(&self) -> &Atoms {
        &self.atoms
    }

    pub fn atom_c(&self, i: i64) -> RatFunc {
        self.atoms
            .c(&n(), i)
            .expect("symbolic evaluation has no poles")
    }

    pub fn atom_b(&self, i: i64, c: &Rational) -> RatFunc {
        self.atoms
            .b(&n(), i, c)
            .expect("symbolic evaluation has no poles")
    }

    pub fn factor_f(&self, c: &Rational, i: i64) -> Result<OreOperator> {
        let b = self.atom_b(i, c);
        let inv = b.inv().ok_or_else(|| Error::DegenerateFactor {
            kind: "F",
            index: i,
            c: Some(c.clone()),
        })?;
        Ok(first_order(inv, self.f_ratio(c, i)))
    }

    pub fn factor_c(&self, i: i64) -> Result<OreOperator> {
        let inv = self.atom_c(i).inv().ok_or(Error::DegenerateFactor {
            kind: "C",
            index: i,
            c: None,
        })?;
        Ok(first_order(inv, self.c_ratio()))
    }

    /// `S - a(n,-c)α(n+i-1,-c)/α(n,-c)`, the factor without its normalization.
    pub fn factor_f_numerator(&self, c: &Rational, i: i64) -> OreOperator {
        first_order(RatFunc::one(), self.f_ratio(c, i))
    }

    pub fn factor_c_numerator(&self) -> OreOperator {
        first_order(RatFunc::one(), self.c_ratio())
    }

    fn f_ratio(&self, c: &Rational, i: i64) -> RatFunc {
        self.atoms
            .f_ratio(&n(), i, c)
            .expect("symbolic evaluation has no poles")
    }

    fn c_ratio(&self) -> RatFunc {
        self.atoms
            .c_ratio(&n())
            .expect("symbolic evaluation has no poles")
    }

    fn chain_a(&self) -> Vec<Piece> {
        let a = self.spec.upper();
        (1..=a.len())
            .rev()
            .map(|i| Piece::F(a[i - 1].clone(), i as i64))
            .collect()
    }

    fn chain_b(&self) -> Vec<Piece> {
        let b = self.spec.lower();
        (1..=b.len())
            .rev()
            .map(|i| Piece::F(&b[i - 1] - int(1), i as i64))
            .collect()
    }

    fn chain_l(i: i64, j: i64) -> Vec<Piece> {
        (i..j).rev().map(Piece::C).collect()
    }

    fn realize(&self, pieces: &[Piece]) -> Result<Vec<OreOperator>> {
        pieces.iter().map(|p| self.piece(p)).collect()
    }

    fn piece(&self, p: &Piece) -> Result<OreOperator> {
        Ok(match p {
            Piece::Scalar(c) => OreOperator::from_coeff(c.clone()),
            Piece::Shift(e) => {
                let s = self.signs().shift_sign() as i64;
                OreOperator::term(RatFunc::constant(int(s.pow(*e))), *e as usize)
            }
            Piece::C(i) => self.factor_c(*i)?,
            Piece::F(c, i) => self.factor_f(c, *i)?,
        })
    }

    /// `𝓐`, the ordered product of the upper-parameter factors.
    pub fn chain_a_operator(&self) -> Result<OreOperator> {
        Ok(OreOperator::product(&self.realize(&self.chain_a())?))
    }

    pub fn chain_b_operator(&self) -> Result<OreOperator> {
        Ok(OreOperator::product(&self.realize(&self.chain_b())?))
    }

    /// `𝓛_i^j`.
    pub fn chain_l_operator(&self, i: i64, j: i64) -> Result<OreOperator> {
        Ok(OreOperator::product(&self.realize(&Self::chain_l(i, j))?))
    }

    /// `((λ+n)_m/(μ+n)_m^ε)^{sign}` times `m^{m·mexp}`.
    fn prefactor(&self, sign: i8, mexp: i64) -> RatFunc {
        let m = self.spec.m();
        let mut ratio = n().add_rat(self.spec.lambda()).rising(m);
        if self.signs().eps == 1 {
            let mu = self.spec.mu().expect("families with eps = 1 carry mu");
            ratio = &ratio / &n().add_rat(mu).rising(m);
        }
        if sign < 0 {
            ratio = ratio.inv().expect("nonzero");
        }
        let scalar = int(m as i64).powi(m as i64 * mexp).expect("m is positive");
        ratio.scale(&scalar)
    }

    fn sides(&self, kind: RelationKind) -> (Vec<Piece>, Vec<Piece>) {
        let s = self.signs();
        let (p, q, m) = (self.spec.p() as i64, self.spec.q() as i64, self.spec.m());
        let tw = 2 * m as i64 * s.chi as i64 * s.eps1 as i64;
        let (e, e1, e2) = (s.eps as i64, s.eps1 as i64, s.eps2 as i64);
        let shift = |e: u32| {
            if e == 0 {
                vec![]
            } else {
                vec![Piece::Shift(e)]
            }
        };
        match kind {
            RelationKind::X => {
                let lhs = [shift(s.theta), Self::chain_l(p, q + 1 - tw), self.chain_a()].concat();
                let rhs = [
                    vec![Piece::Scalar(self.prefactor(s.eps1, e * e1 - e2))],
                    shift(m - s.theta),
                    Self::chain_l(q + 1, p + tw),
                    vec![Piece::F(int(0), q + 1)],
                    self.chain_b(),
                ]
                .concat();
                (lhs, rhs)
            }
            RelationKind::D => {
                let lhs = [shift(m - s.theta), Self::chain_l(q, p + tw), self.chain_b()].concat();
                let rhs = [
                    vec![Piece::Scalar(self.prefactor(-s.eps1, e2 - e * e1))],
                    shift(s.theta),
                    Self::chain_l(p, q - tw),
                    self.chain_a(),
                ]
                .concat();
                (lhs, rhs)
            }
        }
    }

    /// Realizes one side from the right; the first degenerate factor is
    /// replaced by its numerator and everything left of it is dropped.
    fn truncated_side(&self, pieces: &[Piece]) -> Result<(Vec<OreOperator>, bool)> {
        let mut out = Vec::with_capacity(pieces.len());
        let mut hit = false;
        for p in pieces.iter().rev() {
            match self.piece(p) {
                Ok(op) => out.push(op),
                Err(Error::DegenerateFactor { .. }) => {
                    out.push(match p {
                        Piece::C(_) => self.factor_c_numerator(),
                        Piece::F(c, i) => self.factor_f_numerator(c, *i),
                        _ => unreachable!("only C and F factors can degenerate"),
                    });
                    hit = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        out.reverse();
        Ok((out, hit))
    }

    /// `μ-λ` when the spec lies in the degenerate window.
    pub fn degenerate_index(&self) -> Option<i64> {
        let s = self.signs();
        if s.eps != 1 || s.eps1 != s.eps2 {
            return None;
        }
        let d = self.spec.mu()? - self.spec.lambda();
        let i0 = crate::exactnum::as_integer(&d)?;
        let top = (self.spec.p() as i64 - 1).max(self.spec.q() as i64);
        (0..=top).contains(&i0).then_some(i0)
    }

    pub fn relation(&self, kind: RelationKind) -> Result<Relation> {
        let (lp, rp) = self.sides(kind);
        let (lhs, ldeg) = self.truncated_side(&lp)?;
        let (rhs, rdeg) = self.truncated_side(&rp)?;
        if ldeg || rdeg {
            if self.degenerate_index().is_none() {
                return Err(Error::UnexpectedDegeneracy(format!(
                    "{kind} relation of a spec outside the window"
                )));
            }
            if ldeg != rdeg {
                return Err(Error::UnexpectedDegeneracy(format!(
                    "only one side of the {kind} relation degenerates"
                )));
            }
        }
        Ok(Relation::from_factors(
            kind,
            drop_units(lhs),
            drop_units(rhs),
            ldeg,
        ))
    }
}

fn drop_units(mut factors: Vec<OreOperator>) -> Vec<OreOperator> {
    factors.retain(|f| *f != OreOperator::one());
    if factors.is_empty() {
        factors.push(OreOperator::one());
    }
    factors
}

pub fn derive_signs(spec: &FamilySpec) -> SignProfile {
    SignProfile::derive(spec)
}

pub fn build_relation(spec: &FamilySpec, kind: RelationKind) -> Result<Relation> {
    Theorem::new(spec).relation(kind)
}

#[cfg(test)]
mod tests;
