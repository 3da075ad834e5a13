//! Rational identities from the proof, checked by exact evaluation on a
//! grid larger than their degree.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::hypergeom::FamilySpec;
use crate::theorem::Atoms;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProofIdentity {
    /// `a(n,k)/α(n,k) - a(n,-c)α(n+i-1,-c)/(α(n,-c)α(n+i-1,k)) = (k+c)B_i(n,c)`.
    Key,
    /// `ψ₀(n+1,k)a(n,k) = ψ₀(n,k)a(n,k-1)`.
    Psi,
    /// Coefficient ratios of the series against `a` and `ψ₀`.
    ShiftRatio,
}

impl fmt::Display for ProofIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProofIdentity::Key => "key",
            ProofIdentity::Psi => "psi",
            ProofIdentity::ShiftRatio => "shift-ratio",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PitFailure {
    pub n: Rational,
    pub k: Rational,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PitReport {
    pub identity: ProofIdentity,
    pub checked: usize,
    pub skipped: usize,
    pub failure: Option<PitFailure>,
}

impl PitReport {
    pub fn is_pass(&self) -> bool {
        self.failure.is_none() && self.checked > 0
    }

    fn new(identity: ProofIdentity) -> Self {
        PitReport {
            identity,
            checked: 0,
            skipped: 0,
            failure: None,
        }
    }

    fn record(&mut self, n: &Rational, k: &Rational, sides: Option<(Rational, Rational)>) {
        match sides {
            None => self.skipped += 1,
            Some((l, r)) => {
                self.checked += 1;
                if l != r && self.failure.is_none() {
                    self.failure = Some(PitFailure {
                        n: n.clone(),
                        k: k.clone(),
                        lhs: l,
                        rhs: r,
                    });
                }
            }
        }
    }

    fn finish(self) -> Result<Self> {
        if self.checked == 0 {
            return Err(Error::Config(format!(
                "every point of the {} grid is a pole",
                self.identity
            )));
        }
        Ok(self)
    }
}

/// Points `(2j+1)/7 - 3` for `j < side`.
pub fn grid_n(side: usize) -> Vec<Rational> {
    (0..side as i64)
        .map(|j| Rational::new((2 * j + 1).into(), 7.into()) - int(3))
        .collect()
}

/// Points `(3j+1)/5 - 4` for `j < side`.
pub fn grid_k(side: usize) -> Vec<Rational> {
    (0..side as i64)
        .map(|j| Rational::new((3 * j + 1).into(), 5.into()) - int(4))
        .collect()
}

/// The `(c, i)` pairs of every first-order factor used by the relations.
pub fn factor_pairs(spec: &FamilySpec) -> Vec<(Rational, i64)> {
    let mut out: Vec<(Rational, i64)> = spec
        .upper()
        .iter()
        .enumerate()
        .map(|(i, a)| (a.clone(), i as i64 + 1))
        .collect();
    out.extend(
        spec.lower()
            .iter()
            .enumerate()
            .map(|(i, b)| (b - int(1), i as i64 + 1)),
    );
    out.push((int(0), spec.q() as i64 + 1));
    out
}

fn key_sides(
    at: &Atoms,
    n: &Rational,
    k: &Rational,
    c: &Rational,
    i: i64,
) -> Option<(Rational, Rational)> {
    let nc = -c;
    let ni = n + int(i - 1);
    let first = at.a(n, k)? / at.alpha(n, k)?;
    let num = at.a(n, &nc)? * at.alpha(&ni, &nc)?;
    let den = at.alpha(n, &nc)? * at.alpha(&ni, k)?;
    if den.is_zero() {
        return None;
    }
    let lhs = first - num / den;
    let rhs = (k + c) * at.b(n, i, c)?;
    Some((lhs, rhs))
}

fn psi_sides(at: &Atoms, n: &Rational, k: &Rational) -> Option<(Rational, Rational)> {
    let lhs = at.psi0(&(n + int(1)), k)? * at.a(n, k)?;
    let rhs = at.psi0(n, k)? * at.a(n, &(k - int(1)))?;
    Some((lhs, rhs))
}

pub fn pit_key(spec: &FamilySpec, side: usize) -> Result<PitReport> {
    check_side(side)?;
    let at = Atoms::new(spec);
    let mut rep = PitReport::new(ProofIdentity::Key);
    for (c, i) in factor_pairs(spec) {
        for n in grid_n(side) {
            for k in grid_k(side) {
                rep.record(&n, &k, key_sides(&at, &n, &k, &c, i));
            }
        }
    }
    rep.finish()
}

pub fn pit_psi(spec: &FamilySpec, side: usize) -> Result<PitReport> {
    check_side(side)?;
    let at = Atoms::new(spec);
    let mut rep = PitReport::new(ProofIdentity::Psi);
    for n in grid_n(side) {
        for k in grid_k(side) {
            rep.record(&n, &k, psi_sides(&at, &n, &k));
        }
    }
    rep.finish()
}

fn check_side(side: usize) -> Result<()> {
    if side < 50 {
        return Err(Error::Config(format!("grid side {side} below 50")));
    }
    Ok(())
}

/// `U_{n+1,k}/U_{n,k} = a(n,k)` and
/// `U_{n,k-1}/U_{n,k} · Π(a_j+k-1)/(k·Π(b_j+k-1)) = ψ₀(n,k)` on series data.
pub fn pit_shift_ratio(spec: &FamilySpec, n_max: i64, k_max: usize) -> Result<PitReport> {
    let at = Atoms::new(spec);
    let mut rep = PitReport::new(ProofIdentity::ShiftRatio);
    let series: Vec<_> = (0..=n_max + 1)
        .map(|n| spec.series(n, k_max))
        .collect::<Result<_>>()?;
    for n in 0..=n_max {
        let (u, v) = (&series[n as usize], &series[n as usize + 1]);
        let nr = int(n);
        for k in 0..=k_max {
            let kr = int(k as i64);
            let ukn = u.coeff(k);
            let first = (!ukn.is_zero())
                .then(|| at.a(&nr, &kr).map(|a| (v.coeff(k) / ukn, a)))
                .flatten();
            rep.record(&nr, &kr, first);
            if k == 0 {
                continue;
            }
            let km1 = int(k as i64 - 1);
            let mut free = Rational::from_integer(1.into());
            for a in spec.upper() {
                free *= a + &km1;
            }
            let mut den = kr.clone();
            for b in spec.lower() {
                den *= b + &km1;
            }
            let second = (!ukn.is_zero() && !den.is_zero())
                .then(|| {
                    at.psi0(&nr, &kr)
                        .map(|psi| (u.coeff(k - 1) / ukn * free / den, psi))
                })
                .flatten();
            rep.record(&nr, &kr, second);
        }
    }
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::hypergeom::Family;

    fn legendre() -> FamilySpec {
        FamilySpec::new(Family::V, 1, int(1), Some(int(1)), vec![], vec![int(1)]).unwrap()
    }

    #[test]
    fn key_at_legendre() {
        let r = pit_key(&legendre(), 50).unwrap();
        assert!(r.is_pass(), "{r:?}");
        // B_1(n,0) = 2: the right side is 2k
        let at = Atoms::new(&legendre());
        let (l, rr) = key_sides(&at, &rat(3, 7), &rat(5, 2), &int(0), 1).unwrap();
        assert_eq!(l, rr);
        assert_eq!(rr, int(5));
    }

    #[test]
    fn psi_family_one() {
        let spec =
            FamilySpec::new(Family::I, 2, rat(1, 3), None, vec![int(2)], vec![rat(5, 4)]).unwrap();
        assert!(pit_psi(&spec, 50).unwrap().is_pass());
    }

    #[test]
    fn shift_ratio_family_six() {
        let spec = FamilySpec::new(
            Family::VI,
            2,
            rat(1, 2),
            Some(rat(-2, 3)),
            vec![int(3)],
            vec![rat(4, 5)],
        )
        .unwrap();
        let r = pit_shift_ratio(&spec, 5, 10).unwrap();
        assert!(r.is_pass(), "{r:?}");
    }

    #[test]
    fn small_grid_rejected() {
        assert!(matches!(pit_psi(&legendre(), 10), Err(Error::Config(_))));
    }
}
