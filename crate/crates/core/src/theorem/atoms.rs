//! Closed-form scalar atoms, generic over point values and symbolic `n`.

use super::SignProfile;
use crate::exactnum::{int, Field, Rational};
use crate::hypergeom::FamilySpec;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Atom {
    A,
    Alpha,
    Psi0,
}

/// Evaluator for `a`, `α`, `ψ₀`, `C_i` and `B_i` of one spec.
///
/// Every method returns `None` when a division by zero occurs at the
/// requested point.
#[derive(Clone, Debug)]
pub struct Atoms {
    signs: SignProfile,
    m: i64,
    lambda: Rational,
    mu: Rational,
}

impl Atoms {
    pub fn new(spec: &FamilySpec) -> Self {
        let signs = SignProfile::derive(spec);
        Atoms {
            signs,
            m: spec.m() as i64,
            lambda: spec.lambda().clone(),
            // only read behind a factor of eps
            mu: spec.mu().cloned().unwrap_or_else(|| int(0)),
        }
    }

    pub fn signs(&self) -> SignProfile {
        self.signs
    }

    fn eps_mu(&self) -> Rational {
        if self.signs.eps == 1 {
            self.mu.clone()
        } else {
            int(0)
        }
    }

    /// `(n+λ)/(n+εμ)`.
    fn lead_ratio<F: Field>(&self, n: &F) -> Option<F> {
        n.add_rat(&self.lambda)
            .checked_div(&n.add_rat(&self.eps_mu()))
    }

    pub fn eval<F: Field>(&self, which: Atom, n: &F, k: &Rational) -> Option<F> {
        match which {
            Atom::A => self.a(n, k),
            Atom::Alpha => self.alpha(n, k),
            Atom::Psi0 => self.psi0(n, k),
        }
    }

    pub fn a<F: Field>(&self, n: &F, k: &Rational) -> Option<F> {
        let s = &self.signs;
        let mk = k * int(self.m);
        let den = n.add_rat(&(&self.lambda + &mk * int(s.eps2 as i64)));
        if s.eps == 0 {
            return n.add_rat(&self.lambda).checked_div(&den);
        }
        let num = n.add_rat(&(&self.mu + &mk * int(s.eps1 as i64)));
        self.lead_ratio(n)?.times(&num).checked_div(&den)
    }

    pub fn alpha<F: Field>(&self, n: &F, k: &Rational) -> Option<F> {
        let mk = k * int(self.m * self.signs.eps2 as i64);
        F::one_value().checked_div(&n.add_rat(&(&self.lambda + mk)))
    }

    pub fn psi0<F: Field>(&self, n: &F, k: &Rational) -> Option<F> {
        let s = &self.signs;
        let m = self.m;
        let mk = k * int(m);
        let delta = |e: i8| if e == 1 { m } else { 0 };
        let sign = F::from_int((s.eps1 * s.eps2) as i64).powi(m)?;
        let mexp = m * (s.eps as i64 * s.eps1 as i64 - s.eps2 as i64);
        let mpow = F::from_int(m).powi(mexp)?;
        let top_base = n.add_rat(&(&self.lambda + &mk * int(s.eps2 as i64) - int(delta(s.eps2))));
        let top = top_base.rising(m as u32).powi(s.eps2 as i64)?;
        let mut val = sign.times(&mpow).times(&top);
        if s.eps == 1 {
            let bot_base = n.add_rat(&(&self.mu + &mk * int(s.eps1 as i64) - int(delta(s.eps1))));
            let bot = bot_base.rising(m as u32).powi(s.eps1 as i64)?;
            val = val.checked_div(&bot)?;
        }
        Some(val)
    }

    pub fn c<F: Field>(&self, n: &F, i: i64) -> Option<F> {
        let s = &self.signs;
        if s.eps == 0 {
            return Some(n.add_rat(&self.lambda));
        }
        let e = int((s.eps1 * s.eps2) as i64);
        let inner = n
            .add_rat(&self.mu)
            .minus(&n.add_rat(&(&self.lambda + int(i))).scale(&e));
        Some(self.lead_ratio(n)?.times(&inner))
    }

    pub fn b<F: Field>(&self, n: &F, i: i64, c: &Rational) -> Option<F> {
        let neg_c = -c;
        let al = self.alpha(&n.add_rat(&int(i - 1)), &neg_c)?;
        let ci = self.c(n, i - 1)?;
        Some(al.times(&ci).scale(&int(-self.m * self.signs.eps2 as i64)))
    }

    /// `a(n,-c)·α(n+i-1,-c)/α(n,-c)`, the constant term of `𝓕_{c,i}` up to sign.
    pub fn f_ratio<F: Field>(&self, n: &F, i: i64, c: &Rational) -> Option<F> {
        let neg_c = -c;
        let a = self.a(n, &neg_c)?;
        let al = self.alpha(&n.add_rat(&int(i - 1)), &neg_c)?;
        a.times(&al).checked_div(&self.alpha(n, &neg_c)?)
    }

    /// `εε1(n+λ)/(ε2(n+εμ))`, the constant term of `𝓒_i` up to sign.
    pub fn c_ratio<F: Field>(&self, n: &F) -> Option<F> {
        let s = &self.signs;
        if s.eps == 0 {
            return Some(F::zero_value());
        }
        Some(self.lead_ratio(n)?.scale(&int((s.eps1 * s.eps2) as i64)))
    }
}
