use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{Poly, Rational};
use crate::hypergeom::{FamilySpec, TruncSeries};
use crate::mixed::MRelation;
use crate::ore::{Applied, OreOperator};
use crate::theorem::{Relation, RelationKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub n_min: i64,
    pub n_max: i64,
    /// Comparison order `K`.
    pub order: usize,
    /// Extra orders computed before deriving `xF` and `F'`.
    pub margin: usize,
}

impl CheckConfig {
    pub fn new(n_min: i64, n_max: i64, order: usize) -> Result<Self> {
        Self {
            n_min,
            n_max,
            order,
            margin: 2,
        }
        .validated()
    }

    pub fn with_margin(mut self, margin: usize) -> Result<Self> {
        self.margin = margin;
        self.validated()
    }

    fn validated(self) -> Result<Self> {
        if self.n_min < 0 || self.n_max < self.n_min {
            return Err(Error::Config(format!(
                "bad index range {}..{}",
                self.n_min, self.n_max
            )));
        }
        if self.order < 1 || self.margin < 1 {
            return Err(Error::Config("order and margin must be at least 1".into()));
        }
        Ok(self)
    }
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            n_min: 0,
            n_max: 10,
            order: 20,
            margin: 2,
        }
    }
}

/// First disagreement found at one index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub n: i64,
    pub k: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    /// Both sides agree but a degenerate relation requires them to vanish.
    pub expected_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NStatus {
    Pass,
    /// A coefficient of the operator has a pole at this index.
    PoleSkip {
        power: usize,
    },
    /// A series needed at this index is undefined.
    Undefined,
    Fail(Witness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NResult {
    pub n: i64,
    pub status: NStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// Every index was skipped.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub label: String,
    pub results: Vec<NResult>,
}

impl CheckReport {
    pub fn passed(&self) -> usize {
        self.count(|s| matches!(s, NStatus::Pass))
    }

    pub fn skipped(&self) -> usize {
        self.count(|s| matches!(s, NStatus::PoleSkip { .. } | NStatus::Undefined))
    }

    pub fn failed(&self) -> usize {
        self.count(|s| matches!(s, NStatus::Fail(_)))
    }

    fn count(&self, f: impl Fn(&NStatus) -> bool) -> usize {
        self.results.iter().filter(|r| f(&r.status)).count()
    }

    pub fn outcome(&self) -> Outcome {
        if self.failed() > 0 {
            Outcome::Fail
        } else if self.passed() == 0 {
            Outcome::Inconclusive
        } else {
            Outcome::Pass
        }
    }

    pub fn is_pass(&self) -> bool {
        self.outcome() == Outcome::Pass
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        self.results.iter().find_map(|r| match &r.status {
            NStatus::Fail(w) => Some(w),
            _ => None,
        })
    }

    pub fn summary(&self) -> String {
        let verdict = match self.outcome() {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Inconclusive => "inconclusive",
        };
        format!(
            "{}: {verdict} ({} passed, {} skipped, {} failed)",
            self.label,
            self.passed(),
            self.skipped(),
            self.failed()
        )
    }

    /// Concatenates reports, keeping the index order of each part.
    pub fn merged(label: &str, parts: impl IntoIterator<Item = CheckReport>) -> CheckReport {
        CheckReport {
            label: label.to_string(),
            results: parts.into_iter().flat_map(|r| r.results).collect(),
        }
    }
}

/// What an operator side acts on.
#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    F,
    XF,
    DF,
    /// `π(x)·F'`.
    PiDF(Poly),
}

impl Input {
    fn transform(&self, s: &TruncSeries) -> TruncSeries {
        match self {
            Input::F => s.clone(),
            Input::XF => s.times_x(),
            Input::DF => s.derivative(),
            Input::PiDF(p) => s.derivative().mul_poly(p),
        }
    }
}

/// One side of a checked identity.
#[derive(Clone, Debug)]
pub struct Side<'a> {
    pub op: &'a OreOperator,
    pub input: Input,
}

/// Identity `lhs(n - base) = rhs(n - base)` checked for each `n` in range.
#[derive(Clone, Debug)]
pub struct Identity<'a> {
    pub label: String,
    pub lhs: Side<'a>,
    pub rhs: Side<'a>,
    pub base: i64,
    pub require_zero: bool,
    /// Undefined series are reported per index instead of aborting.
    pub tolerate_undefined: bool,
}

impl Identity<'_> {
    pub fn check(&self, spec: &FamilySpec, cfg: &CheckConfig) -> Result<CheckReport> {
        let deg = self
            .lhs
            .op
            .degree()
            .unwrap_or(0)
            .max(self.rhs.op.degree().unwrap_or(0));
        let lo = cfg.n_min - self.base;
        let hi = cfg.n_max - self.base + deg as i64;
        let full = cfg.order + cfg.margin;
        let data: BTreeMap<i64, Result<TruncSeries>> = (lo..=hi)
            .into_par_iter()
            .map(|j| (j, spec.series(j, full)))
            .collect();
        let results: Result<Vec<NResult>> = (cfg.n_min..=cfg.n_max)
            .into_par_iter()
            .map(|n| self.check_at(n, &data, cfg.order))
            .collect();
        Ok(CheckReport {
            label: self.label.clone(),
            results: results?,
        })
    }

    fn check_at(
        &self,
        n: i64,
        data: &BTreeMap<i64, Result<TruncSeries>>,
        order: usize,
    ) -> Result<NResult> {
        let n0 = n - self.base;
        let eval = |side: &Side| -> Result<Option<std::result::Result<TruncSeries, usize>>> {
            let seq = |j: i64| -> Result<TruncSeries> {
                match data.get(&j) {
                    Some(Ok(s)) => Ok(side.input.transform(s)),
                    Some(Err(e)) => Err(e.clone()),
                    None => unreachable!("index {j} outside the precomputed window"),
                }
            };
            match side.op.apply(seq, n0) {
                Ok(Applied::Value(v)) => Ok(Some(Ok(v.truncate(order as i64)))),
                Ok(Applied::Pole { power }) => Ok(Some(Err(power))),
                Err(Error::UndefinedSeries { .. }) if self.tolerate_undefined => Ok(None),
                Err(e) => Err(e),
            }
        };
        let status = match (eval(&self.lhs)?, eval(&self.rhs)?) {
            (None, _) | (_, None) => NStatus::Undefined,
            (Some(Err(power)), _) | (_, Some(Err(power))) => NStatus::PoleSkip { power },
            (Some(Ok(l)), Some(Ok(r))) => compare(n, &l, &r, self.require_zero),
        };
        Ok(NResult { n, status })
    }
}

fn compare(n: i64, l: &TruncSeries, r: &TruncSeries, require_zero: bool) -> NStatus {
    if let Some(k) = l.first_difference(r) {
        return NStatus::Fail(Witness {
            n,
            k,
            lhs: l.coeff(k).clone(),
            rhs: r.coeff(k).clone(),
            expected_zero: false,
        });
    }
    if require_zero {
        if let Some(k) = l
            .coeffs()
            .iter()
            .position(|c| !num_traits::Zero::is_zero(c))
        {
            return NStatus::Fail(Witness {
                n,
                k,
                lhs: l.coeff(k).clone(),
                rhs: r.coeff(k).clone(),
                expected_zero: true,
            });
        }
    }
    NStatus::Pass
}

pub fn check_relation(rel: &Relation, spec: &FamilySpec, cfg: &CheckConfig) -> Result<CheckReport> {
    let lhs_input = match rel.kind {
        RelationKind::X => Input::XF,
        RelationKind::D => Input::DF,
    };
    Identity {
        label: format!("{} relation", rel.kind),
        lhs: Side {
            op: &rel.lhs,
            input: lhs_input,
        },
        rhs: Side {
            op: &rel.rhs,
            input: Input::F,
        },
        base: 0,
        require_zero: rel.degenerate,
        tolerate_undefined: false,
    }
    .check(spec, cfg)
}

pub fn check_mrelation(m: &MRelation, spec: &FamilySpec, cfg: &CheckConfig) -> Result<CheckReport> {
    let (s, p) = m.normalized();
    let shift = OreOperator::shift(s);
    Identity {
        label: "M relation".to_string(),
        lhs: Side {
            op: &shift,
            input: Input::PiDF(m.pi.clone()),
        },
        rhs: Side {
            op: &p,
            input: Input::F,
        },
        base: s as i64,
        require_zero: false,
        tolerate_undefined: true,
    }
    .check(spec, cfg)
}

/// Re-runs a single index and returns its witness, if any.
pub fn recheck_witness(
    rel: &Relation,
    spec: &FamilySpec,
    cfg: &CheckConfig,
    n: i64,
) -> Result<Option<Witness>> {
    let single = CheckConfig {
        n_min: n,
        n_max: n,
        ..*cfg
    };
    Ok(check_relation(rel, spec, &single)?.first_failure().cloned())
}

/// The relation with `delta` added to the coefficient of `S^power` on one side.
pub fn perturb(rel: &Relation, on_rhs: bool, power: usize, delta: &Rational) -> Relation {
    let mut out = rel.clone();
    let side = if on_rhs { &mut out.rhs } else { &mut out.lhs };
    *side = side.perturbed(power, delta);
    out.factored_lhs = vec![out.lhs.clone()];
    out.factored_rhs = vec![out.rhs.clone()];
    out
}
