//! Series check of a catalog entry, with a bounded search for a unique
//! small correction when the printed form fails.

use std::fmt;

use super::{CatalogEntry, MRelation};
use crate::error::Result;
use crate::exactnum::RatFunc;
use crate::hypergeom::FamilySpec;
use crate::verify::{check_mrelation, CheckConfig, CheckReport};

const MAX_EDITS: usize = 3;

/// One atomic change to a printed mixed relation. Terms are named by
/// their printed offset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Edit {
    Shift {
        term: i64,
        by: i64,
    },
    Flip {
        term: i64,
    },
    /// Exchange the `F_{n+1}` and `F_{n-1}` coefficients.
    Swap,
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edit::Shift { term, by } => write!(f, "index of the F[n{term:+}] term moved by {by:+}"),
            Edit::Flip { term } => write!(f, "sign of the F[n{term:+}] term flipped"),
            Edit::Swap => f.write_str("F[n+1] and F[n-1] exchanged"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryStatus {
    Verified,
    Corrected,
    Failed,
}

impl fmt::Display for EntryStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntryStatus::Verified => "verified",
            EntryStatus::Corrected => "corrected",
            EntryStatus::Failed => "failed",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Validation {
    pub entry: String,
    pub status: EntryStatus,
    pub printed: MRelation,
    /// The validating relation, or the printed one when none validates.
    pub relation: MRelation,
    pub edits: Vec<Edit>,
    /// Distinct validating variants at the smallest edit count that had any.
    pub candidates: usize,
    pub report: CheckReport,
}

fn apply_edits(printed: &MRelation, edits: &[Edit]) -> Option<MRelation> {
    let swap = edits.contains(&Edit::Swap);
    let mut terms: Vec<(i64, RatFunc)> = Vec::new();
    for (d, c) in &printed.offsets {
        let mut off = if swap && d.abs() == 1 { -d } else { *d };
        let mut coeff = c.clone();
        for e in edits {
            match *e {
                Edit::Shift { term, by } if term == *d => off += by,
                Edit::Flip { term } if term == *d => coeff = -&coeff,
                _ => {}
            }
        }
        terms.push((off, coeff));
    }
    let mut merged = std::collections::BTreeMap::new();
    for (d, c) in terms {
        let e = merged.entry(d).or_insert_with(RatFunc::zero);
        *e = &*e + &c;
    }
    MRelation::new(printed.pi.clone(), merged).ok()
}

fn atomic_edits(printed: &MRelation) -> Vec<Edit> {
    let mut out = Vec::new();
    for d in printed.offsets.keys() {
        out.push(Edit::Shift { term: *d, by: 1 });
        out.push(Edit::Shift { term: *d, by: -1 });
        out.push(Edit::Flip { term: *d });
    }
    if printed.offsets.contains_key(&1) || printed.offsets.contains_key(&-1) {
        out.push(Edit::Swap);
    }
    out
}

fn compatible(edits: &[Edit]) -> bool {
    edits.iter().enumerate().all(|(i, a)| {
        edits[..i].iter().all(|b| match (a, b) {
            (Edit::Shift { term: x, .. }, Edit::Shift { term: y, .. }) => x != y,
            _ => a != b,
        })
    })
}

fn combinations(pool: &[Edit], size: usize) -> Vec<Vec<Edit>> {
    fn go(pool: &[Edit], size: usize, start: usize, cur: &mut Vec<Edit>, out: &mut Vec<Vec<Edit>>) {
        if cur.len() == size {
            if compatible(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            go(pool, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, size, 0, &mut Vec::new(), &mut out);
    out
}

fn holds(m: &MRelation, spec: &FamilySpec, cfg: &CheckConfig) -> Result<Option<CheckReport>> {
    let quick = CheckConfig {
        n_max: cfg.n_max.min(cfg.n_min + 2),
        order: cfg.order.min(6),
        ..*cfg
    };
    if check_mrelation(m, spec, &quick)?.failed() > 0 {
        return Ok(None);
    }
    let full = check_mrelation(m, spec, cfg)?;
    Ok(full.is_pass().then_some(full))
}

pub fn validate_entry(
    entry: &CatalogEntry,
    spec: &FamilySpec,
    cfg: &CheckConfig,
) -> Result<Validation> {
    let printed = entry.instantiate(spec)?;
    let printed_report = check_mrelation(&printed, spec, cfg)?;
    let mut out = Validation {
        entry: entry.id.to_string(),
        status: EntryStatus::Verified,
        printed: printed.clone(),
        relation: printed.clone(),
        edits: Vec::new(),
        candidates: 1,
        report: printed_report,
    };
    if out.report.is_pass() {
        return Ok(out);
    }
    out.status = EntryStatus::Failed;
    out.candidates = 0;
    let pool = atomic_edits(&printed);
    for size in 1..=MAX_EDITS {
        let mut found: Vec<(MRelation, Vec<Edit>, CheckReport)> = Vec::new();
        for edits in combinations(&pool, size) {
            let Some(variant) = apply_edits(&printed, &edits) else {
                continue;
            };
            if variant == printed || found.iter().any(|(m, ..)| *m == variant) {
                continue;
            }
            if let Some(report) = holds(&variant, spec, cfg)? {
                found.push((variant, edits, report));
            }
        }
        if found.is_empty() {
            continue;
        }
        out.candidates = found.len();
        if found.len() == 1 {
            let (m, edits, report) = found.pop().expect("one candidate");
            out.status = EntryStatus::Corrected;
            out.relation = m;
            out.edits = edits;
            out.report = report;
        }
        break;
    }
    Ok(out)
}
