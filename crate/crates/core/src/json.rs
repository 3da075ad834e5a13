//! JSON forms of operators, specs, series, relations and check reports.
//!
//! Rationals are `"p/q"` strings; operator coefficients are integer strings,
//! ascending in `n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, Poly, RatFunc, Rational};
use crate::hypergeom::{FamilySpec, TruncSeries};
use crate::mixed::MRelation;
use crate::ore::OreOperator;
use crate::theorem::Relation;
use crate::verify::{CheckReport, NResult, NStatus, Witness};

#[derive(Serialize, Deserialize)]
struct TermJson {
    power: usize,
    num: Vec<String>,
    den: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct OffsetJson {
    shift: i64,
    num: Vec<String>,
    den: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    family: String,
    m: u32,
    lambda: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mu: Option<String>,
    upper: Vec<String>,
    lower: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RelationJson {
    kind: String,
    degenerate: bool,
    lhs: Vec<TermJson>,
    rhs: Vec<TermJson>,
    factored_lhs: Vec<Vec<TermJson>>,
    factored_rhs: Vec<Vec<TermJson>>,
}

#[derive(Serialize, Deserialize)]
struct MRelationJson {
    pi: Vec<String>,
    offsets: Vec<OffsetJson>,
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    k: usize,
    lhs: String,
    rhs: String,
    expected_zero: bool,
}

#[derive(Serialize, Deserialize)]
struct ResultJson {
    n: i64,
    status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    power: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
}

#[derive(Serialize, Deserialize)]
struct Summary {
    outcome: String,
    passed: usize,
    skipped: usize,
    failed: usize,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    relation: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    spec: Option<Value>,
    results: Vec<ResultJson>,
    summary: Summary,
}

fn ints(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn parse_ints(v: &[String]) -> Result<Poly> {
    v.iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map(Rational::from_integer)
                .map_err(|_| Error::Json(format!("not an integer: {s:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Poly::new)
}

fn ratfunc_from(num: &[String], den: &[String]) -> Result<RatFunc> {
    RatFunc::try_new(parse_ints(num)?, parse_ints(den)?)
        .ok_or_else(|| Error::Json("zero denominator".into()))
}

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

fn parse_rats(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn terms(op: &OreOperator) -> Vec<TermJson> {
    op.terms()
        .map(|(power, c)| {
            let (num, den) = c.integer_parts();
            TermJson {
                power,
                num: ints(&num),
                den: ints(&den),
            }
        })
        .collect()
}

fn operator_from_terms(t: &[TermJson]) -> Result<OreOperator> {
    let terms = t
        .iter()
        .map(|t| Ok((t.power, ratfunc_from(&t.num, &t.den)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(OreOperator::from_terms(terms))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("wire types serialize")
}

fn from_value<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T> {
    Ok(T::deserialize(v)?)
}

pub fn operator_to_json(op: &OreOperator) -> Value {
    to_value(&terms(op))
}

pub fn operator_from_json(v: &Value) -> Result<OreOperator> {
    operator_from_terms(&from_value::<Vec<TermJson>>(v)?)
}

pub fn spec_to_json(spec: &FamilySpec) -> Value {
    to_value(&SpecJson {
        family: spec.family().to_string(),
        m: spec.m(),
        lambda: spec.lambda().to_string(),
        mu: spec.mu().map(|r| r.to_string()),
        upper: rats(spec.upper()),
        lower: rats(spec.lower()),
    })
}

pub fn spec_from_json(v: &Value) -> Result<FamilySpec> {
    let s: SpecJson = from_value(v)?;
    FamilySpec::new(
        s.family.parse()?,
        s.m,
        parse_rational(&s.lambda)?,
        s.mu.as_deref().map(parse_rational).transpose()?,
        parse_rats(&s.upper)?,
        parse_rats(&s.lower)?,
    )
}

pub fn series_to_json(s: &TruncSeries) -> Value {
    to_value(&rats(s.coeffs()))
}

pub fn series_from_json(v: &Value) -> Result<TruncSeries> {
    Ok(TruncSeries::new(parse_rats(&from_value::<Vec<String>>(
        v,
    )?)?))
}

pub fn relation_to_json(r: &Relation) -> Value {
    to_value(&RelationJson {
        kind: r.kind.to_string(),
        degenerate: r.degenerate,
        lhs: terms(&r.lhs),
        rhs: terms(&r.rhs),
        factored_lhs: r.factored_lhs.iter().map(terms).collect(),
        factored_rhs: r.factored_rhs.iter().map(terms).collect(),
    })
}

pub fn relation_from_json(v: &Value) -> Result<Relation> {
    let r: RelationJson = from_value(v)?;
    let factors = |fs: &[Vec<TermJson>]| -> Result<Vec<OreOperator>> {
        fs.iter().map(|f| operator_from_terms(f)).collect()
    };
    Ok(Relation {
        kind: r.kind.parse()?,
        lhs: operator_from_terms(&r.lhs)?,
        rhs: operator_from_terms(&r.rhs)?,
        factored_lhs: factors(&r.factored_lhs)?,
        factored_rhs: factors(&r.factored_rhs)?,
        degenerate: r.degenerate,
    })
}

pub fn mrelation_to_json(m: &MRelation) -> Value {
    to_value(&MRelationJson {
        pi: rats(m.pi.coeffs()),
        offsets: m
            .offsets
            .iter()
            .map(|(shift, c)| {
                let (num, den) = c.integer_parts();
                OffsetJson {
                    shift: *shift,
                    num: ints(&num),
                    den: ints(&den),
                }
            })
            .collect(),
    })
}

pub fn mrelation_from_json(v: &Value) -> Result<MRelation> {
    let m: MRelationJson = from_value(v)?;
    let offsets = m
        .offsets
        .iter()
        .map(|o| Ok((o.shift, ratfunc_from(&o.num, &o.den)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    MRelation::new(Poly::new(parse_rats(&m.pi)?), offsets)
}

/// `{label, relation?, spec?, results: [{n, status, witness?}], summary}`.
pub fn report_to_json(
    r: &CheckReport,
    relation: Option<&Relation>,
    spec: Option<&FamilySpec>,
) -> Value {
    let results = r
        .results
        .iter()
        .map(|res| {
            let (status, power, witness) = match &res.status {
                NStatus::Pass => ("pass", None, None),
                NStatus::PoleSkip { power } => ("pole-skip", Some(*power), None),
                NStatus::Undefined => ("undefined", None, None),
                NStatus::Fail(w) => (
                    "fail",
                    None,
                    Some(WitnessJson {
                        k: w.k,
                        lhs: w.lhs.to_string(),
                        rhs: w.rhs.to_string(),
                        expected_zero: w.expected_zero,
                    }),
                ),
            };
            ResultJson {
                n: res.n,
                status: status.into(),
                power,
                witness,
            }
        })
        .collect();
    to_value(&ReportJson {
        label: r.label.clone(),
        relation: relation.map(relation_to_json),
        spec: spec.map(spec_to_json),
        results,
        summary: Summary {
            outcome: format!("{:?}", r.outcome()).to_lowercase(),
            passed: r.passed(),
            skipped: r.skipped(),
            failed: r.failed(),
        },
    })
}

pub fn report_from_json(v: &Value) -> Result<CheckReport> {
    let r: ReportJson = from_value(v)?;
    let results = r
        .results
        .into_iter()
        .map(|res| {
            let status = match (res.status.as_str(), res.power, res.witness) {
                ("pass", _, _) => NStatus::Pass,
                ("pole-skip", Some(power), _) => NStatus::PoleSkip { power },
                ("undefined", _, _) => NStatus::Undefined,
                ("fail", _, Some(w)) => NStatus::Fail(Witness {
                    n: res.n,
                    k: w.k,
                    lhs: parse_rational(&w.lhs)?,
                    rhs: parse_rational(&w.rhs)?,
                    expected_zero: w.expected_zero,
                }),
                (s, _, _) => return Err(Error::Json(format!("bad status entry {s:?}"))),
            };
            Ok(NResult { n: res.n, status })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport {
        label: r.label,
        results,
    })
}
