//! Known mixed relations `π(x)F_n' = Σ E_δ(n) F_{n+δ}` for special shapes.

use std::collections::BTreeMap;

use super::MRelation;
use crate::error::{Error, Result};
use crate::exactnum::{int, parse_expr, Poly, RatFunc, Rational};
use crate::hypergeom::{Family, FamilySpec};
use crate::theorem::SignProfile;

/// Constraints an entry places on a spec; `None` means unconstrained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub m: Option<u32>,
    pub p: Option<usize>,
    pub q: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub families: &'static [Family],
    pub shape: Shape,
    pub note: &'static str,
    build: fn(&FamilySpec) -> Result<MRelation>,
}

impl CatalogEntry {
    pub fn check(&self, spec: &FamilySpec) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::EntryConstraint {
                entry: self.id.to_string(),
                reason,
            })
        };
        if !self.families.contains(&spec.family()) {
            return fail(format!("family {} not covered", spec.family()));
        }
        let Shape { m, p, q } = self.shape;
        if m.is_some_and(|m| m != spec.m()) {
            return fail(format!("needs m = {}", m.unwrap()));
        }
        if p.is_some_and(|p| p != spec.p()) {
            return fail(format!("needs p = {}", p.unwrap()));
        }
        if q.is_some_and(|q| q != spec.q()) {
            return fail(format!("needs q = {}", q.unwrap()));
        }
        Ok(())
    }

    /// The relation as printed, for a spec meeting the constraints.
    pub fn instantiate(&self, spec: &FamilySpec) -> Result<MRelation> {
        self.check(spec)?;
        (self.build)(spec)
    }
}

const ANY: Shape = Shape {
    m: None,
    p: None,
    q: None,
};

const fn shape(p: usize, q: usize) -> Shape {
    Shape {
        m: Some(1),
        p: Some(p),
        q: Some(q),
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: "I/II-general",
            families: &[Family::I, Family::II],
            shape: ANY,
            note: "x F_n' = (n+λ-1)/(ε2 m) (F_{n-1} - F_n)",
            build: general,
        },
        CatalogEntry {
            id: "III-1F1",
            families: &[Family::III],
            shape: shape(0, 0),
            note: "F_n' = (n+μ)/(n+λ) F_n",
            build: iii_1f1,
        },
        CatalogEntry {
            id: "III-2F1",
            families: &[Family::III],
            shape: shape(1, 0),
            note: "(1-x) F_n' = (n+μ)(n+λ-a)/(n+λ) F_{n+1} + (n+μ) F_n",
            build: iii_2f1,
        },
        CatalogEntry {
            id: "IV-1F1",
            families: &[Family::IV],
            shape: shape(0, 0),
            note: "III-1F1 with n replaced by -n",
            build: iv_1f1,
        },
        CatalogEntry {
            id: "IV-2F1",
            families: &[Family::IV],
            shape: shape(1, 0),
            note: "III-2F1 with n replaced by -n",
            build: iv_2f1,
        },
        CatalogEntry {
            id: "V-2F0",
            families: &[Family::V],
            shape: shape(0, 0),
            note: "-x^2 F_n' as a three-term combination",
            build: v_2f0,
        },
        CatalogEntry {
            id: "V-2F1",
            families: &[Family::V],
            shape: shape(0, 1),
            note: "x(1-x) F_n' as a three-term combination",
            build: v_2f1,
        },
        CatalogEntry {
            id: "VI-0F2",
            families: &[Family::VI],
            shape: shape(0, 0),
            note: "-F_n' as a three-term combination",
            build: vi_0f2,
        },
        CatalogEntry {
            id: "VI-1F2",
            families: &[Family::VI],
            shape: shape(1, 0),
            note: "F_n' as a three-term combination",
            build: vi_1f2,
        },
        CatalogEntry {
            id: "VI-2F2",
            families: &[Family::VI],
            shape: shape(2, 0),
            note: "F_n' as a three-term combination",
            build: vi_2f2,
        },
        CatalogEntry {
            id: "VI-3F2",
            families: &[Family::VI],
            shape: shape(3, 0),
            note: "(1-x) F_n' as a three-term combination",
            build: vi_3f2,
        },
    ]
}

pub fn entry(id: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown catalog entry {id:?}")))
}

/// Parses a template after substituting `{key}` by `(value)`.
fn expr(template: &str, vars: &[(&str, &Rational)]) -> RatFunc {
    let mut s = template.to_string();
    for (k, v) in vars {
        s = s.replace(&format!("{{{k}}}"), &format!("({v})"));
    }
    parse_expr(&s).unwrap_or_else(|e| panic!("catalog template {template:?}: {e}"))
}

fn pi(coeffs: &[i64]) -> Poly {
    Poly::new(coeffs.iter().map(|c| int(*c)).collect())
}

fn relation(pi: Poly, terms: Vec<(i64, RatFunc)>) -> Result<MRelation> {
    MRelation::new(pi, terms.into_iter().collect::<BTreeMap<_, _>>())
}

fn params(spec: &FamilySpec) -> (Rational, Rational) {
    (
        spec.lambda().clone(),
        spec.mu().cloned().unwrap_or_else(|| int(0)),
    )
}

fn general(spec: &FamilySpec) -> Result<MRelation> {
    let s = SignProfile::derive(spec);
    let (l, _) = params(spec);
    let d = int(s.eps2 as i64 * spec.m() as i64);
    let c = expr("(n+{l}-1)/{d}", &[("l", &l), ("d", &d)]);
    relation(pi(&[0, 1]), vec![(-1, c.clone()), (0, -c)])
}

fn iii_1f1_with(l: &Rational, mu: &Rational) -> Result<MRelation> {
    let c = expr("(n+{mu})/(n+{l})", &[("l", l), ("mu", mu)]);
    relation(pi(&[1]), vec![(0, c)])
}

fn iii_2f1_with(l: &Rational, mu: &Rational, a: &Rational) -> Result<MRelation> {
    let v = [("l", l), ("mu", mu), ("a", a)];
    relation(
        pi(&[1, -1]),
        vec![
            (1, expr("(n+{mu})*(n+{l}-{a})/(n+{l})", &v)),
            (0, expr("n+{mu}", &v)),
        ],
    )
}

fn iii_1f1(spec: &FamilySpec) -> Result<MRelation> {
    let (l, mu) = params(spec);
    iii_1f1_with(&l, &mu)
}

fn iii_2f1(spec: &FamilySpec) -> Result<MRelation> {
    let (l, mu) = params(spec);
    iii_2f1_with(&l, &mu, &spec.upper()[0])
}

/// A family IV series at `n` is the family III series at `-n` with
/// `λ ↦ 1-μ`, `μ ↦ 1-λ`.
fn iii_params_of_iv(spec: &FamilySpec) -> (Rational, Rational) {
    let (l, mu) = params(spec);
    (int(1) - mu, int(1) - l)
}

fn iv_1f1(spec: &FamilySpec) -> Result<MRelation> {
    let (l, mu) = iii_params_of_iv(spec);
    Ok(iii_1f1_with(&l, &mu)?.reflected())
}

fn iv_2f1(spec: &FamilySpec) -> Result<MRelation> {
    let (l, mu) = iii_params_of_iv(spec);
    Ok(iii_2f1_with(&l, &mu, &spec.upper()[0])?.reflected())
}

fn v_2f0(spec: &FamilySpec) -> Result<MRelation> {
    let (l, mu) = params(spec);
    let v = [("l", &l), ("mu", &mu)];
    relation(
        pi(&[0, 0, -1]),
        vec![
            (
                1,
                expr("(n+{mu})*(n+{l}-1)/((2*n+{l}+{mu})*(2*n+{l}+{mu}-1))", &v),
            ),
            (
                0,
                expr(
                    "-2*(n+{mu})*(n+{l}-1)/((2*n+{l}+{mu})*(2*n+{l}+{mu}-2))",
                    &v,
                ),
            ),
            (
                -1,
                expr("(n+{mu})*(n+{l}-1)/((2*n+{l}+{mu}-1)*(2*n+{l}+{mu}-2))", &v),
            ),
        ],
    )
}

fn v_2f1(spec: &FamilySpec) -> Result<MRelation> {
    let (l, mu) = params(spec);
    let b = &spec.lower()[0];
    let v = [("l", &l), ("mu", &mu), ("b", b)];
    relation(
        pi(&[0, 1, -1]),
        vec![
            (
                1,
                expr(
                    "(n+{mu})*(n+{l}-1)*(n+{l}+{b}-1)/((2*n+{l}+{mu})*(2*n+{l}+{mu}-1))",
                    &v,
                ),
            ),
            (
                0,
                expr(
                    "-(n+{mu})*(n+{l}-1)*({l}-{mu}+2*{b}-2)/((2*n+{l}+{mu})*(2*n+{l}+{mu}-2))",
                    &v,
                ),
            ),
            (
                -1,
                expr(
                    "-(n+{mu})*(n+{l}-1)*(n+{mu}-{b})/((2*n+{l}+{mu}-1)*(2*n+{l}+{mu}-2))",
                    &v,
                ),
            ),
        ],
    )
}

fn vi_0f2(spec: &FamilySpec) -> Result<MRelation> {
    let (l, mu) = params(spec);
    let v = [("l", &l), ("mu", &mu)];
    relation(
        pi(&[-1]),
        vec![
            (
                1,
                expr("(n+{mu})/((n+{l})*(2*n+{l}+{mu})*(2*n+{l}+{mu}-1))", &v),
            ),
            (0, expr("2/((2*n+{l}+{mu})*(2*n+{l}+{mu}-2))", &v)),
            (
                -1,
                expr(
                    "(n+{l}-1)/((n+{mu}-1)*(2*n+{l}+{mu}-1)*(2*n+{l}+{mu}-2))",
                    &v,
                ),
            ),
        ],
    )
}

fn vi_1f2(spec: &FamilySpec) -> Result<MRelation> {
    let (l, mu) = params(spec);
    let a1 = &spec.upper()[0];
    let v = [("l", &l), ("mu", &mu), ("a1", a1)];
    relation(
        pi(&[1]),
        vec![
            (
                1,
                expr(
                    "(n+{mu})*(n+{l}-{a1})/((n+{l})*(2*n+{l}+{mu})*(2*n+{l}+{mu}-1))",
                    &v,
                ),
            ),
            (
                0,
                expr("({l}-{mu}-2*{a1})/((2*n+{l}+{mu})*(2*n+{l}+{mu}-2))", &v),
            ),
            (
                -1,
                expr(
                    "-(n+{l}-1)*(n+{mu}+{a1}-1)/((n+{mu}-1)*(2*n+{l}+{mu}-1)*(2*n+{l}+{mu}-2))",
                    &v,
                ),
            ),
        ],
    )
}

fn vi_2f2(spec: &FamilySpec) -> Result<MRelation> {
    let (l, mu) = params(spec);
    let (a1, a2) = (&spec.upper()[0], &spec.upper()[1]);
    let v = [("l", &l), ("mu", &mu), ("a1", a1), ("a2", a2)];
    relation(
        pi(&[1]),
        vec![
            (
                1,
                expr(
                    "-(n+{mu})*(n+{l}-{a1})*(n+{l}-{a2})/((n+{l})*(2*n+{l}+{mu})*(2*n+{l}+{mu}-1))",
                    &v,
                ),
            ),
            (
                0,
                expr(
                    "1/2+({l}-{mu}-2*{a1})*({l}-{mu}-2*{a2})/4*(1/(2*n+{l}+{mu})-1/(2*n+{l}+{mu}-2))",
                    &v,
                ),
            ),
            (
                -1,
                expr(
                    "-(n+{l}-1)*(n+{mu}+{a1}-1)*(n+{mu}+{a2}-1)/((n+{mu}-1)*(2*n+{l}+{mu}-1)*(2*n+{l}+{mu}-2))",
                    &v,
                ),
            ),
        ],
    )
}

fn vi_3f2(spec: &FamilySpec) -> Result<MRelation> {
    let (l, mu) = params(spec);
    let a = spec.upper();
    let v = [
        ("l", &l),
        ("mu", &mu),
        ("a1", &a[0]),
        ("a2", &a[1]),
        ("a3", &a[2]),
    ];
    relation(
        pi(&[1, -1]),
        vec![
            (
                1,
                expr(
                    "-(n+{mu})*(n+{l}-{a1})*(n+{l}-{a2})*(n+{l}-{a3})/((n+{l})*(2*n+{l}+{mu})*(2*n+{l}+{mu}-1))",
                    &v,
                ),
            ),
            (
                0,
                expr(
                    "(2*({a1}+{a2}+{a3})+{mu}-{l}-2)/4-({l}-{mu}-2*{a1})*({l}-{mu}-2*{a2})*({l}-{mu}-2*{a3})/8*(1/(2*n+{l}+{mu})-1/(2*n+{l}+{mu}-2))",
                    &v,
                ),
            ),
            (
                -1,
                expr(
                    "-(n+{l}-1)*(n+{mu}+{a1}-1)*(n+{mu}+{a2}-1)*(n+{mu}+{a3}-1)/((n+{mu}-1)*(2*n+{l}+{mu}-1)*(2*n+{l}+{mu}-2))",
                    &v,
                ),
            ),
        ],
    )
}
