//! Worked examples: Legendre polynomials, extended Laguerre closed forms,
//! the degenerate special case and the ₁F₂ separation example.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::sweep::random_rational;
use super::{check_relation, CheckConfig, CheckReport};
use crate::error::Result;
use crate::exactnum::{int, is_nonpositive_integer, rat, Poly, Rational};
use crate::hypergeom::{Family, FamilySpec, TruncSeries};
use crate::mixed::catalog;
use crate::ore::OreOperator;
use crate::theorem::{build_relation, Relation, RelationKind};

#[derive(Clone, Debug)]
pub struct FixtureResult {
    pub name: &'static str,
    pub pass: bool,
    pub lines: Vec<String>,
}

impl FixtureResult {
    fn new(name: &'static str) -> Self {
        FixtureResult {
            name,
            pass: true,
            lines: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, line: String) {
        self.pass &= ok;
        self.lines
            .push(format!("{} {line}", if ok { "ok  " } else { "FAIL" }));
    }

    fn report(&mut self, r: &CheckReport) {
        let mut line = r.summary();
        if let Some(w) = r.first_failure() {
            line += &format!(" witness n={} k={} lhs={} rhs={}", w.n, w.k, w.lhs, w.rhs);
        }
        self.require(r.is_pass(), line);
    }
}

fn op(s: &str) -> OreOperator {
    s.parse().expect("fixture operator text")
}

fn rel(kind: RelationKind, lhs: OreOperator, rhs: OreOperator) -> Relation {
    Relation::from_operators(kind, lhs, rhs)
}

pub fn legendre_spec() -> FamilySpec {
    FamilySpec::new(Family::V, 1, int(1), Some(int(1)), vec![], vec![int(1)]).expect("valid")
}

/// The two relations of the Legendre example as displayed.
pub fn legendre_printed() -> (Relation, Relation) {
    (
        rel(
            RelationKind::X,
            op("-S"),
            op("(n+2)/(2*n+3)*(S - (n+1)/(n+2))*1/2*(S-1)"),
        ),
        rel(RelationKind::D, op("1/(2*(2*n+3))*(S+1)*(S-1)"), op("-S")),
    )
}

/// `P_n(x) = F_n((1-x)/2)` for `n = 0..=count`.
fn legendre_polys(count: i64, order: usize) -> Result<Vec<TruncSeries>> {
    let spec = legendre_spec();
    (0..=count)
        .map(|n| {
            Ok(spec
                .series(n, order)?
                .affine_compose(&rat(1, 2), &rat(-1, 2)))
        })
        .collect()
}

/// First differing `(n, k)` of a named identity, if any.
pub type Discrepancy = (&'static str, Option<(i64, usize)>);

/// Checks the two classical Legendre identities.
pub fn legendre_classical(n_max: i64, order: usize) -> Result<Vec<Discrepancy>> {
    let full = order + 2;
    let p = legendre_polys(n_max + 2, full)?;
    let k = order as i64;
    let mut three_term = None;
    let mut derivative = None;
    for n in 0..=n_max {
        let i = n as usize;
        let nr = int(n);
        let lhs = p[i + 1].mul_poly(&Poly::new(vec![rat(-1, 2), rat(1, 2)]));
        let rhs = p[i + 2]
            .scale(&(&nr + int(2)))
            .sub(&p[i + 1].scale(&(int(2) * &nr + int(3))))?
            .add(&p[i].scale(&(&nr + int(1))))?
            .scale(&(int(1) / (int(2) * (int(2) * &nr + int(3)))));
        if three_term.is_none() {
            three_term = lhs
                .truncate(k)
                .first_difference(&rhs.truncate(k))
                .map(|j| (n, j));
        }
        let lhs = p[i + 2]
            .derivative()
            .sub(&p[i].derivative())?
            .scale(&(int(1) / (int(2) * &nr + int(3))));
        if derivative.is_none() {
            derivative = lhs
                .truncate(k)
                .first_difference(&p[i + 1].truncate(k))
                .map(|j| (n, j));
        }
    }
    Ok(vec![("three-term", three_term), ("derivative", derivative)])
}

pub fn fixture_legendre() -> Result<FixtureResult> {
    let mut out = FixtureResult::new("legendre");
    let spec = legendre_spec();
    let cfg = CheckConfig::new(0, 20, 40)?;
    let (px, pd) = legendre_printed();
    for printed in [px, pd] {
        let built = build_relation(&spec, printed.kind)?;
        out.require(
            built.lhs == printed.lhs && built.rhs == printed.rhs,
            format!(
                "{} relation built equals the displayed operators",
                printed.kind
            ),
        );
        out.report(&check_relation(&printed, &spec, &cfg)?);
    }
    for (name, diff) in legendre_classical(20, 40)? {
        let line = match diff {
            None => format!("classical {name} form holds for n = 0..20"),
            Some((n, k)) => format!("classical {name} form differs at n={n} k={k}"),
        };
        out.require(diff.is_none(), line);
    }
    Ok(out)
}

pub fn laguerre_spec(a: Vec<Rational>, b: Vec<Rational>) -> Result<FamilySpec> {
    FamilySpec::new(Family::II, 1, int(1), None, a, b)
}

/// The closed forms of the extended Laguerre example, read with
/// `S_n/(n+1)` standing for `𝓒_i = (n+1)⁻¹S_n`.
pub fn laguerre_printed(a: &[Rational], b: &[Rational]) -> (Relation, Relation) {
    let (p, q) = (a.len() as i64, b.len() as i64);
    let c = op("1/(n+1)*S");
    let cp = |e: i64| c.pow(e.max(0) as u32);
    let descending = |fs: Vec<OreOperator>| OreOperator::product(fs.iter().rev());
    let a_prod = descending(
        (1..=p)
            .map(|i| op(&format!("(n+({})+{i})/(n+1)*S - 1", a[i as usize - 1])))
            .collect(),
    );
    let b_prod = descending(
        (1..=q)
            .map(|i| op(&format!("(n+({})+{i}-1)/(n+1)*S - 1", b[i as usize - 1])))
            .collect(),
    );
    let s = op("S");
    let n1 = op("n+1");
    let x = rel(
        RelationKind::X,
        -&OreOperator::product([&cp(q - p - 1), &s, &a_prod]),
        OreOperator::product([
            &n1,
            &cp(p + 1 - q),
            &op(&format!("(n+{q}+1)/(n+1)*S - 1")),
            &b_prod,
        ]),
    );
    let d = rel(
        RelationKind::D,
        OreOperator::product([&n1, &cp(p + 2 - q), &b_prod]),
        OreOperator::product([&cp(q - p - 2), &s, &a_prod]),
    );
    (x, d)
}

#[derive(Clone, Debug)]
pub struct LaguerreCase {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub x_matches_printed: bool,
    pub d_matches_printed: bool,
    pub printed_x: CheckReport,
    pub printed_d: CheckReport,
    pub built_x: CheckReport,
    pub built_d: CheckReport,
}

fn lower_param(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = random_rational(rng, 9);
        if !is_nonpositive_integer(&r) {
            return r;
        }
    }
}

pub fn laguerre_cases(seed: u64, max_pq: usize, cfg: &CheckConfig) -> Result<Vec<LaguerreCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for p in 0..=max_pq {
        for q in 0..=max_pq {
            let a: Vec<_> = (0..p).map(|_| random_rational(&mut rng, 9)).collect();
            let b: Vec<_> = (0..q).map(|_| lower_param(&mut rng)).collect();
            let spec = laguerre_spec(a.clone(), b.clone())?;
            let (px, pd) = laguerre_printed(&a, &b);
            let bx = build_relation(&spec, RelationKind::X)?;
            let bd = build_relation(&spec, RelationKind::D)?;
            out.push(LaguerreCase {
                x_matches_printed: bx.equivalent(&px),
                d_matches_printed: bd.equivalent(&pd),
                printed_x: check_relation(&px, &spec, cfg)?,
                printed_d: check_relation(&pd, &spec, cfg)?,
                built_x: check_relation(&bx, &spec, cfg)?,
                built_d: check_relation(&bd, &spec, cfg)?,
                upper: a,
                lower: b,
            });
        }
    }
    Ok(out)
}

pub fn fixture_laguerre(seed: u64) -> Result<FixtureResult> {
    let mut out = FixtureResult::new("extended-laguerre");
    let cfg = CheckConfig::new(0, 10, 25)?;
    for c in laguerre_cases(seed, 3, &cfg)? {
        let (p, q) = (c.upper.len(), c.lower.len());
        out.require(
            c.built_x.is_pass(),
            format!("p={p} q={q} built {}", c.built_x.summary()),
        );
        out.require(
            c.built_d.is_pass(),
            format!("p={p} q={q} built {}", c.built_d.summary()),
        );
        out.require(
            c.x_matches_printed,
            format!("p={p} q={q} printed X closed form equivalent to the built relation (printed form on series: {:?})", c.printed_x.outcome()),
        );
        out.require(
            c.d_matches_printed,
            format!("p={p} q={q} printed D closed form equivalent to the built relation (printed form on series: {:?})", c.printed_d.outcome()),
        );
    }
    Ok(out)
}

pub fn special_spec(lambda: &Rational, a: &Rational, b: &Rational) -> Result<FamilySpec> {
    FamilySpec::new(
        Family::III,
        1,
        lambda.clone(),
        Some(lambda + int(1)),
        vec![a.clone()],
        vec![b.clone()],
    )
}

/// Displayed identities of the special case: the regular `D` relation and
/// the truncated `X` relation whose sides both vanish.
pub fn special_printed(l: &Rational, a: &Rational, b: &Rational) -> (Relation, Relation) {
    let (l, a, b) = (format!("({l})"), format!("({a})"), format!("({b})"));
    let fa = op(&format!("-((n+{l}+1)*(n+{l}-{a}))/(n+{l})*S + n+{l}+1-{a}"));
    let fb = op(&format!(
        "-((n+{l}+1)*(n+{l}+1-{b}))/(n+{l})*S + n+{l}+2-{b}"
    ));
    let d = rel(
        RelationKind::D,
        fb.clone(),
        &op(&format!("(n+{l}+1)/(n+{l})*S")) * &fa,
    );
    let left = op(&format!("S - (n+{l})/(n+{l}+1)"));
    let x = Relation::from_factors(
        RelationKind::X,
        vec![left.clone(), fa],
        vec![left, fb],
        true,
    );
    (d, x)
}

pub fn fixture_special() -> Result<FixtureResult> {
    let mut out = FixtureResult::new("special-case");
    let cfg = CheckConfig::new(0, 10, 25)?;
    for (l, a, b) in [
        (rat(1, 2), rat(1, 3), rat(7, 4)),
        (int(2), rat(-5, 2), rat(2, 3)),
    ] {
        let spec = special_spec(&l, &a, &b)?;
        let (d, x) = special_printed(&l, &a, &b);
        out.report(&check_relation(&d, &spec, &cfg)?);
        out.report(&check_relation(&x, &spec, &cfg)?);
        let bd = build_relation(&spec, RelationKind::D)?;
        let bx = build_relation(&spec, RelationKind::X)?;
        out.require(
            !bd.degenerate && bd.equivalent(&d),
            format!("lambda={l} built D equivalent to the displayed one"),
        );
        out.require(
            bx.degenerate && bx.equivalent(&x),
            format!("lambda={l} built X is the displayed truncation"),
        );
    }
    Ok(out)
}

pub fn separation_spec() -> FamilySpec {
    FamilySpec::new(Family::III, 1, int(0), Some(int(2)), vec![], vec![int(1)]).expect("valid")
}

pub fn separation_printed() -> (Relation, Relation) {
    (
        rel(
            RelationKind::X,
            op("1/2*S*((n+2)/n*S - 1)^2"),
            op("(S-1)*n*(n/2+1)*(S-1)"),
        ),
        rel(
            RelationKind::D,
            op("-(n/2+1)*(S-1)"),
            op("(n+2)/(2*n)*S*((n+2)/n*S - 1)"),
        ),
    )
}

pub fn fixture_separation() -> Result<FixtureResult> {
    let mut out = FixtureResult::new("separation");
    let spec = separation_spec();
    // F_0 has the lower parameter 0
    let cfg = CheckConfig::new(1, 10, 25)?;
    let (x, d) = separation_printed();
    for printed in [x, d] {
        out.report(&check_relation(&printed, &spec, &cfg)?);
        let built = build_relation(&spec, printed.kind)?;
        out.require(
            built.equivalent(&printed),
            format!(
                "{} relation equals the built one up to a left factor",
                printed.kind
            ),
        );
    }
    let covered: Vec<_> = catalog()
        .into_iter()
        .filter(|e| e.check(&spec).is_ok())
        .map(|e| e.id)
        .collect();
    out.require(
        covered.is_empty(),
        format!("no mixed catalog entry applies {covered:?}"),
    );
    Ok(out)
}

pub fn run_fixtures(seed: u64) -> Result<Vec<FixtureResult>> {
    Ok(vec![
        fixture_legendre()?,
        fixture_laguerre(seed)?,
        fixture_special()?,
        fixture_separation()?,
    ])
}

/// Every printed relation of the fixtures, with its spec and range.
pub fn fixture_relations() -> Result<Vec<(String, Relation, FamilySpec, CheckConfig)>> {
    let c10 = CheckConfig::new(0, 10, 25)?;
    let mut out = Vec::new();
    let (x, d) = legendre_printed();
    out.push((
        "legendre X".into(),
        x,
        legendre_spec(),
        CheckConfig::new(0, 20, 40)?,
    ));
    out.push((
        "legendre D".into(),
        d,
        legendre_spec(),
        CheckConfig::new(0, 20, 40)?,
    ));
    let (l, a, b) = (rat(1, 2), rat(1, 3), rat(7, 4));
    let (d, x) = special_printed(&l, &a, &b);
    out.push(("special D".into(), d, special_spec(&l, &a, &b)?, c10));
    out.push(("special X".into(), x, special_spec(&l, &a, &b)?, c10));
    let (x, d) = separation_printed();
    let c1 = CheckConfig::new(1, 10, 25)?;
    out.push(("separation X".into(), x, separation_spec(), c1));
    out.push(("separation D".into(), d, separation_spec(), c1));
    let lag = laguerre_spec(vec![rat(1, 2), int(3)], vec![rat(7, 3)])?;
    for kind in [RelationKind::X, RelationKind::D] {
        out.push((
            format!("laguerre {kind}"),
            build_relation(&lag, kind)?,
            lag.clone(),
            c10,
        ));
    }
    Ok(out)
}

/// Instances used to validate the mixed catalog, one or more per entry.
pub fn catalog_samples() -> Vec<(&'static str, FamilySpec)> {
    let spec = |f, m, l, mu, a, b| FamilySpec::new(f, m, l, mu, a, b).expect("valid sample");
    vec![
        (
            "I/II-general",
            spec(Family::I, 1, rat(1, 2), None, vec![], vec![]),
        ),
        (
            "I/II-general",
            spec(Family::II, 1, int(1), None, vec![], vec![int(1)]),
        ),
        (
            "I/II-general",
            spec(
                Family::II,
                2,
                rat(1, 3),
                None,
                vec![int(2)],
                vec![rat(7, 2)],
            ),
        ),
        (
            "III-1F1",
            spec(Family::III, 1, int(1), Some(int(3)), vec![], vec![]),
        ),
        (
            "III-2F1",
            spec(
                Family::III,
                1,
                rat(1, 2),
                Some(rat(7, 3)),
                vec![rat(2, 5)],
                vec![],
            ),
        ),
        (
            "IV-1F1",
            spec(Family::IV, 1, rat(-5, 2), Some(rat(-1, 3)), vec![], vec![]),
        ),
        (
            "IV-2F1",
            spec(
                Family::IV,
                1,
                rat(-5, 2),
                Some(rat(-1, 3)),
                vec![rat(2, 5)],
                vec![],
            ),
        ),
        (
            "V-2F0",
            spec(Family::V, 1, rat(1, 2), Some(rat(3, 4)), vec![], vec![]),
        ),
        (
            "V-2F1",
            spec(Family::V, 1, int(1), Some(int(1)), vec![], vec![int(1)]),
        ),
        (
            "V-2F1",
            spec(
                Family::V,
                1,
                rat(1, 3),
                Some(rat(5, 2)),
                vec![],
                vec![rat(3, 7)],
            ),
        ),
        (
            "VI-0F2",
            spec(Family::VI, 1, int(1), Some(rat(-1, 2)), vec![], vec![]),
        ),
        (
            "VI-1F2",
            spec(
                Family::VI,
                1,
                rat(1, 2),
                Some(rat(-1, 3)),
                vec![rat(2, 7)],
                vec![],
            ),
        ),
        (
            "VI-2F2",
            spec(
                Family::VI,
                1,
                rat(1, 2),
                Some(rat(-1, 3)),
                vec![rat(2, 7), int(3)],
                vec![],
            ),
        ),
        (
            "VI-3F2",
            spec(
                Family::VI,
                1,
                rat(1, 2),
                Some(rat(-1, 3)),
                vec![rat(2, 7), int(3), rat(-4, 5)],
                vec![],
            ),
        ),
    ]
}
