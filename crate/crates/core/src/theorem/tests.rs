use super::*;
use crate::exactnum::rat;
use crate::hypergeom::Family;

fn op(s: &str) -> OreOperator {
    s.parse().unwrap()
}

fn legendre() -> FamilySpec {
    FamilySpec::new(Family::V, 1, int(1), Some(int(1)), vec![], vec![int(1)]).unwrap()
}

fn laguerre(upper: Vec<Rational>, lower: Vec<Rational>) -> FamilySpec {
    FamilySpec::new(Family::II, 1, int(1), None, upper, lower).unwrap()
}

/// `∏_{i=j}^k M_i` read as `M_k ⋯ M_j`.
fn descending(factors: impl Iterator<Item = OreOperator>) -> OreOperator {
    let v: Vec<_> = factors.collect();
    OreOperator::product(v.iter().rev())
}

#[test]
fn legendre_factors() {
    let t = Theorem::new(&legendre());
    assert_eq!(
        t.factor_f(&int(0), 2).unwrap(),
        op("(n+2)/(2*n+3)*(S - (n+1)/(n+2))")
    );
    assert_eq!(t.factor_c(1).unwrap(), op("1/(2*n+3)*(S+1)"));
    assert_eq!(t.chain_b_operator().unwrap(), op("1/2*(S-1)"));
    assert_eq!(t.chain_a_operator().unwrap(), OreOperator::one());
    assert_eq!(t.chain_l_operator(2, 1).unwrap(), OreOperator::one());
    assert_eq!(t.chain_l_operator(2, 2).unwrap(), OreOperator::one());
    assert_eq!(t.chain_l_operator(1, 2).unwrap(), t.factor_c(1).unwrap());
}

#[test]
fn legendre_relations() {
    let x = build_relation(&legendre(), RelationKind::X).unwrap();
    assert!(!x.degenerate);
    assert_eq!(x.lhs, op("-S"));
    assert_eq!(x.rhs, op("(n+2)/(2*n+3)*(S - (n+1)/(n+2))*1/2*(S-1)"));
    let d = build_relation(&legendre(), RelationKind::D).unwrap();
    assert_eq!(d.lhs, op("1/(2*(2*n+3))*(S+1)*(S-1)"));
    assert_eq!(d.rhs, op("-S"));
    assert_eq!(d.factored_lhs.len(), 2);
}

#[test]
fn laguerre_factor_shapes() {
    let spec = laguerre(vec![rat(1, 2), int(3)], vec![rat(7, 3)]);
    let t = Theorem::new(&spec);
    for i in 0..4 {
        assert_eq!(t.factor_c(i).unwrap(), op("1/(n+1)*S"));
    }
    for c in [int(0), rat(-2, 5), int(4)] {
        for i in 1..4 {
            let expected = op(&format!("(n+{i}+({c}))/(n+1)*S - 1"));
            assert_eq!(t.factor_f(&c, i).unwrap(), expected);
        }
    }
}

fn laguerre_expected(
    a: &[Rational],
    b: &[Rational],
) -> (OreOperator, OreOperator, OreOperator, OreOperator) {
    let (p, q) = (a.len() as i64, b.len() as i64);
    let c = op("1/(n+1)*S");
    let a_prod =
        descending((1..=p).map(|i| op(&format!("(n+({})+{i})/(n+1)*S - 1", a[i as usize - 1]))));
    let b_prod =
        descending((1..=q).map(|i| op(&format!("(n+({})+{i}-1)/(n+1)*S - 1", b[i as usize - 1]))));
    let cp = |e: i64| c.pow(e.max(0) as u32);
    // S sits left of the C-powers; the other order fails on series data
    let x_lhs = -&(&(&op("S") * &cp(q - p - 1)) * &a_prod);
    let x_rhs =
        &(&(&op("n+1") * &cp(p + 1 - q)) * &op(&format!("(n+{q}+1)/(n+1)*S - 1"))) * &b_prod;
    let d_lhs = &(&op("n+1") * &cp(p + 2 - q)) * &b_prod;
    // at x = 0 with p = 0, q = 1: (n+b)/(n+1)·F'_{n+1} - F'_n = -1 = -F_n, hence the sign
    let d_rhs = -&(&(&op("S") * &cp(q - p - 2)) * &a_prod);
    (x_lhs, x_rhs, d_lhs, d_rhs)
}

#[test]
fn laguerre_relations_match_closed_form() {
    let cases: Vec<(Vec<Rational>, Vec<Rational>)> = vec![
        (vec![], vec![int(2)]),
        (vec![rat(1, 2)], vec![int(3)]),
        (vec![rat(1, 2), int(3)], vec![rat(7, 3)]),
        (vec![int(2)], vec![rat(5, 2), int(4), rat(1, 3)]),
        (vec![], vec![int(2), int(3), int(5), int(7)]),
    ];
    for (a, b) in cases {
        let spec = laguerre(a.clone(), b.clone());
        let (xl, xr, dl, dr) = laguerre_expected(&a, &b);
        let x = build_relation(&spec, RelationKind::X).unwrap();
        let d = build_relation(&spec, RelationKind::D).unwrap();
        assert_eq!((x.lhs, x.rhs), (xl, xr), "X for {a:?} {b:?}");
        let expected = Relation::from_operators(RelationKind::D, dl, dr);
        assert!(d.equivalent(&expected), "D for {a:?} {b:?}");
    }
}

fn special(lambda: Rational, a: Rational, b: Rational) -> FamilySpec {
    let mu = &lambda + int(1);
    FamilySpec::new(Family::III, 1, lambda, Some(mu), vec![a], vec![b]).unwrap()
}

#[test]
fn special_case_degenerate_x() {
    let (l, a, b) = (int(2), rat(1, 2), rat(5, 3));
    let spec = special(l.clone(), a.clone(), b.clone());
    let t = Theorem::new(&spec);
    assert!(matches!(
        t.factor_c(1),
        Err(Error::DegenerateFactor {
            kind: "C",
            index: 1,
            ..
        })
    ));
    assert_eq!(t.degenerate_index(), Some(1));
    let x = t.relation(RelationKind::X).unwrap();
    assert!(x.degenerate);
    let left = op(&format!("S - (n+{l})/(n+{l}+1)"));
    let fa = op(&format!(
        "-((n+{l}+1)*(n+{l}-({a})))/(n+{l})*S + n+{l}+1-({a})"
    ));
    let fb = op(&format!(
        "-((n+{l}+1)*(n+{l}+1-({b})))/(n+{l})*S + n+{l}+2-({b})"
    ));
    assert_eq!(x.factored_lhs[0], left);
    assert_eq!(x.factored_rhs[0], left);
    assert!(x.equivalent(&Relation::from_operators(
        RelationKind::X,
        &left * &fa,
        &left * &fb
    )));
}

#[test]
fn special_case_d_is_regular() {
    let (l, a, b) = (rat(1, 3), int(4), rat(-1, 2));
    let spec = special(l.clone(), a.clone(), b.clone());
    let d = build_relation(&spec, RelationKind::D).unwrap();
    assert!(!d.degenerate);
    let lhs = op(&format!(
        "-((n+{l}+1)*(n+{l}+1-({b})))/(n+{l})*S + n+{l}+2-({b})"
    ));
    let rhs = op(&format!(
        "(n+{l}+1)/(n+{l})*S*(-((n+{l}+1)*(n+{l}-({a})))/(n+{l})*S + n+{l}+1-({a}))"
    ));
    assert!(d.equivalent(&Relation::from_operators(RelationKind::D, lhs, rhs)));
}

#[test]
fn degeneracy_outside_window_never_arises() {
    // μ-λ = 3 > max(p-1, q) = 1: no C_i or B_i involved vanishes
    let spec = FamilySpec::new(
        Family::III,
        1,
        int(1),
        Some(int(4)),
        vec![int(2)],
        vec![int(3)],
    )
    .unwrap();
    let t = Theorem::new(&spec);
    assert_eq!(t.degenerate_index(), None);
    assert!(!t.relation(RelationKind::X).unwrap().degenerate);
    assert!(!t.relation(RelationKind::D).unwrap().degenerate);
}

#[test]
fn monic_pair_canonicalization() {
    let r = Relation::from_operators(RelationKind::X, op("2*n*S + 1"), op("S - 3"));
    let (l, rr) = r.monic_pair().unwrap();
    assert_eq!(l, op("S + 1/(2*n)"));
    assert_eq!(rr, op("1/(2*n)*S - 3/(2*n)"));
    let scaled = Relation::from_operators(
        RelationKind::X,
        op("(n+5)*(2*n*S + 1)"),
        op("(n+5)*(S - 3)"),
    );
    assert!(r.equivalent(&scaled));
    assert!(!r.equivalent(&Relation::from_operators(
        RelationKind::D,
        r.lhs.clone(),
        r.rhs.clone()
    )));
}

#[test]
fn relation_kind_round_trip() {
    for k in [RelationKind::X, RelationKind::D] {
        assert_eq!(k.to_string().parse::<RelationKind>().unwrap(), k);
    }
    assert!("M".parse::<RelationKind>().is_err());
}
