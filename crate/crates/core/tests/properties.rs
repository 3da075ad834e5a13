use proptest::prelude::*;

use ddrel::exactnum::{int, pochhammer, Poly, RatFunc, Rational};
use ddrel::hypergeom::{Family, FamilySpec, SeriesInstance, TruncSeries};
use ddrel::json::{operator_from_json, operator_to_json, relation_from_json, relation_to_json};
use ddrel::lemmas::{build_qp, qp_coeffs, remainder_formula, remainder_pair, verify_lemma1};
use ddrel::mixed::OreFraction;
use ddrel::ore::{Applied, OreOperator};
use ddrel::theorem::{build_relation, RelationKind};
use ddrel::verify::sweep::{sweep_specs, SweepBounds};
use ddrel::verify::{check_relation, perturb, recheck_witness, CheckConfig};

fn rational(h: i64) -> impl Strategy<Value = Rational> {
    (-h..=h, 1..=h).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn nonzero_rational(h: i64) -> impl Strategy<Value = Rational> {
    rational(h).prop_filter("nonzero", |r| *r != int(0))
}

fn poly(deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(5), 0..=deg + 1).prop_map(Poly::new)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(2), poly(2)).prop_filter_map("nonzero denominator", |(n, d)| RatFunc::try_new(n, d))
}

fn operator(deg: usize) -> impl Strategy<Value = OreOperator> {
    prop::collection::vec(ratfunc(), 1..=deg + 1)
        .prop_map(|cs| OreOperator::from_terms(cs.into_iter().enumerate()))
}

fn nonzero_operator(deg: usize) -> impl Strategy<Value = OreOperator> {
    operator(deg).prop_filter("nonzero", |o| !o.is_zero())
}

fn distinct(v: &[Rational]) -> bool {
    v.iter().enumerate().all(|(i, x)| !v[..i].contains(x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn rational_field_axioms(a in rational(50), b in rational(50), c in rational(50)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        if a != int(0) {
            prop_assert_eq!(&a / &a, int(1));
        }
    }

    #[test]
    fn shifts_compose(f in ratfunc(), d1 in -6i64..6, d2 in -6i64..6) {
        prop_assert_eq!(f.shift(d1).shift(d2), f.shift(d1 + d2));
    }

    #[test]
    fn canonical_forms_are_idempotent(f in ratfunc(), l in nonzero_operator(2)) {
        prop_assert_eq!(RatFunc::new(f.num().clone(), f.den().clone()), f.clone());
        let m = l.monic().unwrap();
        prop_assert_eq!(m.monic().unwrap(), m.clone());
        prop_assert!(m.leading().unwrap().is_one());
    }

    #[test]
    fn ore_product_is_associative_and_distributive(
        a in operator(1), b in operator(1), c in operator(1)
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn right_division_recomposes(l in operator(3), m in nonzero_operator(2)) {
        let (q, r) = l.rdivmod(&m).unwrap();
        prop_assert_eq!(&(&q * &m) + &r, l);
        prop_assert!(r.degree().is_none_or(|d| d < m.degree().unwrap()));
    }

    #[test]
    fn gcrd_and_lclm_divide(a in nonzero_operator(2), b in nonzero_operator(2)) {
        let g = OreOperator::gcrd(&a, &b).unwrap();
        prop_assert!(a.rrem(&g).unwrap().is_zero());
        prop_assert!(b.rrem(&g).unwrap().is_zero());
        let res = OreOperator::lclm_with_cofactors(&a, &b).unwrap();
        prop_assert!(res.lclm.rrem(&a).unwrap().is_zero());
        prop_assert!(res.lclm.rrem(&b).unwrap().is_zero());
        prop_assert_eq!(&res.left * &a, res.lclm.clone());
        prop_assert_eq!(&res.right * &b, res.lclm.clone());
        prop_assert!(res.lclm.degree().unwrap() <= a.degree().unwrap() + b.degree().unwrap());
    }

    #[test]
    fn action_is_compatible_with_products(a in operator(1), b in operator(1), n0 in 0i64..4) {
        let spec = FamilySpec::new(Family::V, 1, int(1), Some(int(1)), vec![], vec![int(1)]).unwrap();
        let seq = |n: i64| spec.series(n, 5);
        let value = |r: Applied| match r {
            Applied::Value(s) => Some(s),
            Applied::Pole { .. } => None,
        };
        let whole = value((&a * &b).apply(seq, n0).unwrap());
        let inner = |n: i64| match b.apply(seq, n)? {
            Applied::Value(s) => Ok(s),
            Applied::Pole { .. } => Err(ddrel::Error::InvalidArgument("pole".into())),
        };
        let staged = a.apply(inner, n0).ok().and_then(value);
        if let (Some(w), Some(s)) = (whole, staged) {
            prop_assert_eq!(w, s);
        }
    }

    #[test]
    fn affine_scaling_inverts(
        cs in prop::collection::vec(rational(9), 1..8), beta in nonzero_rational(6)
    ) {
        let f = TruncSeries::new(cs);
        let g = f.affine_compose(&int(0), &beta).affine_compose(&int(0), &(int(1) / &beta));
        prop_assert_eq!(g, f);
    }

    #[test]
    fn coefficient_stream_matches_pochhammer_products(
        upper in prop::collection::vec(rational(9), 0..3),
        lower in prop::collection::vec(rational(9), 0..3),
    ) {
        let Ok(inst) = SeriesInstance::new(upper.clone(), lower.clone()) else {
            return Ok(());
        };
        let s = inst.coeff_stream(30);
        let mut fact = int(1);
        for k in 0..=30u32 {
            if k > 0 {
                fact *= int(k as i64);
            }
            let num: Rational = upper.iter().map(|a| pochhammer(a, k)).product();
            let den: Rational = lower.iter().map(|b| pochhammer(b, k)).product();
            prop_assert_eq!(s.coeff(k as usize), &(num / (den * &fact)));
        }
    }

    #[test]
    fn product_of_factors_is_their_lclm(a in prop::collection::vec(rational(9), 1..4)) {
        prop_assume!(distinct(&a));
        let rep = verify_lemma1(&a).unwrap();
        prop_assert!(rep.equal);
        let q = build_qp(&a);
        prop_assert_eq!(q.degree(), Some(a.len()));
        for ai in &a {
            prop_assert!(q.rrem(&build_qp(std::slice::from_ref(ai))).unwrap().is_zero());
        }
    }

    #[test]
    fn remainder_closed_form(a in prop::collection::vec(rational(9), 1..4), b in rational(9)) {
        let (formula, division) = remainder_pair(&a, &b).unwrap();
        prop_assert_eq!(&formula, &division);
        prop_assert_eq!(formula, remainder_formula(&a, &b));
    }

    #[test]
    fn product_coefficients_closed_form(a in prop::collection::vec(rational(3), 1..5)) {
        let q = build_qp(&a);
        for (m, c) in qp_coeffs(&a).iter().enumerate() {
            prop_assert_eq!(c, &q.coeff(m));
        }
    }

    #[test]
    fn fraction_laws(
        d in prop::collection::vec(nonzero_operator(1), 3),
        n in prop::collection::vec(operator(1), 3),
    ) {
        let f: Vec<_> = d.iter().zip(&n).map(|(d, n)| OreFraction::new(d.clone(), n.clone()).unwrap()).collect();
        let ab = f[0].add(&f[1]).unwrap();
        prop_assert!(ab.same_as(&f[1].add(&f[0]).unwrap()).unwrap());
        let left = ab.add(&f[2]).unwrap();
        let right = f[0].add(&f[1].add(&f[2]).unwrap()).unwrap();
        prop_assert!(left.same_as(&right).unwrap());
        let left = f[0].mul(&f[1]).unwrap().mul(&f[2]).unwrap();
        let right = f[0].mul(&f[1].mul(&f[2]).unwrap()).unwrap();
        prop_assert!(left.same_as(&right).unwrap());
    }

    #[test]
    fn exchange_lclm_is_a_left_multiple(a in nonzero_operator(2), b in nonzero_operator(2)) {
        let l = OreOperator::lclm(&a, &b).unwrap();
        prop_assert!(l.rrem(&a).unwrap().is_zero());
        prop_assert!(l.rrem(&b).unwrap().is_zero());
    }

    #[test]
    fn operator_json_round_trip(l in operator(3)) {
        let v = operator_to_json(&l);
        prop_assert_eq!(operator_from_json(&v).unwrap(), l.clone());
        let text: OreOperator = l.to_string().parse().unwrap();
        prop_assert_eq!(text, l);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn raising_the_order_keeps_passes(seed in 0u64..1000) {
        let spec = sweep_specs(seed, 1, &SweepBounds::default()).remove(0);
        for kind in [RelationKind::X, RelationKind::D] {
            let rel = build_relation(&spec, kind).unwrap();
            let low = check_relation(&rel, &spec, &CheckConfig::new(0, 4, 8).unwrap()).unwrap();
            let high = check_relation(&rel, &spec, &CheckConfig::new(0, 4, 13).unwrap()).unwrap();
            prop_assert!(low.is_pass());
            prop_assert!(high.is_pass());
        }
    }

    #[test]
    fn witnesses_recheck_at_their_index(seed in 0u64..1000, power in 0usize..3, rhs in any::<bool>()) {
        let spec = sweep_specs(seed, 1, &SweepBounds::default()).remove(0);
        let rel = build_relation(&spec, RelationKind::X).unwrap();
        let bad = perturb(&rel, rhs, power, &int(1));
        let cfg = CheckConfig::new(0, 6, 10).unwrap();
        let rep = check_relation(&bad, &spec, &cfg).unwrap();
        let w = rep.first_failure().expect("perturbation is caught").clone();
        prop_assert_eq!(recheck_witness(&bad, &spec, &cfg, w.n).unwrap(), Some(w));
    }

    #[test]
    fn relation_json_round_trip(seed in 0u64..1000) {
        let spec = sweep_specs(seed, 1, &SweepBounds::default()).remove(0);
        for kind in [RelationKind::X, RelationKind::D] {
            let rel = build_relation(&spec, kind).unwrap();
            let v = relation_to_json(&rel);
            let back = relation_from_json(&v).unwrap();
            prop_assert_eq!(relation_to_json(&back), v);
            prop_assert_eq!(back, rel);
        }
    }
}
