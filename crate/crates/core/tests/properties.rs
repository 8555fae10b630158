mod common;

use std::collections::BTreeMap;

use common::*;
use nchamil::ce::{
    enumerate_tensors, lambda_bracket, lambda_differential, project, LambdaElement, Tensor,
    TruncationProfile, Variant,
};
use nchamil::cli::parse_expression;
use nchamil::graded::{enumerate_words, normalize_word, Generator};
use nchamil::{Parity, SymplecticSpace, Q};
use proptest::prelude::*;

fn four_d() -> SymplecticSpace {
    let g = |n: &str, p| Generator {
        name: n.into(),
        parity: Parity::new(p),
    };
    let i = |v: i64| Q::from_integer(v.into());
    let form = vec![
        vec![i(0), i(1), i(0), i(0)],
        vec![i(-1), i(0), i(0), i(0)],
        vec![i(0), i(0), i(0), i(2)],
        vec![i(0), i(0), i(-2), i(0)],
    ];
    SymplecticSpace::new(
        vec![g("x", 0), g("xi", 1), g("y", 0), g("eta", 1)],
        form,
        Parity::ODD,
    )
    .unwrap()
}

fn pool(s: &SymplecticSpace, v: Variant, p: &TruncationProfile) -> Vec<Tensor> {
    enumerate_tensors(s, v, p, false)
}

fn element(v: Variant, pool: &[Tensor], picks: &[(usize, i64, i64)]) -> LambdaElement {
    let mut e = LambdaElement::zero(v);
    for &(i, a, b) in picks {
        e.add_term(pool[i % pool.len()].clone(), Q::new(a.into(), b.into()));
    }
    e
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    prop::collection::vec((0usize..10_000, -4i64..=4, 1i64..=3), 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_agrees_with_oracle(seq in prop::collection::vec(0u16..4, 1..9)) {
        let s = four_d();
        let lib = normalize_word(&s, &seq).unwrap().map(|(w, n)| (w.letters().to_vec(), n));
        prop_assert_eq!(lib, oracle_normalize(&s, &seq));
    }

    #[test]
    fn raw_bracket_symmetry(i in 0usize..1000, j in 0usize..1000) {
        let s = four_d();
        let ws = enumerate_words(&s, 1, 3);
        let (a, b) = (&ws[i % ws.len()], &ws[j % ws.len()]);
        let ab = library_bracket(&s, a, b);
        let sign = a.parity(&s).koszul(b.parity(&s));
        let ba: BTreeMap<Vec<u16>, Q> = library_bracket(&s, b, a).into_iter().map(|(k, c)| (k, if sign { -c } else { c })).collect();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn render_parse_round_trip(p in picks(), two in any::<bool>()) {
        let s = if two { two_d() } else { one_d() };
        let prof = TruncationProfile::new(5, 2, 1, 1, 6).unwrap();
        let pl = pool(&s, Variant::LambdaGammaNu, &prof);
        let e = element(Variant::LambdaGammaNu, &pl, &p);
        let text = e.render(&s);
        prop_assert_eq!(parse_expression(&text, &s, Variant::LambdaGammaNu).unwrap(), e);
    }

    #[test]
    fn truncation_is_coherent(p in picks(), q in picks()) {
        let s = two_d();
        let big = TruncationProfile::new(5, 3, 1, 1, 8).unwrap();
        let small = TruncationProfile::new(4, 2, 1, 1, 4).unwrap();
        let pl = pool(&s, Variant::LambdaGammaNu, &big);
        let (x, y) = (element(Variant::LambdaGammaNu, &pl, &p), element(Variant::LambdaGammaNu, &pl, &q));
        let keep = |e: &LambdaElement| e.filter(|t| small.keeps(t));
        // whatever the truncation drops cannot come back under d or the bracket
        prop_assert_eq!(keep(&lambda_differential(&s, &x)), keep(&lambda_differential(&s, &keep(&x))));
        prop_assert_eq!(
            keep(&lambda_bracket(&s, &x, &y).unwrap()),
            keep(&lambda_bracket(&s, &keep(&x), &keep(&y)).unwrap())
        );
    }

    #[test]
    fn projections_are_dgla_maps(p in picks(), q in picks(), two in any::<bool>()) {
        let s = if two { two_d() } else { one_d() };
        let prof = TruncationProfile::new(5, 2, 1, 1, 5).unwrap();
        let pl = pool(&s, Variant::LambdaGammaNu, &prof);
        let (x, y) = (element(Variant::LambdaGammaNu, &pl, &p), element(Variant::LambdaGammaNu, &pl, &q));
        for target in [Variant::LambdaGamma, Variant::Hq2] {
            let (px, py) = (project(&x, target).unwrap(), project(&y, target).unwrap());
            prop_assert_eq!(project(&lambda_differential(&s, &x), target).unwrap(), lambda_differential(&s, &px));
            prop_assert_eq!(project(&lambda_bracket(&s, &x, &y).unwrap(), target).unwrap(), lambda_bracket(&s, &px, &py).unwrap());
        }
    }
}

#[test]
fn projection_refuses_to_go_up() {
    let e = LambdaElement::zero(Variant::Hq2);
    assert!(project(&e, Variant::LambdaGammaNu).is_err());
}
