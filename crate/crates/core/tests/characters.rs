use std::collections::BTreeMap;

use proptest::prelude::*;

use qtc_core::qtpoly::{
    bar_char, in_k_t, multiply_standard, normalized_in_a, parse_qtc, q_product, restrict_to_g,
    specialize_t1, write_qtc,
};
use qtc_core::root_data::irreducible_character;
use qtc_core::{DrinfeldPoly, Engine, LieType, QtCharacter, TPoly, Weight, YMonomial};

fn engine(s: &str) -> Engine {
    Engine::new(LieType::parse(s).unwrap())
}

fn mono(s: &str) -> YMonomial {
    s.parse().unwrap()
}

#[test]
fn a3_node_two_fundamental() {
    let e = engine("A3");
    let f = e.fundamental_char(2, 0).unwrap();
    assert_eq!(f.len(), 6);
    assert!(f.terms().values().all(TPoly::is_one));
    let g = restrict_to_g(&f);
    assert_eq!(g.total_mass(), 6);
    let want = irreducible_character(e.lie_type(), &Weight(vec![0, 1, 0]));
    assert_eq!(g.terms(), &want);
}

#[test]
fn e6_minuscule_fundamental() {
    let e = engine("E6");
    let f = e.fundamental_char(1, 0).unwrap();
    assert_eq!(f.len(), 27);
    let g = restrict_to_g(&f);
    assert_eq!(g.total_mass(), 27);
    assert!(g.terms().values().all(|&c| c == 1));
}

#[test]
fn d4_fundamentals_have_expected_dimensions() {
    let e = engine("D4");
    let dims: Vec<i64> = (1..=4)
        .map(|i| specialize_t1(&e.fundamental_char(i, 0).unwrap()).values().sum())
        .collect();
    // the trivalent node carries the adjoint plus a trivial summand
    assert_eq!(dims, vec![8, 29, 8, 8]);
    let f = e.fundamental_char(2, 0).unwrap();
    assert!(f.terms().values().all(|c| c.is_bar_invariant() && c.has_nonneg_coeffs()));
    assert!(f.terms().values().any(|c| c.eval_at_one() == 2));
}

#[test]
fn kr_direct_matches_simple_character() {
    for (ty, kmax) in [("A1", 4), ("A2", 3), ("A3", 2), ("D4", 2)] {
        let e = engine(ty);
        for i in e.lie_type().nodes() {
            for k in 1..=kmax {
                let p = DrinfeldPoly::kr(i, k, 0);
                assert_eq!(
                    e.simple_char(&p).unwrap(),
                    e.kr_char_direct(i, k, 0).unwrap(),
                    "{ty} i={i} k={k}"
                );
            }
        }
    }
}

#[test]
fn a1_kr_monomials_are_the_expected_strings() {
    let e = engine("A1");
    let k = 4;
    let chi = e.kr_char_direct(1, k, 0).unwrap();
    for s in 0..=k {
        let mut m = YMonomial::one();
        for t in 0..s {
            m = m.mul(&YMonomial::var(1, 2 * t as i32, 1));
        }
        for t in s + 1..=k {
            m = m.mul(&YMonomial::var(1, 2 * t as i32, -1));
        }
        assert!(chi.coeff(&m).is_one(), "{m}");
    }
    assert_eq!(chi.len(), k + 1);
}

#[test]
fn simple_of_shifted_fundamental() {
    let e = engine("A2");
    let p = DrinfeldPoly::fundamental(2, 1);
    assert_eq!(
        e.simple_char(&p).unwrap(),
        e.fundamental_char(2, 0).unwrap().shifted(1)
    );
    let res = e.kl_decompose(&DrinfeldPoly::fundamental(1, 0)).unwrap();
    assert_eq!(res.factors.len(), 1);
    assert_eq!(res.simple(), &e.standard_char(&DrinfeldPoly::fundamental(1, 0)).unwrap());
}

#[test]
fn computed_characters_lie_in_k_t() {
    for (ty, kmax) in [("A2", 3), ("A3", 2), ("D4", 2)] {
        let e = engine(ty);
        for i in e.lie_type().nodes() {
            for k in 1..=kmax {
                let kr = e.kr_char_direct(i, k, 0).unwrap();
                assert!(in_k_t(&kr.untwisted().unwrap()), "{ty} KR i={i} k={k}");
            }
            let p = DrinfeldPoly::kr(i, 2, 0).product(&DrinfeldPoly::kr(i, 1, 4));
            let res = e.kl_decompose(&p).unwrap();
            for (q, chi) in &res.simples {
                assert!(in_k_t(&chi.untwisted().unwrap()), "{ty} simple {q:?}");
            }
        }
    }
}

#[test]
fn standard_products_are_associative_and_multiplicative_at_one() {
    let e = engine("A2");
    let f = |i, s| e.fundamental_char(i, s).unwrap();
    let (a, b, c) = (f(1, 0), f(2, 1), f(1, 2));
    let left = multiply_standard(&multiply_standard(&a, &b).unwrap(), &c).unwrap();
    let right = multiply_standard(&a, &multiply_standard(&b, &c).unwrap()).unwrap();
    assert_eq!(left, right);
    assert!(left.coeff(left.highest()).is_one());
    let at_one = q_product(&q_product(&specialize_t1(&a), &specialize_t1(&b)), &specialize_t1(&c));
    assert_eq!(specialize_t1(&left), at_one);
}

#[test]
fn normalized_truncations() {
    let e = engine("A2");
    let kr = e.kr_char_direct(1, 2, 0).unwrap();
    let n = normalized_in_a(&kr, 2).unwrap();
    assert_eq!(n.len(), 4);
    let n0 = normalized_in_a(&kr, 0).unwrap();
    assert_eq!(n0.len(), 1);
    assert!(n0.values().all(TPoly::is_one));
}

#[test]
fn kr_characters_are_bar_fixed() {
    let e = engine("A3");
    for i in 1..=3 {
        let kr = e.kr_char_direct(i, 2, 0).unwrap();
        assert_eq!(bar_char(&kr), kr);
    }
}

#[test]
fn files_round_trip() {
    let e = engine("D4");
    let chi = e.kr_char_direct(1, 2, 3).unwrap();
    let text = write_qtc(&chi);
    assert_eq!(parse_qtc(&text).unwrap(), chi);
    assert_eq!(write_qtc(&parse_qtc(&text).unwrap()), text);
}

#[test]
fn standard_character_from_unsorted_roots() {
    let e = engine("A2");
    let p = DrinfeldPoly::from_roots([(1, 2), (2, 1), (1, 0)]);
    let chi = e.standard_char(&p).unwrap();
    assert_eq!(chi.highest(), &mono("Y[1,0] Y[1,2] Y[2,1]"));
    assert_eq!(specialize_t1(&chi).values().sum::<i64>(), 27);
}

fn arb_char() -> impl Strategy<Value = QtCharacter> {
    let term = (
        prop::collection::vec((1usize..=2, -2i32..5, -2i32..3), 0..4),
        prop::collection::vec((-3i32..4, -3i64..4), 0..3),
    );
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        let lt = LieType::parse("A2").unwrap();
        QtCharacter::new(
            lt,
            YMonomial::one(),
            terms.into_iter().map(|(f, c)| {
                (
                    YMonomial::from_factors(
                        f.into_iter()
                            .map(|(i, s, e)| (qtc_core::YVar::new(i, s), e)),
                    ),
                    TPoly::from_terms(c),
                )
            }),
        )
    })
}

proptest! {
    #[test]
    fn bar_is_an_involution_on_characters(chi in arb_char()) {
        prop_assert_eq!(bar_char(&bar_char(&chi)), chi);
    }

    #[test]
    fn shifts_commute_with_specialization(chi in arb_char(), ds in -4i32..5) {
        let a: BTreeMap<YMonomial, i64> = specialize_t1(&chi.shifted(ds));
        let b: BTreeMap<YMonomial, i64> = specialize_t1(&chi)
            .into_iter()
            .map(|(m, c)| (m.shifted(ds), c))
            .collect();
        prop_assert_eq!(a, b);
    }
}
