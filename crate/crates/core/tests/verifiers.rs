use num_bigint::BigInt;

use qtc_core::qtpoly::{normalized_in_a, restrict_to_g, twisted_tensor};
use qtc_core::systems::{
    check_irreducibility_shadow, compare_conventions, fermionic_lhs, fermionic_rhs,
    kr_tensor_second_poly, q_character_q, verify_convergence, verify_kr_formula,
    verify_kr_tensor_decomposition, verify_restriction_compatibility, verify_t_system_t,
    verify_t_system_t1,
};
use qtc_core::{Convention, DrinfeldPoly, Engine, LieType, NuConfig, RootVector, TPoly, YMonomial};

fn engine(s: &str) -> Engine {
    Engine::new(LieType::parse(s).unwrap())
}

#[test]
fn t_system_small_cases() {
    let a1 = engine("A1");
    assert!(verify_t_system_t1(&a1, 1, 1).unwrap().pass);
    let a2 = engine("A2");
    assert!(verify_t_system_t1(&a2, 1, 1).unwrap().pass);
    assert!(verify_t_system_t1(&a2, 1, 2).unwrap().pass);
    assert!(verify_t_system_t(&a2, 1, 1).unwrap().pass);
    let a3 = engine("A3");
    assert!(verify_t_system_t(&a3, 2, 1).unwrap().pass);
}

#[test]
fn a1_t_analog_by_hand() {
    // t^{-ε} χ(W_{1,0}) ∗ χ(W_{1,2}) = χ(W_{2,0}) + t^{-1}
    let e = engine("A1");
    let lhs = twisted_tensor(
        &e.fundamental_char(1, 0).unwrap(),
        &e.fundamental_char(1, 2).unwrap(),
    );
    let w2 = e.kr_char_direct(1, 2, 0).unwrap();
    assert_eq!(lhs.len(), 4);
    assert_eq!(lhs.coeff(&YMonomial::one()), TPoly::t_pow(-1));
    for (m, c) in w2.terms() {
        assert_eq!(&lhs.coeff(m), c);
    }
}

#[test]
fn broken_identity_is_reported() {
    // dropping the second term must make the comparison fail
    let e = engine("A2");
    let lhs = twisted_tensor(&e.kr_char_direct(1, 1, 0).unwrap(), &e.kr_char_direct(1, 1, 2).unwrap());
    let rhs = e.kr_char_direct(1, 2, 0).unwrap();
    assert_ne!(lhs.terms(), rhs.terms());
    assert_eq!(lhs.len() - rhs.len(), 3);
}

#[test]
fn tensor_decomposition_cases() {
    let a1 = engine("A1");
    assert!(verify_kr_tensor_decomposition(&a1, 1, 2).unwrap().pass);
    let a2 = engine("A2");
    assert!(verify_kr_tensor_decomposition(&a2, 1, 1).unwrap().pass);
    assert!(verify_kr_tensor_decomposition(&a2, 1, 2).unwrap().pass);
}

#[test]
fn a2_second_simple_is_not_a_tensor_product() {
    let e = engine("A2");
    let p = kr_tensor_second_poly(e.lie_type(), 1, 2);
    assert_eq!(p, DrinfeldPoly::from_roots([(1, 0), (2, 3)]));
    let simple = e.simple_char(&p).unwrap();
    let tensor = twisted_tensor(
        &e.kr_char_direct(1, 1, 0).unwrap(),
        &e.fundamental_char(2, 3).unwrap(),
    );
    assert_ne!(simple, tensor);
    assert!(simple.len() < tensor.len());
}

#[test]
fn convergence_cases() {
    assert!(verify_convergence(&engine("A1"), 1, 4, 2).unwrap().pass);
    assert!(verify_convergence(&engine("A2"), 1, 4, 2).unwrap().pass);
    assert!(verify_convergence(&engine("D4"), 2, 2, 0).unwrap().pass);
}

#[test]
fn y_factor_identity() {
    // χ(W_{k+1,0}) - Y[i,0] χ(W_{k,2}) lives in A-degree > k below the top
    for (ty, i, kmax) in [("A2", 1, 3), ("A3", 2, 2)] {
        let e = engine(ty);
        for k in 1..=kmax {
            let big = e.kr_char_direct(i, k + 1, 0).unwrap();
            let small = e.kr_char_direct(i, k, 2).unwrap();
            let y0 = YMonomial::var(i, 0, 1);
            let lifted = qtc_core::QtCharacter::new(
                e.lie_type().clone(),
                big.highest().clone(),
                small.terms().iter().map(|(m, c)| (m.mul(&y0), c.clone())),
            );
            let diff = big.sub(&lifted);
            let low = normalized_in_a(&diff, k as i64).unwrap();
            assert!(low.is_empty(), "{ty} i={i} k={k}: {low:?}");
        }
    }
}

#[test]
fn q_characters_are_shift_independent() {
    let e = engine("A3");
    for (i, k) in [(1, 2), (2, 2), (3, 1)] {
        let base = q_character_q(&e, i, k).unwrap();
        for s in [1, 5] {
            assert_eq!(restrict_to_g(&e.kr_char_direct(i, k, s).unwrap()), base);
        }
    }
}

#[test]
fn restriction_of_t_system_is_q_system() {
    for (ty, kmax) in [("A2", 3), ("A3", 2)] {
        let e = engine(ty);
        for i in e.lie_type().nodes() {
            for k in 1..=kmax {
                assert!(verify_restriction_compatibility(&e, i, k).unwrap().pass);
            }
        }
    }
}

#[test]
fn irreducibility_shadow_in_a2() {
    let e = engine("A2");
    for k in 1..=3 {
        let r = check_irreducibility_shadow(&e, 1, k).unwrap();
        assert!(r.pass, "{r}");
    }
}

#[test]
fn fermionic_lhs_a1() {
    let e = engine("A1");
    let lhs = fermionic_lhs(&e, &NuConfig::single(1, 1), 3).unwrap();
    let want: Vec<(RootVector, BigInt)> =
        vec![(RootVector(vec![0]), 1.into()), (RootVector(vec![2]), (-1).into())];
    assert_eq!(lhs.into_iter().collect::<Vec<_>>(), want);
}

#[test]
fn fermionic_formula_cases() {
    let a2 = engine("A2");
    assert!(verify_kr_formula(&a2, &NuConfig::single(1, 1), 3).unwrap().pass);
    let mut nu = NuConfig::new();
    nu.add_fragment("1:2=1").unwrap();
    assert!(verify_kr_formula(&a2, &nu, 4).unwrap().pass);
}

#[test]
fn conventions_agree_when_tops_are_nonnegative() {
    for ty in ["A1", "A2", "A3"] {
        let lt = LieType::parse(ty).unwrap();
        for nu in [NuConfig::single(1, 1), NuConfig::single(1, 3), {
            let mut n = NuConfig::new();
            n.set(1, 2, 3);
            n
        }] {
            for d in 0..=4 {
                let c = compare_conventions(&lt, &nu, d);
                if c.tops_nonnegative {
                    assert!(c.agree, "{ty} {nu} D={d}");
                }
            }
        }
    }
    // a disagreement instance is reported, not hidden
    let lt = LieType::parse("A1").unwrap();
    let c = compare_conventions(&lt, &NuConfig::new(), 2);
    assert!(!c.tops_nonnegative);
    assert_eq!(
        c.gamma,
        fermionic_rhs(&lt, &NuConfig::new(), 2, Convention::Gamma)
    );
}
