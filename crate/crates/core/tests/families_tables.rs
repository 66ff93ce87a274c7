use horokit_core::diophantine::{is_member, SolParams};
use horokit_core::families::{
    closed_form_members, family_covers, family_element, family_elements, fib, is_markov,
    minus_vs_matrix, vajda, Family, FamilyElement, OrbitOp,
};
use horokit_core::BigInt;

#[test]
fn fibonacci_recurrence_and_negative_indices() {
    assert_eq!(fib(0), BigInt::from(0));
    assert_eq!(fib(1), BigInt::from(1));
    assert_eq!(fib(-1), BigInt::from(1));
    assert_eq!(fib(-2), BigInt::from(-1));
    for m in -50i64..=50 {
        assert_eq!(fib(m + 1), fib(m) + fib(m - 1), "m={m}");
        let sign = if (m + 1).rem_euclid(2) == 0 { 1 } else { -1 };
        assert_eq!(fib(-m), fib(m) * sign, "m={m}");
    }
    assert_eq!(fib(100), "354224848179261915075".parse::<BigInt>().unwrap());
}

#[test]
fn vajda_on_index_cube() {
    for r in -20..=20 {
        for m in -20..=20 {
            for j in -20..=20 {
                assert!(vajda(r, m, j), "({r},{m},{j})");
            }
        }
    }
}

#[test]
fn matrix_recurrence_matches_closed_form() {
    for k in 0..=30u32 {
        let s = minus_vs_matrix(k);
        let k = i64::from(k);
        assert_eq!((s.x, s.y), (-fib(2 * k - 1), fib(2 * k + 1)));
    }
}

#[test]
fn markov_triples_from_odd_fibonacci() {
    for m in 0..=30i64 {
        assert!(is_markov(&BigInt::from(1), &fib(2 * m - 1), &fib(2 * m + 1)), "m={m}");
    }
    assert!(!is_markov(&BigInt::from(1), &BigInt::from(2), &BigInt::from(3)));
    assert!(!is_markov(&BigInt::from(0), &BigInt::from(0), &BigInt::from(0)));
}

#[test]
fn family_elements_are_members() {
    for family in [Family::S, Family::T1, Family::T2, Family::Finite] {
        let params = family.params();
        let elements = family_elements(family, 30);
        assert!(!elements.is_empty());
        for e in elements {
            assert!(is_member(&params, &family_element(&e)), "{e:?}");
        }
    }
}

#[test]
fn large_index_needs_wide_integers() {
    let e = FamilyElement::new(Family::S, 30, OrbitOp::Id).unwrap();
    let s = family_element(&e);
    assert!(s.y > BigInt::from(i64::MAX >> 22));
    assert_eq!(s.y, fib(61));
}

#[test]
fn orbit_restrictions() {
    assert!(FamilyElement::new(Family::T1, 3, OrbitOp::Swap).is_err());
    assert!(FamilyElement::new(Family::T2, 3, OrbitOp::NegSwap).is_err());
    assert!(FamilyElement::new(Family::S, 3, OrbitOp::NegSwap).is_ok());
    assert!(FamilyElement::new(Family::Finite, 3, OrbitOp::Id).is_err());
}

#[test]
fn coverage_for_all_parameter_sets() {
    for n in [-3, -1, 1, 3] {
        for eps in [1, -1] {
            for d2 in [1, -1] {
                for d1 in [1, -1] {
                    let p = SolParams::from_ints(n, eps, d2, d1).unwrap();
                    assert!(family_covers(&p, 400).unwrap(), "{p}");
                }
            }
        }
    }
}

#[test]
fn swapped_sign_pair_is_the_swap() {
    let p = SolParams::from_ints(1, -1, 1, -1).unwrap();
    let q = p.swapped();
    let swapped: std::collections::BTreeSet<_> = closed_form_members(&q, 100)
        .iter()
        .map(horokit_core::diophantine::sym_swap)
        .collect();
    assert_eq!(closed_form_members(&p, 100), swapped);
}
