use horokit_core::torus::{
    intersect, monodromy, twist_apply, twist_matrix, CurveClass, MonodromyMatrix, Sign,
    SignedTwist,
};
use horokit_core::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn curve(bound: i64) -> impl Strategy<Value = CurveClass> {
    (-bound..=bound, -bound..=bound)
        .prop_filter("primitive", |(p, q)| p.gcd(q) == 1)
        .prop_map(|(p, q)| CurveClass::new(p, q).unwrap())
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

fn twist(bound: i64) -> impl Strategy<Value = SignedTwist> {
    (curve(bound), sign()).prop_map(|(c, s)| SignedTwist::new(c, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn intersection_is_antisymmetric(a in curve(1000), b in curve(1000)) {
        prop_assert_eq!(intersect(&a, &b), -intersect(&b, &a));
    }

    #[test]
    fn twist_matrix_is_unimodular_with_inverse(t in twist(1000)) {
        let m = twist_matrix(&t);
        prop_assert_eq!(m.determinant(), BigInt::from(1));
        prop_assert_eq!(&m * &twist_matrix(&t.inverse()), MonodromyMatrix::identity());
    }

    #[test]
    fn matrix_agrees_with_apply(t in twist(200), a in curve(200)) {
        prop_assert_eq!(twist_matrix(&t).apply(&a), twist_apply(&t, &a));
    }

    #[test]
    fn twist_preserves_intersection(t in twist(200), a in curve(200), b in curve(200)) {
        let (ta, tb) = (twist_apply(&t, &a), twist_apply(&t, &b));
        prop_assert_eq!(intersect(&ta, &tb), intersect(&a, &b));
    }

    #[test]
    fn twist_ignores_curve_orientation(t in twist(200), a in curve(200)) {
        let flipped = SignedTwist::new(t.curve.reversed(), t.sign);
        prop_assert_eq!(twist_apply(&t, &a), twist_apply(&flipped, &a));
        prop_assert_eq!(twist_matrix(&t), twist_matrix(&flipped));
    }

    #[test]
    fn monodromy_applies_first_twist_first(ts in prop::collection::vec(twist(30), 1..5), a in curve(30)) {
        let stepwise = ts.iter().fold(a.clone(), |acc, t| twist_apply(t, &acc));
        prop_assert_eq!(monodromy(&ts).apply(&a), stepwise);
    }

    #[test]
    fn canonical_form_is_idempotent(a in curve(1000)) {
        let c = a.canonical();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert!(c == a || c == a.reversed());
    }
}

#[test]
fn basis_pairing() {
    assert_eq!(intersect(&CurveClass::mu(), &CurveClass::lambda()), BigInt::from(1));
}

#[test]
fn twist_about_mu_shears_lambda() {
    let t = SignedTwist::new(CurveClass::mu(), Sign::Plus);
    // λ + (μ·λ)μ
    assert_eq!(t.apply(&CurveClass::lambda()), CurveClass::new(1, 1).unwrap());
    assert_eq!(t.inverse().apply(&CurveClass::lambda()), CurveClass::new(-1, 1).unwrap());
}

#[test]
fn non_primitive_classes_are_rejected() {
    assert!(CurveClass::new(2, 4).is_err());
    assert!(CurveClass::new(0, 0).is_err());
    assert!(CurveClass::new(0, -1).is_ok());
}
