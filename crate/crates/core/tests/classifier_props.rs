use horokit_core::classifier::{
    ball_pair_datum, ball_pair_via_datum, ball_pairs, classify_one, classify_pair, family_ball,
    lens_boundary, lens_oriented_equal, BallFamily, ClassificationResult, CobordismKind,
    RationalBall,
};
use horokit_core::diophantine::{enumerate_box, SolParams};
use horokit_core::families::fib;
use horokit_core::hurwitz::{HorizontalDatum, MoveKind};
use horokit_core::torus::{CurveClass, Sign};
use horokit_core::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// Every datum with `|p|, |q| ≤ bound` whose `(x, y)` lies in a box of
/// solutions, with `q₁` swept and `q₂` solved from `n`.
fn valid_data(bound: i64) -> Vec<HorizontalDatum> {
    let mut out = Vec::new();
    for n in [-3i64, -1, 1, 3] {
        for eps in [1, -1] {
            for d2 in [1, -1] {
                for d1 in [1, -1] {
                    let p = SolParams::from_ints(n, eps, d2, d1).unwrap();
                    for s in enumerate_box(&p, bound as u64).unwrap() {
                        let (x, y) = (i64::try_from(&s.x).unwrap(), i64::try_from(&s.y).unwrap());
                        if x == 0 {
                            continue;
                        }
                        for q1 in -bound..=bound {
                            // n = y q₁ − x q₂
                            let num = y * q1 - n;
                            if num % x != 0 {
                                continue;
                            }
                            let q2 = num / x;
                            if q2.abs() > bound || x.gcd(&q1) != 1 || y.gcd(&q2) != 1 {
                                continue;
                            }
                            let d = HorizontalDatum::new(
                                CurveClass::new(x, q1).unwrap(),
                                Sign::from_int(d1).unwrap(),
                                CurveClass::new(y, q2).unwrap(),
                                Sign::from_int(d2).unwrap(),
                            );
                            if d.params().ok() == Some(p.clone()) {
                                out.push(d);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn key(r: &ClassificationResult) -> (CobordismKind, Sign, Option<Sign>) {
    (r.kind, r.orientation, r.epsilon)
}

fn mirror(d: &HorizontalDatum) -> HorizontalDatum {
    let m = |c: &CurveClass| CurveClass::new(c.p().clone(), -c.q()).unwrap();
    HorizontalDatum::new(m(&d.g1), -d.d1, m(&d.g2), -d.d2)
}

#[test]
fn classification_is_move_invariant() {
    let data = valid_data(20);
    assert!(data.len() > 100);
    for d in &data {
        let r = classify_pair(d).unwrap();
        for k in [MoveKind::Up, MoveKind::Down] {
            assert_eq!(key(&classify_pair(&d.apply(k)).unwrap()), key(&r), "{d:?} {k:?}");
        }
    }
}

#[test]
fn valid_data_only_have_n_one_or_three() {
    for d in valid_data(20) {
        let n = d.n().abs();
        assert!(n == BigInt::from(1) || n == BigInt::from(3));
    }
}

#[test]
fn mirror_reverses_orientation() {
    for d in valid_data(12) {
        let r = classify_pair(&d).unwrap();
        let m = classify_pair(&mirror(&d)).unwrap();
        assert_eq!(m.epsilon, r.epsilon.map(|e| -e));
        assert_eq!(m.orientation, -r.orientation);
        let flip = |p: &(RationalBall, RationalBall)| (p.0.reversed(), p.1.reversed());
        assert_eq!(m.ball_pair, r.ball_pair.as_ref().map(flip), "{d:?}");
    }
}

#[test]
fn single_curve_mirror() {
    for p in 1i64..=30 {
        for q in -30i64..=30 {
            if p.gcd(&q) != 1 {
                continue;
            }
            for delta in [Sign::Plus, Sign::Minus] {
                let r = classify_one(&CurveClass::new(p, q).unwrap(), delta);
                let m = classify_one(&CurveClass::new(p, -q).unwrap(), -delta);
                assert_eq!(m.kind, r.kind);
                assert_eq!(m.ball, r.ball.as_ref().map(RationalBall::reversed), "({p},{q})");
            }
        }
    }
}

#[test]
fn ball_pair_boundaries_are_lens_spaces() {
    for m in 0..=15u32 {
        for family in [BallFamily::B, BallFamily::BPrime] {
            let (hi, lo) = ball_pairs(m, family);
            for b in [hi, lo] {
                let l = lens_boundary(&b);
                assert_eq!(l.a(), &(b.p() * b.p()));
                assert!(l.a().gcd(l.b()) == BigInt::from(1));
            }
        }
    }
}

#[test]
fn q_and_p_minus_q_have_equal_boundaries() {
    for p in 2i64..=50 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let b1 = horokit_core::classifier::ball_boundary(&p.into(), &q.into(), Sign::Plus).unwrap();
            let b2 = horokit_core::classifier::ball_boundary(&p.into(), &(p - q).into(), Sign::Plus).unwrap();
            assert!(lens_oriented_equal(&b1, &b2), "({p},{q})");
        }
    }
}

#[test]
fn reversed_ball_boundary_never_matches() {
    for p in 2i64..=50 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let (pb, qb) = (BigInt::from(p), BigInt::from(q));
            let plus = horokit_core::classifier::ball_boundary(&pb, &qb, Sign::Plus).unwrap();
            let minus = horokit_core::classifier::ball_boundary(&pb, &qb, Sign::Minus).unwrap();
            assert!(!lens_oriented_equal(&plus, &minus), "({p},{q})");
        }
    }
}

#[test]
fn routes_agree() {
    for m in 0..=15u32 {
        for family in [BallFamily::B, BallFamily::BPrime] {
            let d = ball_pair_datum(m, family).expect("realizable");
            assert!(classify_pair(&d).is_ok());
            assert_eq!(ball_pair_via_datum(m, family).unwrap(), ball_pairs(m, family), "m={m} {family:?}");
        }
    }
}

#[test]
fn even_index_primed_balls() {
    for k in 1..=7i64 {
        let b = family_ball(BallFamily::BPrime, 2 * k);
        let shifted = RationalBall::new(fib(2 * k + 1), fib(2 * k - 1), Sign::Plus).unwrap();
        assert_eq!(b, shifted, "k={k}");
    }
}

#[test]
fn table_rows() {
    let b = family_ball(BallFamily::B, 3);
    assert_eq!((b.p().clone(), b.q().clone()), (BigInt::from(5), BigInt::from(1)));
    assert_eq!(lens_boundary(&b).to_string(), "L(25,4)");
    let b = family_ball(BallFamily::BPrime, 2);
    assert_eq!(lens_boundary(&b).to_string(), "L(4,1)");
}

proptest! {
    #[test]
    fn classify_one_boundary_matches_ball(p in 2i64..200, q in -400i64..400, plus in any::<bool>()) {
        prop_assume!(p.gcd(&q) == 1);
        let delta = if plus { Sign::Plus } else { Sign::Minus };
        let r = classify_one(&CurveClass::new(p, q).unwrap(), delta);
        let b = r.ball.unwrap();
        prop_assert_eq!(b.p(), &BigInt::from(p));
        prop_assert!(!b.q().is_zero());
        prop_assert_eq!(r.orientation, b.orientation());
    }
}
