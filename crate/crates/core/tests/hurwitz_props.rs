use horokit_core::diophantine::{x_hat, y_hat, Solution};
use horokit_core::hurwitz::{
    apply_move, datum_reduce, hurwitz_equivalent, move_down, move_up, Factorization,
    HorizontalDatum, Move, MoveKind,
};
use horokit_core::torus::{CurveClass, Sign, SignedTwist};
use horokit_core::Error;
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

fn factorization(max_len: usize) -> impl Strategy<Value = Factorization> {
    prop::collection::vec(
        (curve(50), sign()).prop_map(|(c, s)| SignedTwist::new(c, s)),
        2..=max_len,
    )
    .prop_map(Factorization::new)
}

fn with_move(max_len: usize) -> impl Strategy<Value = (Factorization, Move)> {
    factorization(max_len).prop_flat_map(|f| {
        let last = f.len() - 2;
        (Just(f), 0..=last, any::<bool>())
            .prop_map(|(f, i, up)| (f, if up { Move::up(i) } else { Move::down(i) }))
    })
}

fn tw(p: i64, q: i64, s: Sign) -> SignedTwist {
    SignedTwist::new(CurveClass::new(p, q).unwrap(), s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn moves_preserve_monodromy((f, m) in with_move(6)) {
        let g = apply_move(&f, m).unwrap();
        prop_assert_eq!(g.monodromy(), f.monodromy());
        prop_assert_eq!(g.sign_product(), f.sign_product());
    }

    #[test]
    fn moves_are_mutually_inverse((f, m) in with_move(6)) {
        let there = apply_move(&f, m).unwrap();
        prop_assert_eq!(apply_move(&there, m.inverse()).unwrap(), f);
    }

    #[test]
    fn triple_tracking(g1 in curve(50), g2 in curve(50), d1 in sign(), d2 in sign()) {
        let d = HorizontalDatum::new(g1, d1, g2, d2);
        let params = horokit_core::diophantine::SolParams::new(d.n(), Sign::Minus, d2, d1);
        let s = d.solution();

        let up = d.apply(MoveKind::Up);
        prop_assert_eq!(up.n(), d.n());
        prop_assert_eq!(up.solution(), Solution::new(s.y.clone(), x_hat(&params, &s)));

        let down = d.apply(MoveKind::Down);
        prop_assert_eq!(down.n(), d.n());
        prop_assert_eq!(down.solution(), Solution::new(y_hat(&params, &s), s.x.clone()));
    }

    #[test]
    fn epsilon_is_move_invariant(g1 in curve(50), g2 in curve(50), d1 in sign(), d2 in sign()) {
        let d = HorizontalDatum::new(g1, d1, g2, d2);
        let eps = d.epsilon().ok();
        for k in [MoveKind::Up, MoveKind::Down] {
            prop_assert_eq!(d.apply(k).epsilon().ok(), eps);
        }
    }

    #[test]
    fn bfs_finds_scrambled_factorizations((f, m) in with_move(4), i in 0usize..3, up in any::<bool>()) {
        let g = apply_move(&f, m).unwrap();
        let i = i % (g.len() - 1);
        let g = if up { move_up(&g, i) } else { move_down(&g, i) }.unwrap();
        let witness = hurwitz_equivalent(&f, &g, 4).unwrap();
        prop_assert!(witness.is_some());
        let moved = witness.unwrap().iter().try_fold(f.clone(), |acc, &m| apply_move(&acc, m)).unwrap();
        prop_assert_eq!(moved.canonical(), g.canonical());
    }
}

#[test]
fn worked_example_within_depth_eight() {
    use Sign::{Minus, Plus};
    // top level first: (τ_λ, τ_μ, τ_μ⁻¹, τ_μ) and (τ_λ, τ_μ, τ_λ, τ_λ⁻¹)
    let f = Factorization::from_top_first(vec![
        tw(0, 1, Plus),
        tw(1, 0, Plus),
        tw(1, 0, Minus),
        tw(1, 0, Plus),
    ]);
    let g = Factorization::from_top_first(vec![
        tw(0, 1, Plus),
        tw(1, 0, Plus),
        tw(0, 1, Plus),
        tw(0, 1, Minus),
    ]);
    let moves = hurwitz_equivalent(&f, &g, 8).unwrap().expect("equivalent");
    assert!(moves.len() <= 8);
    let reached = moves.iter().try_fold(f.clone(), |acc, &m| apply_move(&acc, m)).unwrap();
    assert_eq!(reached.canonical(), g.canonical());
}

#[test]
fn differing_monodromy_is_rejected() {
    use Sign::Plus;
    let f = Factorization::new(vec![tw(1, 0, Plus), tw(0, 1, Plus)]);
    let g = Factorization::new(vec![tw(1, 0, Plus), tw(1, 1, Plus)]);
    assert_eq!(hurwitz_equivalent(&f, &g, 6).unwrap(), None);
    let h = Factorization::new(vec![tw(1, 0, Plus)]);
    assert!(matches!(
        hurwitz_equivalent(&f, &h, 6),
        Err(Error::LengthMismatch { .. })
    ));
}

#[test]
fn move_index_is_checked() {
    use Sign::Plus;
    let f = Factorization::new(vec![tw(1, 0, Plus), tw(0, 1, Plus)]);
    assert!(move_up(&f, 1).is_err());
    assert!(move_down(&f, 5).is_err());
}

#[test]
fn reduction_reaches_bottom() {
    use Sign::Plus;
    let mut realized = 0;
    for k in 1..8u32 {
        let s = horokit_core::families::minus_vs_matrix(k);
        let params = horokit_core::families::Family::S.params();
        let three = num_bigint::BigInt::from(3);
        let constraints = horokit_core::classifier::q_residues(
            horokit_core::classifier::ResidueCase::N3Down,
            k,
        );
        let Some(d) = horokit_core::classifier::realize_datum(&s.x, &s.y, &three, Plus, Plus, &constraints) else {
            continue;
        };
        let (bottom, moves) = datum_reduce(&d).unwrap();
        assert!(horokit_core::diophantine::is_bottom(&params, &bottom.solution()), "k={k}");
        let f = moves
            .iter()
            .try_fold(d.factorization(), |acc, &m| apply_move(&acc, m))
            .unwrap();
        assert_eq!(f, bottom.factorization());
        realized += 1;
    }
    assert_eq!(realized, 7);
}
