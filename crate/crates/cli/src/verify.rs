//! Self-checks over every invariant of the core library, grouped into
//! named suites with pass/fail counts.

use horokit_core::classifier::{
    ball_boundary, ball_pair_via_datum, ball_pairs, classify_one, classify_pair, lens_boundary,
    lens_oriented_equal, BallFamily, RationalBall,
};
use horokit_core::diophantine::{
    self, bottom_set, descend, enumerate_box, is_member, Mutation, SolParams, Solution,
};
use horokit_core::families::{
    family_covers, family_element, family_elements, fib, is_markov, minus_vs_matrix, vajda,
    Family,
};
use horokit_core::hurwitz::{
    apply_move, hurwitz_equivalent, Factorization, HorizontalDatum, Move, MoveKind,
};
use horokit_core::torus::{
    intersect, twist_apply, twist_matrix, CurveClass, MonodromyMatrix, Sign, SignedTwist,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A mutation `(x, y) ↦ (x̂, y)` or `(x, ŷ)` without membership checks.
pub type MutateFn = fn(&SolParams, &Solution, Mutation) -> Solution;

pub fn reference_mutation(p: &SolParams, s: &Solution, m: Mutation) -> Solution {
    match m {
        Mutation::X => Solution::new(diophantine::x_hat(p, s), s.y.clone()),
        Mutation::Y => Solution::new(s.x.clone(), diophantine::y_hat(p, s)),
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub bound: u64,
    pub depth: usize,
    pub m_max: u32,
    pub seed: u64,
    /// Random samples per randomized suite.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            bound: 200,
            depth: 12,
            m_max: 15,
            seed: 0,
            samples: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: u64,
    pub failed: u64,
    /// First failing case, if any.
    pub example: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

struct Tally {
    name: &'static str,
    checked: u64,
    failed: u64,
    example: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Tally {
        Tally {
            name,
            checked: 0,
            failed: 0,
            example: None,
        }
    }

    fn check(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.example.is_none() {
                self.example = Some(case());
            }
        }
    }

    fn done(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            checked: self.checked,
            failed: self.failed,
            example: self.example,
        }
    }
}

/// All 16 parameter sets with the given `n` values, `ε = ±1` and every
/// sign pair.
pub fn parameter_sets(ns: &[i64]) -> Vec<SolParams> {
    let mut out = Vec::new();
    for &n in ns {
        for eps in [-1, 1] {
            for d2 in [-1, 1] {
                for d1 in [-1, 1] {
                    out.push(SolParams::from_ints(n, eps, d2, d1).expect("unit signs"));
                }
            }
        }
    }
    out
}

pub const LIVE_N: [i64; 4] = [-3, -1, 1, 3];
pub const DEAD_N: [i64; 6] = [-5, -4, -2, 2, 4, 5];

fn random_curve(rng: &mut ChaCha8Rng, bound: i64) -> CurveClass {
    loop {
        let (p, q) = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if let Ok(c) = CurveClass::new(p, q) {
            return c;
        }
    }
}

fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn random_twist(rng: &mut ChaCha8Rng, bound: i64) -> SignedTwist {
    SignedTwist::new(random_curve(rng, bound), random_sign(rng))
}

fn random_factorization(rng: &mut ChaCha8Rng, max_len: usize, bound: i64) -> Factorization {
    let len = rng.gen_range(2..=max_len);
    Factorization::new((0..len).map(|_| random_twist(rng, bound)).collect())
}

fn random_move(rng: &mut ChaCha8Rng, f: &Factorization) -> Move {
    let i = rng.gen_range(0..f.len() - 1);
    if rng.gen() {
        Move::up(i)
    } else {
        Move::down(i)
    }
}

/// `moves ≤ 2·log₂(M) + 2`, checked exactly as `2^(moves − 2) ≤ M²`.
pub fn within_descent_bound(moves: usize, max: &BigInt) -> bool {
    moves <= 2 || (BigInt::one() << (moves - 2)) <= max * max
}

/// Valid two-handle data with every coordinate of `γ₁`, `γ₂` bounded by
/// `bound`, built from enumerated solutions by sweeping `q₁` and solving
/// `n = yq₁ − xq₂` for `q₂`.
pub fn valid_data(bound: u64) -> Vec<HorizontalDatum> {
    let b = BigInt::from(bound);
    let mut out = Vec::new();
    for p in parameter_sets(&LIVE_N) {
        for s in enumerate_box(&p, bound).expect("positive bound") {
            if s.x.is_zero() {
                continue;
            }
            let mut q1 = -b.clone();
            while q1 <= b {
                let num = &s.y * &q1 - &p.n;
                if (&num % &s.x).is_zero() {
                    let q2 = &num / &s.x;
                    if q2.abs() <= b {
                        if let (Ok(g1), Ok(g2)) = (
                            CurveClass::new(s.x.clone(), q1.clone()),
                            CurveClass::new(s.y.clone(), q2),
                        ) {
                            let d = HorizontalDatum::new(g1, p.d1, g2, p.d2);
                            if d.params().ok().as_ref() == Some(&p) {
                                out.push(d);
                            }
                        }
                    }
                }
                q1 += 1;
            }
        }
    }
    out
}

fn mirror(d: &HorizontalDatum) -> HorizontalDatum {
    let m = |c: &CurveClass| CurveClass::new(c.p().clone(), -c.q()).expect("primitive");
    HorizontalDatum::new(m(&d.g1), -d.d1, m(&d.g2), -d.d2)
}

fn extra_condition_witness(x: i64, y: i64, n: i64, r: i64) -> bool {
    let gcd = |a: i64, b: i64| num_integer::gcd(a, b);
    if x == 0 {
        return (-r..=r).any(|a| a * y == n && gcd(a, 0) == 1) && (-r..=r).any(|b| gcd(y, b) == 1);
    }
    (-r..=r).any(|a| {
        let num = a * y - n;
        num % x == 0 && {
            let b = num / x;
            b.abs() <= r && gcd(x, a) == 1 && gcd(y, b) == 1
        }
    })
}

fn members(bound: u64) -> Vec<(SolParams, Solution)> {
    parameter_sets(&LIVE_N)
        .into_iter()
        .flat_map(|p| {
            enumerate_box(&p, bound)
                .expect("positive bound")
                .into_iter()
                .map(move |s| (p.clone(), s))
        })
        .collect()
}

fn torus_suites(cfg: &VerifyConfig, out: &mut Vec<SuiteReport>) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut anti = Tally::new("intersection antisymmetry");
    let mut unimod = Tally::new("twist unimodularity");
    let mut consistent = Tally::new("twist matrix consistency");
    let mut preserve = Tally::new("twist preserves intersection");
    let mut blind = Tally::new("twist sign independence");
    for _ in 0..cfg.samples {
        let (a, b) = (random_curve(&mut rng, 1000), random_curve(&mut rng, 1000));
        let t = random_twist(&mut rng, 200);
        anti.check(intersect(&a, &b) == -intersect(&b, &a), || format!("{a} {b}"));
        let m = twist_matrix(&t);
        unimod.check(
            m.determinant().is_one() && &m * &twist_matrix(&t.inverse()) == MonodromyMatrix::identity(),
            || t.to_string(),
        );
        consistent.check(m.apply(&a) == twist_apply(&t, &a), || format!("{t} {a}"));
        preserve.check(
            intersect(&twist_apply(&t, &a), &twist_apply(&t, &b)) == intersect(&a, &b),
            || format!("{t} {a} {b}"),
        );
        let flipped = SignedTwist::new(t.curve.reversed(), t.sign);
        blind.check(twist_apply(&t, &a) == twist_apply(&flipped, &a), || format!("{t} {a}"));
    }
    out.extend([anti.done(), unimod.done(), consistent.done(), preserve.done(), blind.done()]);
}

fn diophantine_suites(cfg: &VerifyConfig, mutate: MutateFn, out: &mut Vec<SuiteReport>) {
    let closure_bound = cfg.bound.min(200);
    let mut closure = Tally::new("mutation closure");
    let mut involution = Tally::new("mutation involutivity");
    let mut coprime = Tally::new("coprimality");
    for (p, s) in members(closure_bound) {
        for m in [Mutation::X, Mutation::Y] {
            let t = mutate(&p, &s, m);
            closure.check(is_member(&p, &t), || format!("{p} {s} {m}"));
            involution.check(mutate(&p, &t, m) == s, || format!("{p} {s} {m}"));
        }
        coprime.check(num_integer::Integer::gcd(&s.x, &s.y).is_one(), || format!("{p} {s}"));
    }

    let mut descent = Tally::new("descent");
    for (p, s) in members(cfg.bound) {
        let ok = match descend(&p, &s) {
            Ok(d) => {
                let max = core::cmp::max(s.x.abs(), s.y.abs());
                bottom_set(&p).contains(&d.bottom)
                    && d.path.iter().all(|t| is_member(&p, t))
                    && within_descent_bound(d.moves.len(), &max)
            }
            Err(_) => false,
        };
        descent.check(ok, || format!("{p} {s}"));
    }

    let mut oracle = Tally::new("bottom-set oracle");
    for p in parameter_sets(&LIVE_N) {
        let level = p.bottom_level();
        let found: std::collections::BTreeSet<_> = enumerate_box(&p, 5)
            .expect("positive bound")
            .into_iter()
            .filter(|s| (&s.x * &s.y).abs() == level)
            .collect();
        oracle.check(bottom_set(&p) == found, || p.to_string());
    }

    let mut empty = Tally::new("emptiness");
    for p in parameter_sets(&DEAD_N) {
        empty.check(
            enumerate_box(&p, cfg.bound).map(|s| s.is_empty()).unwrap_or(false),
            || p.to_string(),
        );
    }

    let mut extra = Tally::new("extra condition");
    for (p, s) in members(50) {
        let small = |v: &BigInt| i64::try_from(v).expect("small");
        extra.check(
            extra_condition_witness(small(&s.x), small(&s.y), small(&p.n), 200),
            || format!("{p} {s}"),
        );
    }

    out.extend([
        closure.done(),
        involution.done(),
        coprime.done(),
        descent.done(),
        oracle.done(),
        empty.done(),
        extra.done(),
    ]);
}

fn hurwitz_suites(cfg: &VerifyConfig, out: &mut Vec<SuiteReport>) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let mut invariance = Tally::new("monodromy invariance");
    let mut inverse = Tally::new("inverse moves");
    for _ in 0..cfg.samples {
        let f = random_factorization(&mut rng, 6, 50);
        let m = random_move(&mut rng, &f);
        let g = apply_move(&f, m).expect("index in range");
        invariance.check(g.monodromy() == f.monodromy(), || format!("{f} {m}"));
        inverse.check(apply_move(&g, m.inverse()).ok().as_ref() == Some(&f), || format!("{f} {m}"));
    }

    let mut tracking = Tally::new("triple tracking");
    let mut eps = Tally::new("epsilon invariance");
    for _ in 0..cfg.samples {
        let d = HorizontalDatum::new(
            random_curve(&mut rng, 50),
            random_sign(&mut rng),
            random_curve(&mut rng, 50),
            random_sign(&mut rng),
        );
        let p = SolParams::new(d.n(), Sign::Minus, d.d2, d.d1);
        let s = d.solution();
        let (up, down) = (d.apply(MoveKind::Up), d.apply(MoveKind::Down));
        tracking.check(
            up.n() == d.n()
                && down.n() == d.n()
                && up.solution() == Solution::new(s.y.clone(), diophantine::x_hat(&p, &s))
                && down.solution() == Solution::new(diophantine::y_hat(&p, &s), s.x.clone()),
            || format!("{d:?}"),
        );
        let e = d.epsilon().ok();
        eps.check(up.epsilon().ok() == e && down.epsilon().ok() == e, || format!("{d:?}"));
    }

    let mut search = Tally::new("hurwitz search");
    let tw = |p: i64, q: i64, s: Sign| SignedTwist::new(CurveClass::new(p, q).expect("primitive"), s);
    let f = Factorization::from_top_first(vec![
        tw(0, 1, Sign::Plus),
        tw(1, 0, Sign::Plus),
        tw(1, 0, Sign::Minus),
        tw(1, 0, Sign::Plus),
    ]);
    let g = Factorization::from_top_first(vec![
        tw(0, 1, Sign::Plus),
        tw(1, 0, Sign::Plus),
        tw(0, 1, Sign::Plus),
        tw(0, 1, Sign::Minus),
    ]);
    let found = hurwitz_equivalent(&f, &g, cfg.depth.min(8)).ok().flatten();
    let replayed = found.as_ref().is_some_and(|moves| {
        moves
            .iter()
            .try_fold(f.clone(), |acc, &m| apply_move(&acc, m))
            .is_ok_and(|h| h.canonical() == g.canonical())
    });
    search.check(replayed, || format!("{f} ~ {g}"));

    out.extend([invariance.done(), inverse.done(), tracking.done(), eps.done(), search.done()]);
}

fn family_suites(cfg: &VerifyConfig, out: &mut Vec<SuiteReport>) {
    let mut rec = Tally::new("fibonacci recurrence");
    for m in -50i64..=50 {
        let sign = if (m + 1).rem_euclid(2) == 0 { 1 } else { -1 };
        rec.check(fib(m + 1) == fib(m) + fib(m - 1) && fib(-m) == fib(m) * sign, || m.to_string());
    }

    let mut vaj = Tally::new("vajda identity");
    for r in -20..=20 {
        for m in -20..=20 {
            for j in -20..=20 {
                vaj.check(vajda(r, m, j), || format!("({r},{m},{j})"));
            }
        }
    }

    let mut membership = Tally::new("family membership");
    for family in [Family::S, Family::T1, Family::T2, Family::Finite] {
        let p = family.params();
        for e in family_elements(family, 30) {
            membership.check(is_member(&p, &family_element(&e)), || format!("{e:?}"));
        }
    }

    let mut matrix = Tally::new("matrix closed form");
    for k in 0..=30u32 {
        let s = minus_vs_matrix(k);
        let ki = i64::from(k);
        matrix.check(s.x == -fib(2 * ki - 1) && s.y == fib(2 * ki + 1), || k.to_string());
    }

    let mut coverage = Tally::new("family coverage");
    for p in parameter_sets(&LIVE_N) {
        coverage.check(family_covers(&p, cfg.bound).unwrap_or(false), || p.to_string());
    }

    let mut markov = Tally::new("markov triples");
    for m in 0..=30i64 {
        markov.check(is_markov(&BigInt::one(), &fib(2 * m - 1), &fib(2 * m + 1)), || m.to_string());
    }

    out.extend([
        rec.done(),
        vaj.done(),
        membership.done(),
        matrix.done(),
        coverage.done(),
        markov.done(),
    ]);
}

fn classifier_suites(cfg: &VerifyConfig, out: &mut Vec<SuiteReport>) {
    let data = valid_data(cfg.bound.min(30));
    let mut invariance = Tally::new("classification hurwitz invariance");
    let mut mirrored = Tally::new("mirror covariance");
    let mut n_values = Tally::new("n constraint");
    let key = |d: &HorizontalDatum| classify_pair(d).ok().map(|r| (r.kind, r.orientation, r.epsilon));
    for d in &data {
        let before = key(d);
        for k in [MoveKind::Up, MoveKind::Down] {
            invariance.check(before.is_some() && key(&d.apply(k)) == before, || format!("{d:?} {k:?}"));
        }
        let ok = match (classify_pair(d), classify_pair(&mirror(d))) {
            (Ok(r), Ok(m)) => {
                let flip = |p: &(RationalBall, RationalBall)| (p.0.reversed(), p.1.reversed());
                m.epsilon == r.epsilon.map(|e| -e)
                    && m.orientation == -r.orientation
                    && m.ball_pair == r.ball_pair.as_ref().map(flip)
            }
            _ => false,
        };
        mirrored.check(ok, || format!("{d:?}"));
        let n = d.n().abs();
        n_values.check(n == BigInt::from(1) || n == BigInt::from(3), || format!("{d:?}"));
    }
    for p in 1i64..=30 {
        for q in -30i64..=30 {
            let Ok(c) = CurveClass::new(p, q) else { continue };
            let m = CurveClass::new(p, -q).expect("primitive");
            for delta in [Sign::Plus, Sign::Minus] {
                let (r, s) = (classify_one(&c, delta), classify_one(&m, -delta));
                mirrored.check(
                    r.kind == s.kind && s.ball == r.ball.as_ref().map(RationalBall::reversed),
                    || format!("{c} {delta}"),
                );
            }
        }
    }

    let mut boundaries = Tally::new("boundary consistency");
    let mut routes = Tally::new("route agreement");
    for m in 0..=cfg.m_max {
        for family in [BallFamily::B, BallFamily::BPrime] {
            let pair = ball_pairs(m, family);
            for b in [&pair.0, &pair.1] {
                let l = lens_boundary(b);
                boundaries.check(
                    *l.a() == b.p() * b.p() && num_integer::Integer::gcd(l.a(), l.b()).is_one(),
                    || b.to_string(),
                );
            }
            routes.check(
                ball_pair_via_datum(m, family).ok().as_ref() == Some(&pair),
                || format!("m={m} {family:?}"),
            );
        }
    }

    let mut inverse = Tally::new("lens inverse identity");
    let mut negative = Tally::new("negative orientation");
    for p in 2i64..=50 {
        for q in 1..p {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let (pb, qb) = (BigInt::from(p), BigInt::from(q));
            let plus = ball_boundary(&pb, &qb, Sign::Plus).expect("coprime");
            let other = ball_boundary(&pb, &BigInt::from(p - q), Sign::Plus).expect("coprime");
            let minus = ball_boundary(&pb, &qb, Sign::Minus).expect("coprime");
            inverse.check(lens_oriented_equal(&plus, &other), || format!("({p},{q})"));
            negative.check(!lens_oriented_equal(&plus, &minus), || format!("({p},{q})"));
        }
    }

    out.extend([
        invariance.done(),
        mirrored.done(),
        n_values.done(),
        boundaries.done(),
        routes.done(),
        inverse.done(),
        negative.done(),
    ]);
}

/// Runs every suite with the reference mutation.
pub fn run(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    run_with(cfg, reference_mutation)
}

/// Runs every suite, using `mutate` in the mutation suites.
pub fn run_with(cfg: &VerifyConfig, mutate: MutateFn) -> Vec<SuiteReport> {
    let mut out = Vec::new();
    torus_suites(cfg, &mut out);
    diophantine_suites(cfg, mutate, &mut out);
    hurwitz_suites(cfg, &mut out);
    family_suites(cfg, &mut out);
    classifier_suites(cfg, &mut out);
    out
}
