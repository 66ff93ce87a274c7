//! Classification of genus-1 horizontal decompositions.
//!
//! A single 2-handle over one 1-handle (type `(1,1,1,0)`) gives `S³ × I`,
//! `±B_{p,q} ∖ B⁴`, or a cobordism whose upper boundary has `b₁ > 0`. Two
//! 2-handles (type `(1,1,2,0)`) with `S³` upper boundary give
//! `±CP² ∖ (B⁴ ⊔ B⁴)`, the sign being `−ε`, and the two sub-cobordisms
//! capped by `S¹ × D³` give a pair of disjoint rational balls.

mod ball;
mod kirby;

use core::fmt;

use alloc::collections::BTreeSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use ball::{ball_boundary, lens_boundary, lens_oriented_equal, LensSpace, RationalBall};
pub use kirby::{emit_kirby, emit_kirby_datum, KirbyComponent, KirbyRecord};

use crate::diophantine::{self, Solution};
use crate::families::fib;
use crate::hurwitz::HorizontalDatum;
use crate::torus::{self, CurveClass, Sign};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CobordismKind {
    /// `S³ × [0,1]`.
    Product,
    /// `±B_{p,q} ∖ B⁴`.
    BallComplement,
    /// `±CP² ∖ (B⁴ ⊔ B⁴)`.
    Cp2Complement,
    /// The upper boundary has `b₁ > 0`.
    NonzeroB1,
}

impl CobordismKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CobordismKind::Product => "PRODUCT",
            CobordismKind::BallComplement => "BALL_COMPLEMENT",
            CobordismKind::Cp2Complement => "CP2_COMPLEMENT",
            CobordismKind::NonzeroB1 => "NONZERO_B1",
        }
    }
}

impl fmt::Display for CobordismKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Handle counts `(g, u, ℓ, h)`: Heegaard genus, 1-handles, 2-handles,
/// 3-handles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DecompositionType {
    pub g: u32,
    pub u: u32,
    pub l: u32,
    pub h: u32,
}

impl fmt::Display for DecompositionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.g, self.u, self.l, self.h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub kind: CobordismKind,
    pub orientation: Sign,
    pub ball: Option<RationalBall>,
    /// Present for two-handle data; equals minus the signature.
    pub epsilon: Option<Sign>,
    pub ball_pair: Option<(RationalBall, RationalBall)>,
    pub decomposition: DecompositionType,
}

/// `γ = pμ + qλ` after orienting so that `p ≥ 0` and replacing `μ` by
/// `μ + shift·λ`, which leaves `0 ≤ q < p` (or `(0, 1)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedCurve {
    pub p: BigInt,
    pub q: BigInt,
    pub shift: BigInt,
}

pub fn normalize_curve(c: &CurveClass) -> NormalizedCurve {
    let c = c.canonical();
    if c.p().is_zero() {
        return NormalizedCurve {
            p: BigInt::zero(),
            q: BigInt::one(),
            shift: BigInt::zero(),
        };
    }
    let (shift, q) = c.q().div_mod_floor(c.p());
    NormalizedCurve {
        p: c.p().clone(),
        q,
        shift,
    }
}

/// Type `(1,1,1,0)`: one 1-handle and one 2-handle along `γ` with twist
/// exponent `δ`.
pub fn classify_one(gamma: &CurveClass, delta: Sign) -> ClassificationResult {
    let decomposition = DecompositionType { g: 1, u: 1, l: 1, h: 0 };
    let nc = normalize_curve(gamma);
    if nc.p.is_zero() {
        return ClassificationResult {
            kind: CobordismKind::NonzeroB1,
            orientation: Sign::Plus,
            ball: None,
            epsilon: None,
            ball_pair: None,
            decomposition,
        };
    }
    if nc.p.is_one() {
        return ClassificationResult {
            kind: CobordismKind::Product,
            orientation: Sign::Plus,
            ball: Some(RationalBall::four_ball()),
            epsilon: None,
            ball_pair: None,
            decomposition,
        };
    }
    // δ = +1: B_{p,p−q}; δ = −1: −B_{p,q}
    let ball = match delta {
        Sign::Plus => RationalBall::new(nc.p.clone(), &nc.p - &nc.q, Sign::Plus),
        Sign::Minus => RationalBall::new(nc.p.clone(), nc.q.clone(), Sign::Minus),
    }
    .expect("p > q > 0 coprime");
    ClassificationResult {
        kind: CobordismKind::BallComplement,
        orientation: ball.orientation(),
        ball: Some(ball),
        epsilon: None,
        ball_pair: None,
        decomposition,
    }
}

/// Type `(1,1,2,0)` with factorization `(τ_{γ₂}^{δ₂}, τ_{γ₁}^{δ₁})`.
pub fn classify_pair(d: &HorizontalDatum) -> Result<ClassificationResult> {
    if d.n().is_zero() {
        return Err(Error::ParallelCurves);
    }
    let params = d.params()?;
    if !diophantine::is_member(&params, &d.solution()) {
        return Err(Error::InconsistentDatum);
    }
    let eps = params.eps;
    let first = classify_one(&d.g1, d.d1).ball;
    let second = classify_one(&d.g2, d.d2).ball;
    Ok(ClassificationResult {
        kind: CobordismKind::Cp2Complement,
        orientation: -eps,
        ball: None,
        epsilon: Some(eps),
        ball_pair: first.zip(second),
        decomposition: DecompositionType { g: 1, u: 1, l: 2, h: 0 },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BallFamily {
    /// `B_m = B_{F_{2m−1}, F_{2m−5}}`.
    B,
    /// `B'_m = (−1)^m B_{F_{m+1}, F_m}`.
    BPrime,
}

pub fn family_ball(family: BallFamily, m: i64) -> RationalBall {
    match family {
        BallFamily::B => RationalBall::new(fib(2 * m - 1), fib(2 * m - 5), Sign::Plus),
        BallFamily::BPrime => {
            let sign = if m.rem_euclid(2) == 0 { Sign::Plus } else { Sign::Minus };
            RationalBall::new(fib(m + 1), fib(m), sign)
        }
    }
    .expect("consecutive-type Fibonacci numbers are coprime")
}

/// `(family(m+1), family(m))`.
pub fn ball_pairs(m: u32, family: BallFamily) -> (RationalBall, RationalBall) {
    let m = i64::from(m);
    (family_ball(family, m + 1), family_ball(family, m))
}

/// `q ≡ ±r mod modulus`. A zero modulus means exact equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueConstraint {
    pub modulus: BigInt,
    pub residues: BTreeSet<BigInt>,
}

impl ResidueConstraint {
    fn plus_minus(modulus: BigInt, r: BigInt) -> ResidueConstraint {
        let reduce = |v: BigInt| {
            if modulus.is_zero() {
                v
            } else {
                v.mod_floor(&modulus)
            }
        };
        let residues = [reduce(r.clone()), reduce(-r)].into_iter().collect();
        ResidueConstraint { modulus, residues }
    }

    pub fn admits(&self, q: &BigInt) -> bool {
        let q = if self.modulus.is_zero() {
            q.clone()
        } else {
            q.mod_floor(&self.modulus)
        };
        self.residues.contains(&q)
    }
}

/// The six shapes of `(|p₁|, |p₂|)` for two-handle data with `b₁ = 0` on
/// both sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ResidueCase {
    /// `(F_{2k+1}, F_{2k−1})`, `n = 3`.
    N3Up,
    /// `(F_{2k−1}, F_{2k+1})`, `n = 3`.
    N3Down,
    /// `(F_{2k+1}, F_{2k})`, `n = 1`.
    N1A,
    /// `(F_{2k}, F_{2k+1})`, `n = 1`.
    N1B,
    /// `(F_{2k+1}, F_{2k+2})`, `n = 1`.
    N1C,
    /// `(F_{2k+2}, F_{2k+1})`, `n = 1`.
    N1D,
}

impl ResidueCase {
    pub const ALL: [ResidueCase; 6] = [
        ResidueCase::N3Up,
        ResidueCase::N3Down,
        ResidueCase::N1A,
        ResidueCase::N1B,
        ResidueCase::N1C,
        ResidueCase::N1D,
    ];

    /// Fibonacci indices `(|p₁|, q₁, |p₂|, q₂)` at `k`.
    fn indices(self, k: i64) -> [i64; 4] {
        match self {
            ResidueCase::N3Up => [2 * k + 1, 2 * k - 3, 2 * k - 1, 2 * k - 5],
            ResidueCase::N3Down => [2 * k - 1, 2 * k - 5, 2 * k + 1, 2 * k - 3],
            ResidueCase::N1A => [2 * k + 1, 2 * k, 2 * k, 2 * k - 1],
            ResidueCase::N1B => [2 * k, 2 * k - 1, 2 * k + 1, 2 * k],
            ResidueCase::N1C => [2 * k + 1, 2 * k, 2 * k + 2, 2 * k + 1],
            ResidueCase::N1D => [2 * k + 2, 2 * k + 1, 2 * k + 1, 2 * k],
        }
    }
}

/// Residue constraints on `(q₁, q₂)` for the given case and index.
pub fn q_residues(case: ResidueCase, k: u32) -> (ResidueConstraint, ResidueConstraint) {
    let [p1, q1, p2, q2] = case.indices(i64::from(k));
    (
        ResidueConstraint::plus_minus(fib(p1).abs(), fib(q1)),
        ResidueConstraint::plus_minus(fib(p2).abs(), fib(q2)),
    )
}

/// Builds a datum `γ₁ = (x, q₁)`, `γ₂ = (y, q₂)` with `γ₂·γ₁ = n` whose
/// `q`'s satisfy the residue constraints, if one exists with `q₁` taken
/// from the listed residues.
pub fn realize_datum(
    x: &BigInt,
    y: &BigInt,
    n: &BigInt,
    d1: Sign,
    d2: Sign,
    constraints: &(ResidueConstraint, ResidueConstraint),
) -> Option<HorizontalDatum> {
    if x.is_zero() {
        return None;
    }
    for q1 in &constraints.0.residues {
        // n = y q₁ − x q₂
        let (q2, rem) = (y * q1 - n).div_rem(x);
        if !rem.is_zero() || !constraints.1.admits(&q2) {
            continue;
        }
        let (Ok(g1), Ok(g2)) = (CurveClass::new(x.clone(), q1.clone()), CurveClass::new(y.clone(), q2)) else {
            continue;
        };
        return Some(HorizontalDatum::new(g1, d1, g2, d2));
    }
    None
}

/// The family solution, residue case and signs that realize the pair
/// `ball_pairs(m, family)` as a two-handle datum.
fn route(m: u32, family: BallFamily) -> (Solution, ResidueCase, u32, Sign, Sign) {
    use crate::families::{family_element, Family, FamilyElement, OrbitOp};
    let element = |f, k| family_element(&FamilyElement::new(f, k, OrbitOp::Id).expect("identity"));
    match family {
        BallFamily::B => (element(Family::S, m), ResidueCase::N3Down, m, Sign::Plus, Sign::Plus),
        BallFamily::BPrime if m.is_multiple_of(2) => {
            let k = m / 2;
            (element(Family::T2, k), ResidueCase::N1C, k, Sign::Plus, Sign::Minus)
        }
        BallFamily::BPrime => {
            let k = m.div_ceil(2);
            (element(Family::T1, k), ResidueCase::N1A, k, Sign::Plus, Sign::Minus)
        }
    }
}

/// Builds the two-handle datum for `(m, family)` from the closed-form
/// family solution and the residue table.
pub fn ball_pair_datum(m: u32, family: BallFamily) -> Option<HorizontalDatum> {
    let (s, case, k, d1, d2) = route(m, family);
    let n = match family {
        BallFamily::B => BigInt::from(3),
        BallFamily::BPrime => BigInt::one(),
    };
    realize_datum(&s.x, &s.y, &n, d1, d2, &q_residues(case, k))
}

/// The ball pair obtained by classifying [`ball_pair_datum`], ordered as
/// `ball_pairs` (larger index first).
pub fn ball_pair_via_datum(m: u32, family: BallFamily) -> Result<(RationalBall, RationalBall)> {
    let d = ball_pair_datum(m, family).ok_or(Error::InconsistentDatum)?;
    let (a, b) = classify_pair(&d)?.ball_pair.ok_or(Error::InconsistentDatum)?;
    Ok(if a.p() >= b.p() { (a, b) } else { (b, a) })
}

/// Whether a two-handle datum's sub-cobordisms both have `b₁ = 0` on the
/// upper boundary (`p₁p₂ ≠ 0`).
pub fn both_boundaries_rational(d: &HorizontalDatum) -> bool {
    !(d.g1.p().is_zero() || d.g2.p().is_zero())
}

/// The S³ test applied to a datum, as a boolean.
pub fn datum_gives_s3(d: &HorizontalDatum) -> bool {
    torus::gives_s3(&d.monodromy())
}
