//! Factorizations into signed Dehn twists and Hurwitz moves on them.
//!
//! Twists are stored in attachment order: index 0 is the lowest level `t₁`
//! and acts first. Printed factorizations elsewhere often list the top level
//! first; [`Factorization::from_top_first`] accepts that order.
//!
//! A move at index `i` rewrites the adjacent pair `(a, b) = (f[i], f[i+1])`:
//!
//! - up:   `(a, b) → (b, −τ_b(a))`, signs `(δ_b, δ_a)`;
//! - down: `(a, b) → (−τ_a⁻¹(b), a)`, signs `(δ_b, δ_a)`.
//!
//! Both keep the product `τ_b τ_a` and are mutually inverse. The orientation
//! of the new curve is chosen so that, on a two-component datum, the
//! intersection number `n = γ₂·γ₁` is unchanged.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::diophantine::{self, Mutation, SolParams, Solution};
use crate::torus::{self, intersect, CurveClass, MonodromyMatrix, Sign, SignedTwist};
use crate::{Error, Result};

/// Default depth bound for [`hurwitz_equivalent`].
pub const DEFAULT_DEPTH: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    twists: Vec<SignedTwist>,
}

impl Factorization {
    /// Twists in attachment order (lowest level first).
    pub fn new(twists: Vec<SignedTwist>) -> Factorization {
        Factorization { twists }
    }

    /// Twists listed top level first, as in `(τ_k^{δ_k}, …, τ_1^{δ_1})`.
    pub fn from_top_first(mut twists: Vec<SignedTwist>) -> Factorization {
        twists.reverse();
        Factorization { twists }
    }

    pub fn twists(&self) -> &[SignedTwist] {
        &self.twists
    }

    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    pub fn monodromy(&self) -> MonodromyMatrix {
        torus::monodromy(&self.twists)
    }

    pub fn sign_product(&self) -> Sign {
        self.twists.iter().fold(Sign::Plus, |acc, t| acc * t.sign)
    }

    /// Every curve replaced by its canonical representative.
    pub fn canonical(&self) -> Factorization {
        Factorization {
            twists: self.twists.iter().map(SignedTwist::canonical).collect(),
        }
    }

    fn sign_counts(&self) -> (usize, usize) {
        let plus = self.twists.iter().filter(|t| t.sign.is_plus()).count();
        (plus, self.twists.len() - plus)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.twists.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Up,
    Down,
}

/// A Hurwitz move on levels `index` and `index + 1` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub kind: MoveKind,
    pub index: usize,
}

impl Move {
    pub fn up(index: usize) -> Move {
        Move {
            kind: MoveKind::Up,
            index,
        }
    }

    pub fn down(index: usize) -> Move {
        Move {
            kind: MoveKind::Down,
            index,
        }
    }

    pub fn inverse(self) -> Move {
        Move {
            kind: match self.kind {
                MoveKind::Up => MoveKind::Down,
                MoveKind::Down => MoveKind::Up,
            },
            index: self.index,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            MoveKind::Up => "U",
            MoveKind::Down => "D",
        };
        write!(f, "{k}{}", self.index)
    }
}

fn check_index(f: &Factorization, i: usize) -> Result<()> {
    if i + 1 < f.len() {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: i,
            len: f.len(),
        })
    }
}

pub fn move_up(f: &Factorization, i: usize) -> Result<Factorization> {
    check_index(f, i)?;
    let (a, b) = (&f.twists[i], &f.twists[i + 1]);
    let lower = b.clone();
    let upper = SignedTwist::new(b.apply(&a.curve).reversed(), a.sign);
    let mut twists = f.twists.clone();
    twists[i] = lower;
    twists[i + 1] = upper;
    Ok(Factorization { twists })
}

pub fn move_down(f: &Factorization, i: usize) -> Result<Factorization> {
    check_index(f, i)?;
    let (a, b) = (&f.twists[i], &f.twists[i + 1]);
    let lower = SignedTwist::new(a.inverse().apply(&b.curve).reversed(), b.sign);
    let upper = a.clone();
    let mut twists = f.twists.clone();
    twists[i] = lower;
    twists[i + 1] = upper;
    Ok(Factorization { twists })
}

pub fn apply_move(f: &Factorization, m: Move) -> Result<Factorization> {
    match m.kind {
        MoveKind::Up => move_up(f, m.index),
        MoveKind::Down => move_down(f, m.index),
    }
}

pub fn apply_moves(f: &Factorization, moves: &[Move]) -> Result<Factorization> {
    moves.iter().try_fold(f.clone(), |acc, &m| apply_move(&acc, m))
}

fn neighbours(f: &Factorization) -> impl Iterator<Item = (Move, Factorization)> + '_ {
    (0..f.len().saturating_sub(1))
        .flat_map(|i| [Move::up(i), Move::down(i)])
        .map(move |m| {
            let next = apply_move(f, m).expect("index in range").canonical();
            (m, next)
        })
}

/// Searches for a sequence of at most `depth` moves turning `f` into `g`
/// (curves compared up to orientation).
///
/// Runs a bidirectional breadth-first search over canonical forms. Returns
/// `Ok(None)` when no witness exists within the depth bound, including the
/// fast rejections on differing monodromy or sign counts.
pub fn hurwitz_equivalent(
    f: &Factorization,
    g: &Factorization,
    depth: usize,
) -> Result<Option<Vec<Move>>> {
    if f.len() != g.len() {
        return Err(Error::LengthMismatch {
            left: f.len(),
            right: g.len(),
        });
    }
    let (start, goal) = (f.canonical(), g.canonical());
    if start == goal {
        return Ok(Some(Vec::new()));
    }
    if f.monodromy() != g.monodromy() || f.sign_counts() != g.sign_counts() {
        return Ok(None);
    }

    // state -> (predecessor, move taken from the predecessor)
    type Parents = BTreeMap<Factorization, Option<(Factorization, Move)>>;
    let mut fwd: Parents = BTreeMap::new();
    let mut bwd: Parents = BTreeMap::new();
    fwd.insert(start.clone(), None);
    bwd.insert(goal.clone(), None);
    let mut fwd_layer = VecDeque::from([start]);
    let mut bwd_layer = VecDeque::from([goal]);
    let (mut fwd_depth, mut bwd_depth) = (0usize, 0usize);

    while fwd_depth + bwd_depth < depth && !fwd_layer.is_empty() && !bwd_layer.is_empty() {
        let forward = fwd_layer.len() <= bwd_layer.len();
        let (layer, seen, other) = if forward {
            fwd_depth += 1;
            (&mut fwd_layer, &mut fwd, &bwd)
        } else {
            bwd_depth += 1;
            (&mut bwd_layer, &mut bwd, &fwd)
        };
        let mut next_layer = VecDeque::new();
        let mut meeting = None;
        for state in layer.drain(..) {
            for (m, next) in neighbours(&state) {
                if seen.contains_key(&next) {
                    continue;
                }
                seen.insert(next.clone(), Some((state.clone(), m)));
                if other.contains_key(&next) {
                    meeting = Some(next);
                    break;
                }
                next_layer.push_back(next);
            }
            if meeting.is_some() {
                break;
            }
        }
        if let Some(meet) = meeting {
            return Ok(Some(join_paths(&fwd, &bwd, &meet)));
        }
        *layer = next_layer;
    }
    Ok(None)
}

fn join_paths(
    fwd: &BTreeMap<Factorization, Option<(Factorization, Move)>>,
    bwd: &BTreeMap<Factorization, Option<(Factorization, Move)>>,
    meet: &Factorization,
) -> Vec<Move> {
    let mut head = Vec::new();
    let mut cur = meet;
    while let Some(Some((prev, m))) = fwd.get(cur) {
        head.push(*m);
        cur = prev;
    }
    head.reverse();
    let mut cur = meet;
    while let Some(Some((prev, m))) = bwd.get(cur) {
        head.push(m.inverse());
        cur = prev;
    }
    head
}

/// Two-component horizontal link data: oriented curves `γ₁` (lower level)
/// and `γ₂` with twist exponents `δ₁`, `δ₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HorizontalDatum {
    pub g1: CurveClass,
    pub d1: Sign,
    pub g2: CurveClass,
    pub d2: Sign,
}

impl HorizontalDatum {
    pub fn new(g1: CurveClass, d1: Sign, g2: CurveClass, d2: Sign) -> HorizontalDatum {
        HorizontalDatum { g1, d1, g2, d2 }
    }

    pub fn from_factorization(f: &Factorization) -> Option<HorizontalDatum> {
        match f.twists() {
            [a, b] => Some(HorizontalDatum::new(
                a.curve.clone(),
                a.sign,
                b.curve.clone(),
                b.sign,
            )),
            _ => None,
        }
    }

    pub fn factorization(&self) -> Factorization {
        Factorization::new(alloc::vec![
            SignedTwist::new(self.g1.clone(), self.d1),
            SignedTwist::new(self.g2.clone(), self.d2),
        ])
    }

    /// `x = γ₁·λ`.
    pub fn x(&self) -> BigInt {
        intersect(&self.g1, &CurveClass::lambda())
    }

    /// `y = γ₂·λ`.
    pub fn y(&self) -> BigInt {
        intersect(&self.g2, &CurveClass::lambda())
    }

    /// `n = γ₂·γ₁`.
    pub fn n(&self) -> BigInt {
        intersect(&self.g2, &self.g1)
    }

    pub fn solution(&self) -> Solution {
        Solution::new(self.x(), self.y())
    }

    pub fn monodromy(&self) -> MonodromyMatrix {
        self.factorization().monodromy()
    }

    /// `ε = δ₁δ₂ m(λ)·λ`; fails unless the upper boundary is `S³`.
    pub fn epsilon(&self) -> Result<Sign> {
        torus::epsilon(&self.monodromy(), self.d1 * self.d2)
    }

    /// Parameters `(n, ε, δ₂, δ₁)` of the solution set the datum lands in.
    pub fn params(&self) -> Result<SolParams> {
        Ok(SolParams::new(self.n(), self.epsilon()?, self.d2, self.d1))
    }

    pub fn apply(&self, m: MoveKind) -> HorizontalDatum {
        let f = self.factorization();
        let moved = match m {
            MoveKind::Up => move_up(&f, 0),
            MoveKind::Down => move_down(&f, 0),
        }
        .expect("two levels");
        HorizontalDatum::from_factorization(&moved).expect("two levels")
    }
}

/// Hurwitz moves driving a datum into the bottom set of its solution set.
///
/// Each step follows the descent: when `|x| > |y|` an up move realizes
/// `(x, y) → (y, x̂)`, otherwise a down move realizes `(x, y) → (ŷ, x)`.
pub fn datum_reduce(d: &HorizontalDatum) -> Result<(HorizontalDatum, Vec<Move>)> {
    if d.n().is_zero() {
        return Err(Error::ParallelCurves);
    }
    let mut current = d.clone();
    let mut moves = Vec::new();
    loop {
        let params = current.params()?;
        let s = current.solution();
        if !diophantine::is_member(&params, &s) {
            return Err(Error::InconsistentDatum);
        }
        let kind = match diophantine::descent_step(&params, &s) {
            None => return Ok((current, moves)),
            Some(Mutation::X) => MoveKind::Up,
            Some(Mutation::Y) => MoveKind::Down,
        };
        current = current.apply(kind);
        moves.push(Move { kind, index: 0 });
    }
}
