//! The solution sets `S^{δ₂,δ₁}_{n,ε}`.
//!
//! A pair `(x, y)` belongs to `S^{δ₂,δ₁}_{n,ε}` when
//! `δ₂x² + δ₁y² + nxy = ε` and `gcd(x, n) = gcd(y, n) = 1`. The two
//! mutations `x̂ = −x − nδ₂y` and `ŷ = −y − nδ₁x` are the Vieta jumps of the
//! quadratic in either variable; they preserve the set and drive every
//! member down to the bottom set, where `|xy| = (|n| − 1)/2`.

use core::fmt;

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::torus::Sign;
use crate::{Error, Result};

/// Parameters `(n, ε, δ₂, δ₁)` of `S^{δ₂,δ₁}_{n,ε}`.
///
/// Constructor arguments follow the superscript order `δ₂, δ₁`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolParams {
    pub n: BigInt,
    pub eps: Sign,
    pub d2: Sign,
    pub d1: Sign,
}

impl SolParams {
    pub fn new(n: impl Into<BigInt>, eps: Sign, d2: Sign, d1: Sign) -> SolParams {
        SolParams {
            n: n.into(),
            eps,
            d2,
            d1,
        }
    }

    /// From plain integers; `eps`, `d2` and `d1` must be `±1`.
    pub fn from_ints(n: i64, eps: i64, d2: i64, d1: i64) -> Result<SolParams> {
        Ok(SolParams::new(
            n,
            Sign::from_int(eps)?,
            Sign::from_int(d2)?,
            Sign::from_int(d1)?,
        ))
    }

    /// `δ₂x² + δ₁y² + nxy`.
    pub fn form(&self, s: &Solution) -> BigInt {
        let (x, y) = (&s.x, &s.y);
        x * x * self.d2.value() + y * y * self.d1.value() + &self.n * x * y
    }

    /// Target of the swap `S`: `S^{δ₁,δ₂}_{n,ε}`.
    pub fn swapped(&self) -> SolParams {
        SolParams::new(self.n.clone(), self.eps, self.d1, self.d2)
    }

    /// Target of `(x, y) ↦ (x, −y)`: `S^{δ₂,δ₁}_{−n,ε}`.
    pub fn negated_n(&self) -> SolParams {
        SolParams::new(-&self.n, self.eps, self.d2, self.d1)
    }

    /// Negating the whole equation: `S^{δ₂,δ₁}_{n,ε} = S^{−δ₂,−δ₁}_{−n,−ε}`
    /// as sets.
    pub fn flipped_eps(&self) -> SolParams {
        SolParams::new(-&self.n, -self.eps, -self.d2, -self.d1)
    }

    /// `(|n| − 1)/2`, the value of `|xy|` on the bottom set whenever the
    /// solution set is non-empty.
    pub fn bottom_level(&self) -> BigInt {
        (self.n.abs() - 1u32) / 2u32
    }
}

impl fmt::Display for SolParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "S^{{{},{}}}_{{{},{}}}",
            self.d2, self.d1, self.n, self.eps
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    pub x: BigInt,
    pub y: BigInt,
}

impl Solution {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Solution {
        Solution {
            x: x.into(),
            y: y.into(),
        }
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

pub fn is_member(p: &SolParams, s: &Solution) -> bool {
    p.form(s) == p.eps.to_bigint() && s.x.gcd(&p.n).is_one() && s.y.gcd(&p.n).is_one()
}

fn require_member(p: &SolParams, s: &Solution) -> Result<()> {
    if is_member(p, s) {
        Ok(())
    } else {
        Err(Error::NotMember {
            x: s.x.to_string(),
            y: s.y.to_string(),
        })
    }
}

/// Which coordinate a mutation replaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mutation {
    X,
    Y,
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mutation::X => "X",
            Mutation::Y => "Y",
        })
    }
}

/// `x̂ = −x − nδ₂y`.
pub fn x_hat(p: &SolParams, s: &Solution) -> BigInt {
    -&s.x - &p.n * &s.y * p.d2.value()
}

/// `ŷ = −y − nδ₁x`.
pub fn y_hat(p: &SolParams, s: &Solution) -> BigInt {
    -&s.y - &p.n * &s.x * p.d1.value()
}

fn apply_unchecked(p: &SolParams, s: &Solution, m: Mutation) -> Solution {
    match m {
        Mutation::X => Solution {
            x: x_hat(p, s),
            y: s.y.clone(),
        },
        Mutation::Y => Solution {
            x: s.x.clone(),
            y: y_hat(p, s),
        },
    }
}

pub fn mutate(p: &SolParams, s: &Solution, m: Mutation) -> Result<Solution> {
    require_member(p, s)?;
    Ok(apply_unchecked(p, s, m))
}

pub fn mutate_x(p: &SolParams, s: &Solution) -> Result<Solution> {
    mutate(p, s, Mutation::X)
}

pub fn mutate_y(p: &SolParams, s: &Solution) -> Result<Solution> {
    mutate(p, s, Mutation::Y)
}

/// Whether a member sits in the bottom set.
pub fn is_bottom(p: &SolParams, s: &Solution) -> bool {
    is_member(p, s) && (&s.x * &s.y).abs() == p.bottom_level()
}

/// Next mutation of the descent, or `None` once `s` is in the bottom set.
///
/// Assumes `s` is a member. The larger coordinate in absolute value is
/// mutated; at `|x| = |y| = 1` with `|n| = 1` the mutation that produces a
/// zero coordinate is chosen.
pub fn descent_step(p: &SolParams, s: &Solution) -> Option<Mutation> {
    if (&s.x * &s.y).abs() == p.bottom_level() {
        return None;
    }
    let (ax, ay) = (s.x.abs(), s.y.abs());
    Some(match ax.cmp(&ay) {
        core::cmp::Ordering::Greater => Mutation::X,
        core::cmp::Ordering::Less => Mutation::Y,
        core::cmp::Ordering::Equal => {
            if x_hat(p, s).is_zero() {
                Mutation::X
            } else {
                debug_assert!(y_hat(p, s).is_zero());
                Mutation::Y
            }
        }
    })
}

/// A descent run: the bottom element reached, the mutations applied and
/// every intermediate pair (starting pair first, bottom last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descent {
    pub bottom: Solution,
    pub moves: Vec<Mutation>,
    pub path: Vec<Solution>,
}

pub fn descend(p: &SolParams, s: &Solution) -> Result<Descent> {
    require_member(p, s)?;
    let mut current = s.clone();
    let mut moves = Vec::new();
    let mut path = alloc::vec![current.clone()];
    while let Some(m) = descent_step(p, &current) {
        current = apply_unchecked(p, &current, m);
        moves.push(m);
        path.push(current.clone());
    }
    Ok(Descent {
        bottom: current,
        moves,
        path,
    })
}

pub fn sym_swap(s: &Solution) -> Solution {
    Solution {
        x: s.y.clone(),
        y: s.x.clone(),
    }
}

pub fn sym_neg(s: &Solution) -> Solution {
    Solution {
        x: -&s.x,
        y: -&s.y,
    }
}

/// `(x, y) ↦ (x, −y)`, a bijection `S_{n} → S_{−n}`.
pub fn sym_flip_n(s: &Solution) -> Solution {
    Solution {
        x: s.x.clone(),
        y: -&s.y,
    }
}

/// Parameters of the same set with `ε` negated.
pub fn sym_flip_eps(p: &SolParams) -> SolParams {
    p.flipped_eps()
}

/// Reduction of arbitrary parameters to the normal form `ε = −1`, `n ≥ 0`.
///
/// `S(original) = image of S(normal)` under `(x,y) ↦ (x,−y)` when
/// `flip_y` is set, and equal to it otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub params: SolParams,
    pub flip_y: bool,
}

impl NormalForm {
    pub fn of(p: &SolParams) -> NormalForm {
        let mut params = if p.eps.is_plus() {
            p.flipped_eps()
        } else {
            p.clone()
        };
        let flip_y = params.n.is_negative();
        if flip_y {
            params = params.negated_n();
        }
        NormalForm { params, flip_y }
    }

    /// Carries a member of the normal-form set to the original set.
    pub fn to_original(&self, s: &Solution) -> Solution {
        if self.flip_y {
            sym_flip_n(s)
        } else {
            s.clone()
        }
    }
}

fn plus_minus(points: &[(i64, i64)]) -> BTreeSet<Solution> {
    points
        .iter()
        .flat_map(|&(x, y)| [Solution::new(x, y), Solution::new(-x, -y)])
        .collect()
}

/// Closed-form bottom set `b(S^{δ₂,δ₁}_{n,ε})`; empty when the set is empty.
pub fn bottom_set(p: &SolParams) -> BTreeSet<Solution> {
    use Sign::{Minus, Plus};

    let nf = NormalForm::of(p);
    let q = &nf.params;
    let base = if q.n == BigInt::from(3) {
        match (q.d2, q.d1) {
            (Plus, Plus) => plus_minus(&[(1, -1)]),
            _ => BTreeSet::new(),
        }
    } else if q.n.is_one() {
        match (q.d2, q.d1) {
            (Minus, Plus) => plus_minus(&[(1, 0)]),
            (Plus, Minus) => plus_minus(&[(0, 1)]),
            (Minus, Minus) => plus_minus(&[(1, 0), (0, 1)]),
            (Plus, Plus) => BTreeSet::new(),
        }
    } else {
        BTreeSet::new()
    };
    base.iter().map(|s| nf.to_original(s)).collect()
}

/// All members with `|x|, |y| ≤ bound`.
///
/// Scans every `x` in the box and solves the quadratic for `y` exactly
/// (integer square root of the discriminant), so the scan is exhaustive.
pub fn enumerate_box(p: &SolParams, bound: u64) -> Result<BTreeSet<Solution>> {
    if bound == 0 {
        return Err(Error::ZeroBound);
    }
    let bound_big = BigInt::from(bound);
    let bound_i = bound as i128;
    let d1 = p.d1.value();
    let mut out = BTreeSet::new();
    // y² + (δ₁nx) y + δ₁(δ₂x² − ε) = 0
    for x in -bound_i..=bound_i {
        let x = BigInt::from(x);
        let b = &p.n * &x * d1;
        let c = (&x * &x * p.d2.value() - p.eps.value()) * d1;
        let disc = &b * &b - &c * 4u32;
        if disc.is_negative() {
            continue;
        }
        let root = disc.sqrt();
        if &root * &root != disc {
            continue;
        }
        for r in [root.clone(), -root] {
            let num = -&b + r;
            if num.is_odd() {
                continue;
            }
            let s = Solution {
                x: x.clone(),
                y: num / 2u32,
            };
            if s.y.abs() <= bound_big && is_member(p, &s) {
                out.insert(s);
            }
        }
    }
    Ok(out)
}
