//! Fibonacci numbers and the closed-form parametrizations of the solution
//! sets with `n = 3` and `n = 1`.
//!
//! With `ε = −1`:
//!
//! - `S^{1,1}_{3,−1} = G·{(−F_{2k−1}, F_{2k+1}) : k ≥ 0}`,
//! - `S^{−1,1}_{1,−1} = H·(T₁ ∪ T₂)` with `T₁ = {(F_{2k+1}, F_{2k})}` and
//!   `T₂ = {(F_{2k+1}, −F_{2k+2})}`,
//! - `S^{1,−1}_{1,−1}` is the swap of `S^{−1,1}_{1,−1}`,
//! - `S^{−1,−1}_{1,−1} = ±{(1,0), (0,1), (1,1)}`,
//!
//! where `G = ⟨S, −I⟩` and `H = {I, −I}`. Every other normal-form set is
//! empty.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diophantine::{self, NormalForm, SolParams, Solution};
use crate::torus::Sign;
use crate::{Error, Result};

/// `F_m` for any integer `m`, with `F_{−1} = 1`, `F_0 = 0`.
pub fn fib(m: i64) -> BigInt {
    let (mut lo, mut hi) = (BigInt::zero(), BigInt::one()); // (F_0, F_1)
    if m >= 0 {
        for _ in 0..m {
            let next = &lo + &hi;
            lo = core::mem::replace(&mut hi, next);
        }
        lo
    } else {
        // (F_{k}, F_{k+1}) -> (F_{k-1}, F_k) with F_{k-1} = F_{k+1} - F_k
        for _ in 0..m.unsigned_abs() {
            let prev = &hi - &lo;
            hi = core::mem::replace(&mut lo, prev);
        }
        lo
    }
}

/// `F_r F_{m+j} − F_m F_{r+j} = (−1)^{r+1} F_{m−r} F_j`.
pub fn vajda(r: i64, m: i64, j: i64) -> bool {
    let lhs = fib(r) * fib(m + j) - fib(m) * fib(r + j);
    let sign = if (r + 1).rem_euclid(2) == 0 { 1 } else { -1 };
    lhs == fib(m - r) * fib(j) * sign
}

pub fn is_markov(a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    if !(a.is_positive() && b.is_positive() && c.is_positive()) {
        return false;
    }
    a * a + b * b + c * c == a * b * c * 3u32
}

/// `((0,−1),(1,3))^k (−1, 1)`.
pub fn minus_vs_matrix(k: u32) -> Solution {
    let (mut x, mut y) = (BigInt::from(-1), BigInt::one());
    for _ in 0..k {
        let nx = -&y;
        let ny = &x + &y * 3u32;
        x = nx;
        y = ny;
    }
    Solution { x, y }
}

/// Element of `G = ⟨S, −I⟩`, where `S(x,y) = (y,x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitOp {
    Id,
    Swap,
    Neg,
    NegSwap,
}

impl OrbitOp {
    pub const ALL: [OrbitOp; 4] = [OrbitOp::Id, OrbitOp::Swap, OrbitOp::Neg, OrbitOp::NegSwap];
    pub const H: [OrbitOp; 2] = [OrbitOp::Id, OrbitOp::Neg];

    pub fn apply(self, s: &Solution) -> Solution {
        match self {
            OrbitOp::Id => s.clone(),
            OrbitOp::Swap => diophantine::sym_swap(s),
            OrbitOp::Neg => diophantine::sym_neg(s),
            OrbitOp::NegSwap => diophantine::sym_neg(&diophantine::sym_swap(s)),
        }
    }

    pub fn in_h(self) -> bool {
        matches!(self, OrbitOp::Id | OrbitOp::Neg)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `(−F_{2k−1}, F_{2k+1})` in `S^{1,1}_{3,−1}`.
    S,
    /// `(F_{2k+1}, F_{2k})` in `S^{−1,1}_{1,−1}`.
    T1,
    /// `(F_{2k+1}, −F_{2k+2})` in `S^{−1,1}_{1,−1}`.
    T2,
    /// `(1,0), (0,1), (1,1)` for `k = 0, 1, 2`, in `S^{−1,−1}_{1,−1}`.
    Finite,
}

impl Family {
    /// The normal-form parameters the family lives in.
    pub fn params(self) -> SolParams {
        use Sign::{Minus, Plus};
        match self {
            Family::S => SolParams::new(3, Minus, Plus, Plus),
            Family::T1 | Family::T2 => SolParams::new(1, Minus, Minus, Plus),
            Family::Finite => SolParams::new(1, Minus, Minus, Minus),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyElement {
    family: Family,
    k: u32,
    op: OrbitOp,
}

impl FamilyElement {
    /// `T₁`, `T₂` and the finite family only admit operations from `H`.
    pub fn new(family: Family, k: u32, op: OrbitOp) -> Result<FamilyElement> {
        if family != Family::S && !op.in_h() {
            return Err(Error::InvalidFamilyElement(format!(
                "{family:?} only admits orbit operations in H, got {op:?}"
            )));
        }
        if family == Family::Finite && k > 2 {
            return Err(Error::InvalidFamilyElement(format!(
                "the finite family has three base points, got index {k}"
            )));
        }
        Ok(FamilyElement { family, k, op })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn op(&self) -> OrbitOp {
        self.op
    }
}

fn base_point(family: Family, k: u32) -> Solution {
    let k = i64::from(k);
    match family {
        Family::S => Solution::new(-fib(2 * k - 1), fib(2 * k + 1)),
        Family::T1 => Solution::new(fib(2 * k + 1), fib(2 * k)),
        Family::T2 => Solution::new(fib(2 * k + 1), -fib(2 * k + 2)),
        Family::Finite => match k {
            0 => Solution::new(1, 0),
            1 => Solution::new(0, 1),
            _ => Solution::new(1, 1),
        },
    }
}

pub fn family_element(e: &FamilyElement) -> Solution {
    e.op.apply(&base_point(e.family, e.k))
}

fn max_abs(s: &Solution) -> BigInt {
    core::cmp::max(s.x.abs(), s.y.abs())
}

/// Closed-form members of a normal-form set (`ε = −1`, `n ≥ 0`) inside the
/// box `|x|, |y| ≤ bound`.
fn closed_form_in_box(p: &SolParams, bound: &BigInt) -> BTreeSet<Solution> {
    use Sign::{Minus, Plus};

    let mut out = BTreeSet::new();
    let mut sweep = |family: Family, ops: &[OrbitOp], swap_after: bool| {
        for k in 0u32.. {
            let base = base_point(family, k);
            // |coordinates| are non-decreasing in k for every family
            if max_abs(&base) > *bound {
                break;
            }
            for op in ops {
                let s = op.apply(&base);
                out.insert(if swap_after { diophantine::sym_swap(&s) } else { s });
            }
            if family == Family::Finite && k == 2 {
                break;
            }
        }
    };
    let n = &p.n;
    if *n == BigInt::from(3) && (p.d2, p.d1) == (Plus, Plus) {
        sweep(Family::S, &OrbitOp::ALL, false);
    } else if n.is_one() {
        match (p.d2, p.d1) {
            (Minus, Plus) => {
                sweep(Family::T1, &OrbitOp::H, false);
                sweep(Family::T2, &OrbitOp::H, false);
            }
            (Plus, Minus) => {
                sweep(Family::T1, &OrbitOp::H, true);
                sweep(Family::T2, &OrbitOp::H, true);
            }
            (Minus, Minus) => sweep(Family::Finite, &OrbitOp::H, false),
            (Plus, Plus) => {}
        }
    }
    out
}

/// The closed-form members of `S^{δ₂,δ₁}_{n,ε}` with `|x|, |y| ≤ bound`,
/// transported from the normal form.
pub fn closed_form_members(p: &SolParams, bound: u64) -> BTreeSet<Solution> {
    let nf = NormalForm::of(p);
    closed_form_in_box(&nf.params, &BigInt::from(bound))
        .iter()
        .map(|s| nf.to_original(s))
        .collect()
}

/// Whether brute-force enumeration of the box agrees with the closed-form
/// families.
pub fn family_covers(p: &SolParams, bound: u64) -> Result<bool> {
    let enumerated = diophantine::enumerate_box(p, bound)?;
    Ok(enumerated == closed_form_members(p, bound))
}

/// Every element of a family up to index `k_max`, with all admissible orbit
/// operations.
pub fn family_elements(family: Family, k_max: u32) -> Vec<FamilyElement> {
    let ops: &[OrbitOp] = if family == Family::S {
        &OrbitOp::ALL
    } else {
        &OrbitOp::H
    };
    let k_max = if family == Family::Finite {
        k_max.min(2)
    } else {
        k_max
    };
    (0..=k_max)
        .flat_map(|k| ops.iter().map(move |&op| FamilyElement { family, k, op }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_values() {
        assert_eq!(fib(0), BigInt::zero());
        assert_eq!(fib(-1), BigInt::one());
        assert_eq!(fib(7), BigInt::from(13));
        assert_eq!(fib(-5), BigInt::from(5));
        assert_eq!(fib(-6), BigInt::from(-8));
    }

    #[test]
    fn vajda_examples() {
        // r = 2k−5, m = 2k−3, j = 4 at k = 3
        assert!(vajda(1, 3, 4));
        assert_eq!(fib(1) * fib(7) - fib(3) * fib(5), BigInt::from(3));
        assert!(vajda(6, 6, 9));
        // r = 2k−1, m = 2k, j = 1 at k = 2
        assert!(vajda(3, 4, 1));
        assert_eq!(fib(3) * fib(5) - fib(4) * fib(4), BigInt::one());
    }

    #[test]
    fn markov_examples() {
        let b = |v: i64| BigInt::from(v);
        assert!(is_markov(&b(1), &b(1), &b(1)));
        assert!(is_markov(&b(1), &b(5), &b(13)));
        assert!(!is_markov(&b(1), &b(2), &b(4)));
        assert!(!is_markov(&b(0), &b(0), &b(0)));
    }

    #[test]
    fn family_element_examples() {
        let e = FamilyElement::new(Family::S, 2, OrbitOp::Id).unwrap();
        assert_eq!(family_element(&e), Solution::new(-2, 5));
        assert!(diophantine::is_member(&Family::S.params(), &Solution::new(-2, 5)));
        let e = FamilyElement::new(Family::T1, 0, OrbitOp::Id).unwrap();
        assert_eq!(family_element(&e), Solution::new(1, 0));
        let e = FamilyElement::new(Family::S, 0, OrbitOp::NegSwap).unwrap();
        assert_eq!(family_element(&e), Solution::new(-1, 1));
    }

    #[test]
    fn family_element_validation() {
        assert!(FamilyElement::new(Family::T2, 1, OrbitOp::Swap).is_err());
        assert!(FamilyElement::new(Family::Finite, 3, OrbitOp::Id).is_err());
        assert!(FamilyElement::new(Family::Finite, 2, OrbitOp::Neg).is_ok());
    }

    #[test]
    fn matrix_iterates() {
        assert_eq!(minus_vs_matrix(0), Solution::new(-1, 1));
        assert_eq!(minus_vs_matrix(1), Solution::new(-1, 2));
        assert_eq!(minus_vs_matrix(4), Solution::new(-13, 34));
    }

    #[test]
    fn coverage_examples() {
        let p = SolParams::from_ints(3, -1, 1, 1).unwrap();
        assert!(family_covers(&p, 400).unwrap());
        assert!(closed_form_members(&p, 400).contains(&Solution::new(-89, 233)));
        assert!(family_covers(&SolParams::from_ints(1, -1, -1, -1).unwrap(), 400).unwrap());
        assert!(family_covers(&SolParams::from_ints(1, -1, -1, 1).unwrap(), 400).unwrap());
        assert!(family_covers(&SolParams::from_ints(5, -1, 1, 1).unwrap(), 50).unwrap());
    }
}
