use core::fmt;

use alloc::format;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::torus::Sign;
use crate::{Error, Result};

/// A signed rational homology ball `±B_{p,q}` in canonical form.
///
/// `B_{p,q} ≅ B_{p,p−q}`, so `q` is stored as `min(q mod p, p − q mod p)`.
/// `B_{1,0} = B⁴` is amphichiral and always carries `+`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalBall {
    p: BigInt,
    q: BigInt,
    orientation: Sign,
}

impl RationalBall {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, orientation: Sign) -> Result<RationalBall> {
        let (p, q) = (p.into(), q.into());
        if p < BigInt::one() {
            return Err(Error::InvalidBall(format!("p must be positive, got {p}")));
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::InvalidBall(format!("gcd({p},{q}) ≠ 1")));
        }
        let r = q.mod_floor(&p);
        let q = core::cmp::min(r.clone(), &p - &r);
        let orientation = if p.is_one() { Sign::Plus } else { orientation };
        let q = if p.is_one() { BigInt::zero() } else { q };
        Ok(RationalBall { p, q, orientation })
    }

    pub fn four_ball() -> RationalBall {
        RationalBall {
            p: BigInt::one(),
            q: BigInt::zero(),
            orientation: Sign::Plus,
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn orientation(&self) -> Sign {
        self.orientation
    }

    pub fn is_four_ball(&self) -> bool {
        self.p.is_one()
    }

    /// `−B`, canonicalized.
    pub fn reversed(&self) -> RationalBall {
        RationalBall::new(self.p.clone(), self.q.clone(), -self.orientation)
            .expect("already valid")
    }
}

impl fmt::Display for RationalBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_four_ball() {
            return f.write_str("B^4");
        }
        let s = if self.orientation.is_plus() { "+" } else { "-" };
        write!(f, "{s}B_{{{},{}}}", self.p, self.q)
    }
}

/// The lens space `L(a, b)`, with `b` reduced into `[0, a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensSpace {
    a: BigInt,
    b: BigInt,
}

impl LensSpace {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<LensSpace> {
        let (a, b) = (a.into(), b.into());
        if a < BigInt::one() {
            return Err(Error::InvalidLens(format!("a must be positive, got {a}")));
        }
        if !a.gcd(&b).is_one() {
            return Err(Error::InvalidLens(format!("gcd({a},{b}) ≠ 1")));
        }
        let b = b.mod_floor(&a);
        Ok(LensSpace { a, b })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.a, self.b)
    }
}

/// Oriented boundary of `±B_{p,q}` for arbitrary coprime `p ≥ 1`, `q`:
/// `L(p², pq − 1)` for `+`, `L(p², p² − pq + 1)` for `−`.
pub fn ball_boundary(p: &BigInt, q: &BigInt, orientation: Sign) -> Result<LensSpace> {
    let a = p * p;
    let b = match orientation {
        Sign::Plus => p * q - 1u32,
        Sign::Minus => &a - p * q + 1u32,
    };
    LensSpace::new(a, b)
}

pub fn lens_boundary(ball: &RationalBall) -> LensSpace {
    ball_boundary(&ball.p, &ball.q, ball.orientation).expect("valid ball")
}

/// `L(a, b₁) ≅ L(a, b₂)` orientation-preservingly iff `b₂ ≡ b₁^{±1} mod a`.
pub fn lens_oriented_equal(l1: &LensSpace, l2: &LensSpace) -> bool {
    if l1.a != l2.a {
        return false;
    }
    let a = &l1.a;
    l1.b == l2.b || (&l1.b * &l2.b).mod_floor(a) == BigInt::one().mod_floor(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_balls() {
        let b = RationalBall::new(5, 4, Sign::Plus).unwrap();
        assert_eq!((b.p().clone(), b.q().clone()), (BigInt::from(5), BigInt::from(1)));
        let b = RationalBall::new(3, -7, Sign::Minus).unwrap();
        assert_eq!(b.q(), &BigInt::from(1));
        assert_eq!(RationalBall::new(1, 5, Sign::Minus).unwrap(), RationalBall::four_ball());
        assert!(RationalBall::new(4, 2, Sign::Plus).is_err());
        assert!(RationalBall::new(0, 1, Sign::Plus).is_err());
        assert!(RationalBall::new(-3, 1, Sign::Plus).is_err());
    }

    #[test]
    fn boundaries() {
        let b21 = RationalBall::new(2, 1, Sign::Plus).unwrap();
        assert_eq!(lens_boundary(&b21), LensSpace::new(4, 1).unwrap());
        assert_eq!(lens_boundary(&b21.reversed()), LensSpace::new(4, 3).unwrap());
        assert_eq!(lens_boundary(&RationalBall::four_ball()), LensSpace::new(1, 0).unwrap());
        let b51 = RationalBall::new(5, 1, Sign::Plus).unwrap();
        assert_eq!(lens_boundary(&b51), LensSpace::new(25, 4).unwrap());
    }

    #[test]
    fn oriented_equality() {
        let l = LensSpace::new(4, 1).unwrap();
        assert!(lens_oriented_equal(&l, &l));
        assert!(!lens_oriented_equal(&l, &LensSpace::new(4, 3).unwrap()));
        // 2·3 ≡ 1 mod 5
        assert!(lens_oriented_equal(
            &LensSpace::new(5, 2).unwrap(),
            &LensSpace::new(5, 3).unwrap()
        ));
        assert!(!lens_oriented_equal(
            &LensSpace::new(5, 2).unwrap(),
            &LensSpace::new(7, 2).unwrap()
        ));
        assert!(LensSpace::new(4, 2).is_err());
    }
}
