//! Homology of the Heegaard torus.
//!
//! Classes are written `pμ + qλ` and stored as `(p, q)`. The intersection
//! pairing is `a·b = a_p b_q − a_q b_p`, so `μ·λ = 1`. A signed Dehn twist
//! acts by `a ↦ a + δ (c·a) c`.

use core::fmt;
use core::ops::{Mul, Neg};

use alloc::string::ToString;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A sign `±1`, used for twist exponents, `ε` and orientations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_int(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other.to_string())),
        }
    }

    pub fn from_bigint(v: &BigInt) -> Result<Sign> {
        if v.is_one() {
            Ok(Sign::Plus)
        } else if *v == -BigInt::one() {
            Ok(Sign::Minus)
        } else {
            Err(Error::InvalidSign(v.to_string()))
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.value())
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// An oriented primitive class `pμ + qλ`.
///
/// The unoriented class is recovered with [`CurveClass::canonical`]; the
/// orientation relative to it with [`CurveClass::orientation`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    p: BigInt,
    q: BigInt,
}

impl CurveClass {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<CurveClass> {
        let (p, q) = (p.into(), q.into());
        if !p.gcd(&q).is_one() {
            return Err(Error::NotPrimitive {
                p: p.to_string(),
                q: q.to_string(),
            });
        }
        Ok(CurveClass { p, q })
    }

    /// Only for images of primitive classes under `SL(2,Z)`.
    pub(crate) fn from_primitive(p: BigInt, q: BigInt) -> CurveClass {
        debug_assert!(p.gcd(&q).is_one());
        CurveClass { p, q }
    }

    pub fn mu() -> CurveClass {
        CurveClass {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn lambda() -> CurveClass {
        CurveClass {
            p: BigInt::zero(),
            q: BigInt::one(),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn reversed(&self) -> CurveClass {
        CurveClass {
            p: -&self.p,
            q: -&self.q,
        }
    }

    /// Sign `s` with `self = s · self.canonical()`.
    pub fn orientation(&self) -> Sign {
        if self.p.is_positive() || (self.p.is_zero() && self.q.is_positive()) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.orientation().is_plus()
    }

    /// Representative with `p > 0`, or `(0, 1)`.
    pub fn canonical(&self) -> CurveClass {
        match self.orientation() {
            Sign::Plus => self.clone(),
            Sign::Minus => self.reversed(),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> (BigInt, BigInt) {
        (&self.p * k, &self.q * k)
    }
}

impl Neg for &CurveClass {
    type Output = CurveClass;

    fn neg(self) -> CurveClass {
        self.reversed()
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Algebraic intersection number `a·b`.
pub fn intersect(a: &CurveClass, b: &CurveClass) -> BigInt {
    &a.p * &b.q - &a.q * &b.p
}

/// `τ_c^δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedTwist {
    pub curve: CurveClass,
    pub sign: Sign,
}

impl SignedTwist {
    pub fn new(curve: CurveClass, sign: Sign) -> SignedTwist {
        SignedTwist { curve, sign }
    }

    pub fn inverse(&self) -> SignedTwist {
        SignedTwist {
            curve: self.curve.clone(),
            sign: -self.sign,
        }
    }

    /// Same twist with its curve replaced by the canonical representative.
    pub fn canonical(&self) -> SignedTwist {
        SignedTwist {
            curve: self.curve.canonical(),
            sign: self.sign,
        }
    }

    pub fn apply(&self, a: &CurveClass) -> CurveClass {
        twist_apply(self, a)
    }

    pub fn matrix(&self) -> MonodromyMatrix {
        twist_matrix(self)
    }
}

impl fmt::Display for SignedTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.curve, self.sign)
    }
}

/// `a + δ (c·a) c`.
pub fn twist_apply(t: &SignedTwist, a: &CurveClass) -> CurveClass {
    let k = intersect(&t.curve, a) * t.sign.value();
    let (dp, dq) = t.curve.scaled(&k);
    CurveClass::from_primitive(&a.p + dp, &a.q + dq)
}

/// Integer 2×2 matrix of determinant one, acting on column vectors in the
/// `(μ, λ)` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonodromyMatrix {
    rows: [[BigInt; 2]; 2],
}

impl MonodromyMatrix {
    pub fn from_rows(rows: [[BigInt; 2]; 2]) -> Result<MonodromyMatrix> {
        let m = MonodromyMatrix { rows };
        if !m.determinant().is_one() {
            return Err(Error::NotUnimodular);
        }
        Ok(m)
    }

    pub fn identity() -> MonodromyMatrix {
        MonodromyMatrix {
            rows: [
                [BigInt::one(), BigInt::zero()],
                [BigInt::zero(), BigInt::one()],
            ],
        }
    }

    pub fn rows(&self) -> &[[BigInt; 2]; 2] {
        &self.rows
    }

    pub fn determinant(&self) -> BigInt {
        let [[a, b], [c, d]] = &self.rows;
        a * d - b * c
    }

    pub fn apply(&self, v: &CurveClass) -> CurveClass {
        let [[a, b], [c, d]] = &self.rows;
        CurveClass::from_primitive(a * &v.p + b * &v.q, c * &v.p + d * &v.q)
    }

    /// `m(λ)`, the second column.
    pub fn image_of_lambda(&self) -> CurveClass {
        CurveClass::from_primitive(self.rows[0][1].clone(), self.rows[1][1].clone())
    }
}

impl Mul for &MonodromyMatrix {
    type Output = MonodromyMatrix;

    fn mul(self, rhs: &MonodromyMatrix) -> MonodromyMatrix {
        let [[a, b], [c, d]] = &self.rows;
        let [[e, f], [g, h]] = &rhs.rows;
        MonodromyMatrix {
            rows: [
                [a * e + b * g, a * f + b * h],
                [c * e + d * g, c * f + d * h],
            ],
        }
    }
}

impl fmt::Display for MonodromyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.rows;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// `[[1−δpq, δp²], [−δq², 1+δpq]]` for `τ_{(p,q)}^δ`.
pub fn twist_matrix(t: &SignedTwist) -> MonodromyMatrix {
    let d = t.sign.to_bigint();
    let (p, q) = (&t.curve.p, &t.curve.q);
    let pq = p * q;
    MonodromyMatrix {
        rows: [
            [BigInt::one() - &d * &pq, &d * p * p],
            [-(&d * q * q), BigInt::one() + &d * &pq],
        ],
    }
}

/// Product of the twists in attachment order: the first twist acts first,
/// so the result is `M_k ⋯ M_1`.
pub fn monodromy(twists: &[SignedTwist]) -> MonodromyMatrix {
    twists
        .iter()
        .fold(MonodromyMatrix::identity(), |acc, t| &twist_matrix(t) * &acc)
}

/// `|λ·m(λ)| = 1`: the upper boundary is `S³`.
pub fn gives_s3(m: &MonodromyMatrix) -> bool {
    intersect(&CurveClass::lambda(), &m.image_of_lambda()).abs().is_one()
}

/// `ε = (δ₁⋯δ_k) · (m(λ)·λ)`.
pub fn epsilon(m: &MonodromyMatrix, sign_product: Sign) -> Result<Sign> {
    if !gives_s3(m) {
        return Err(Error::NotS3Boundary);
    }
    let pairing = intersect(&m.image_of_lambda(), &CurveClass::lambda());
    Ok(sign_product * Sign::from_bigint(&pairing)?)
}

/// Framing induced by the torus on `pμ + qλ`: `pq`.
pub fn surface_framing(c: &CurveClass) -> BigInt {
    &c.p * &c.q
}

/// Framing of the 2-handle attached along `c` with twist exponent `δ`:
/// `pq − δ`.
pub fn handle_framing(c: &CurveClass, delta: Sign) -> BigInt {
    surface_framing(c) - delta.value()
}
