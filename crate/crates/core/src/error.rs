use core::fmt;

use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `(p, q)` is not a primitive class.
    NotPrimitive { p: String, q: String },
    /// An integer that must be `±1` was something else.
    InvalidSign(String),
    /// `|λ·m(λ)| ≠ 1`, so the upper boundary is not `S³`.
    NotS3Boundary,
    /// The pair is not in the solution set of the given parameters.
    NotMember { x: String, y: String },
    /// Hurwitz move index out of range.
    IndexOutOfRange { index: usize, len: usize },
    /// Factorizations of different lengths were compared.
    LengthMismatch { left: usize, right: usize },
    /// Enumeration bound must be positive.
    ZeroBound,
    /// Parallel curves (`n = 0`).
    ParallelCurves,
    /// A horizontal datum whose derived pair violates the defining equation.
    InconsistentDatum,
    /// A matrix that is not in `SL(2,Z)`.
    NotUnimodular,
    InvalidBall(String),
    InvalidLens(String),
    InvalidFamilyElement(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrimitive { p, q } => write!(f, "({p},{q}) is not a primitive class"),
            Error::InvalidSign(s) => write!(f, "expected a sign +1 or -1, got {s}"),
            Error::NotS3Boundary => f.write_str("not an S³ boundary: |λ·m(λ)| ≠ 1"),
            Error::NotMember { x, y } => write!(f, "({x},{y}) is not a member of the solution set"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "move index {index} out of range for factorization of length {len}")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "factorization lengths differ ({left} vs {right})")
            }
            Error::ZeroBound => f.write_str("bound must be at least 1"),
            Error::ParallelCurves => {
                f.write_str("n=0 invalid: not a valid (1,1,2,0) S³-cobordism datum")
            }
            Error::InconsistentDatum => {
                f.write_str("datum violates the quadratic equation or the gcd condition")
            }
            Error::NotUnimodular => f.write_str("matrix determinant is not 1"),
            Error::InvalidBall(s) => write!(f, "invalid rational ball: {s}"),
            Error::InvalidLens(s) => write!(f, "invalid lens space: {s}"),
            Error::InvalidFamilyElement(s) => write!(f, "invalid family element: {s}"),
        }
    }
}

impl core::error::Error for Error {}
