//! Exact-integer parsers for command-line values.

use horokit_core::hurwitz::Factorization;
use horokit_core::torus::{CurveClass, Sign, SignedTwist};
use num_bigint::BigInt;

fn int(s: &str) -> Result<BigInt, String> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    t.parse::<BigInt>()
        .map_err(|_| format!("'{s}' is not an integer"))
}

/// `"p,q"`, e.g. `-1,-3`.
pub fn curve(s: &str) -> Result<CurveClass, String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a curve as 'p,q', got '{s}'"))?;
    CurveClass::new(int(p)?, int(q)?).map_err(|e| e.to_string())
}

/// `+1` or `-1` (a bare `1` is accepted as `+1`).
pub fn sign(s: &str) -> Result<Sign, String> {
    match s.trim() {
        "+1" | "1" => Ok(Sign::Plus),
        "-1" => Ok(Sign::Minus),
        other => Err(format!("expected a sign +1 or -1, got '{other}'")),
    }
}

pub fn integer(s: &str) -> Result<BigInt, String> {
    int(s)
}

/// `"p,q:±1"`.
pub fn twist(s: &str) -> Result<SignedTwist, String> {
    let (c, d) = s
        .rsplit_once(':')
        .ok_or_else(|| format!("expected a twist as 'p,q:+1', got '{s}'"))?;
    Ok(SignedTwist::new(curve(c)?, sign(d)?))
}

/// Whitespace-separated twists in attachment order (lowest level first),
/// e.g. `"1,0:+1 0,1:-1"`.
pub fn factorization(s: &str) -> Result<Factorization, String> {
    let twists = s
        .split_whitespace()
        .map(twist)
        .collect::<Result<Vec<_>, _>>()?;
    if twists.is_empty() {
        return Err("empty factorization".into());
    }
    Ok(Factorization::new(twists))
}
