use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::hurwitz::HorizontalDatum;
use crate::torus::{handle_framing, Sign, SignedTwist};

/// A framed 2-handle drawn as the `(p, q)` curve on the torus around the
/// dotted unknot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirbyComponent {
    pub p: BigInt,
    pub q: BigInt,
    pub sign: Sign,
    pub framing: BigInt,
}

/// Coordinates-and-framings description of a Kirby diagram: an optional
/// dotted unknot for the 1-handle and one component per 2-handle, lowest
/// level first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirbyRecord {
    pub dotted_unknot: bool,
    pub components: Vec<KirbyComponent>,
}

pub fn emit_kirby(twists: &[SignedTwist], one_handle: bool) -> KirbyRecord {
    KirbyRecord {
        dotted_unknot: one_handle,
        components: twists
            .iter()
            .map(|t| KirbyComponent {
                p: t.curve.p().clone(),
                q: t.curve.q().clone(),
                sign: t.sign,
                framing: handle_framing(&t.curve, t.sign),
            })
            .collect(),
    }
}

pub fn emit_kirby_datum(d: &HorizontalDatum) -> KirbyRecord {
    emit_kirby(d.factorization().twists(), true)
}
