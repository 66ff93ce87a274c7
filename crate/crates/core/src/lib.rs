//! Homology-level calculus for genus-1 horizontal handlebody decompositions.
//!
//! Everything here is exact integer arithmetic on `H_1(T; Z)` of the
//! Heegaard torus, with basis `μ = (1,0)`, `λ = (0,1)` and `μ·λ = +1`;
//! `λ` bounds the compressing disc. The crate is `no_std` and only needs
//! `alloc`.
//!
//! - [`torus`]: curve classes, the intersection pairing, Dehn twists and
//!   monodromy matrices.
//! - [`diophantine`]: the solution sets `S^{δ₂,δ₁}_{n,ε}` of
//!   `δ₂x² + δ₁y² + nxy = ε`, mutations, descent and bottom sets.
//! - [`hurwitz`]: factorizations, Hurwitz moves and orbit search.
//! - [`families`]: Fibonacci numbers with negative indices and the closed
//!   form parametrizations of the solution sets.
//! - [`classifier`]: classification of the resulting cobordisms, rational
//!   balls `B_{p,q}`, lens spaces and Kirby records.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classifier;
pub mod diophantine;
mod error;
pub mod families;
pub mod hurwitz;
pub mod torus;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
