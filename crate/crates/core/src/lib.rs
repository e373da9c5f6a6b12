//! Exact computation of boundary invariants of Drinfeld modular
//! varieties: zeta functions of function-field coefficient rings and
//! their special values, vanishing orders of discriminant and division
//! forms along cuspidal divisors, the cuspidal-divisor matrix with its
//! finite-index certificate, Eisenstein independence matrices over the
//! completion at infinity, and formal t-expansion machinery with a
//! two-route verification of the discriminant product formula.
//!
//! Everything is exact: arbitrary-precision rationals, finite fields,
//! truncated series with mandatory explicit precision, and cyclotomic
//! arithmetic. No floating point anywhere.

pub mod arith;
pub mod error;
pub mod rings;
pub mod selftest;
pub mod boundary;
pub mod expansions;
pub mod independence;
pub mod zeta;

pub use error::{Error, Result};
