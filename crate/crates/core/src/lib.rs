#![no_std]
#![forbid(unsafe_code)]

//! Exact and high-precision machinery for explicit least non-split prime
//! bounds.
//!
//! The crate is split along the computation:
//!
//! * [`admissible`] builds the constraint system for admissible weight
//!   polynomials, solves for the extremal polynomial `P_d` by exact linear
//!   programming and by a square linear solve, and certifies nonnegativity of
//!   arbitrary candidates with Sturm sequences.
//! * [`exponent`] evaluates `a(λ; n, P)` and `b(λ; P)` in arbitrary precision
//!   and maximizes over `λ` to obtain `A(n, P)`.
//! * [`bounds`] turns field parameters into the explicit constants and
//!   exponents (`N_F`, `B_F`, `X_0`, comparison exponents).
//! * [`numfield`] is a small empirical oracle over `ℚ`: polynomial
//!   discriminants, splitting of primes, and least non-split prime scans.
//!
//! Everything here depends only on `core` and `alloc`. File formats and the
//! command line live in the `nonsplit` crate.

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod admissible;
pub mod bounds;
mod error;
pub mod exponent;
pub mod linalg;
pub mod numfield;
pub mod poly;
pub mod real;

pub use error::{Error, Result};

/// Arbitrary-precision rational; the coefficient domain of all exact
/// computations in this crate.
pub type ExactRational = num_rational::BigRational;
