//! Exact decision procedure for the real solvability of systems of symmetric
//! polynomial equations with rational coefficients.
//!
//! The input system is sliced along the orbit types of the symmetric group
//! (one slice per partition of `n`), each slice is rewritten in elementary
//! symmetric coordinates, and the critical points of a generic proper
//! invariant objective are computed exactly as a zero-dimensional
//! parametrization. Real points are then detected by counting real roots of
//! fiber polynomials over the real roots of the eliminating polynomial,
//! using Sturm-Habicht sequences and Thom encodings.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! parallel orchestration live in the `symreal` companion crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod critsys;
pub mod driver;
mod error;
pub mod realcount;
pub mod symmetry;
pub mod witness;
pub mod zerodim;

pub use error::{Error, Result};
