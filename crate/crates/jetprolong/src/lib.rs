//! Exact symbolic computation of the coefficients that appear when a vector
//! field on a space of independent variables `x^1..x^n` and dependent
//! variables `y^1..y^m` is lifted (prolonged) to a jet space of order κ.
//!
//! Two independent engines produce every coefficient:
//!
//! * [`inductive`] applies the classical recursion built from total
//!   differentiation operators and serves as the ground truth;
//! * [`closedform`] evaluates the explicit combinatorial formula organised by
//!   weight specifications, coset transversals and shuffle permutations.
//!
//! Agreement of the two engines on canonical forms is the central check, and
//! the crate also derives the four multivariate Faa di Bruno formulas (see
//! [`faadibruno`]) from the same machinery, with a set-partition oracle and an
//! exact rational numeric checker as further independent paths.
//!
//! All arithmetic is exact: integer coefficients are arbitrary precision and
//! the numeric checker works over rationals, so every comparison in the test
//! suite is an equality, never a tolerance.

pub mod closedform;
pub mod combinatorics;
mod error;
pub mod faadibruno;
pub mod inductive;
pub mod jetalgebra;
pub mod ratpoly;
pub mod render;
pub mod verify;

pub use error::JetError;

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, JetError>;
