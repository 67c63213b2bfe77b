//! Colored Jones polynomials of 3-string pretzel knots `P(1/r, 1/s, 1/t)`,
//! their maximal-degree quasi-polynomials, and boundary slopes of candidate
//! essential surfaces from the Hatcher-Oertel edgepath algorithm.
//!
//! All arithmetic is exact. Polynomials live in [`arith::HalfLaurent`],
//! slopes and degrees in [`arith::Rational`].

pub mod arith;
pub mod error;
pub mod hatcher_oertel;
pub mod jones;
pub mod quantum;
mod series;
pub mod verify;

pub use error::{Error, Result};
