//! Ramanujan cubic polynomials.
//!
//! A monic cubic `x^3 + p x^2 + q x + r` with `r != 0` and three real roots is
//! a Ramanujan cubic polynomial (RCP) when `p c + 3 c^2 + q = 0` for the real
//! cube root `c` of `r`. For such cubics the sums of cube roots of the roots,
//! of their pairwise products and of their ratios all have closed forms in
//! `p`, `q` and `r`.
//!
//! The crate is organised as:
//!
//! - [`numerics`]: high-precision reals, exact rationals, real cube roots and
//!   a real-rooted cubic solver.
//! - [`rcp`]: membership tests, the `pq/r` parameter, the cube-root identities
//!   with certificates, the `xi` polynomial and the general Ramanujan engine.
//! - [`transforms`]: scaling, reciprocal and shift transforms and the
//!   permutation/matching witnesses between root sets.
//! - [`catalog`]: the built-in trigonometric families, verification of every
//!   printed identity, and the cosine-orbit scanner.
//!
//! Real cube roots are used throughout: the cube root of a negative number is
//! the negative real cube root.

pub mod catalog;
pub mod cubic;
pub mod error;
pub mod numerics;
pub mod rcp;
pub mod transforms;

pub use cubic::Cubic;
pub use error::{Error, Result};
pub use numerics::{Real, Scalar};
