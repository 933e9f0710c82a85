//! Transformations that map RCPs to RCPs, and the matchings between root
//! values that they induce.
//!
//! With `c` the real cube root of `r`, the three maps are
//!
//! * scaling by `a`: roots `a x_i`, coefficients `(ap, a^2 q, a^3 r)`;
//! * reciprocal: roots `r / x_i`, coefficients `(q, pr, r^2)`;
//! * shift: roots `x_i - c`, coefficients `(-q/c, pc, -r)`.
//!
//! Reciprocal equals the shift followed by scaling with `-c`, so the values
//! `c^2 / x_i` are a permutation of `c - x_i`.

mod matching;

pub use matching::{
    match_same_mu, ratio_multiset, thm33_permutation, MatchWitness, PermutationWitness, RatioPair,
};

use crate::cubic::Cubic;
use crate::error::{Error, Result};
use crate::numerics::{working_precision, Scalar};
use crate::rcp::require_rcp;

/// `x^3 + ap x^2 + a^2 q x + a^3 r`, whose roots are `a` times those of `c`.
pub fn scale(c: &Cubic, a: &Scalar) -> Result<Cubic> {
    if a.is_zero() {
        return Err(Error::ZeroScale);
    }
    Cubic::new(a * c.p(), &a.square() * c.q(), &a.cube() * c.r())
}

/// `x^3 + q x^2 + pr x + r^2`, with roots `r / x_i`.
pub fn reciprocal(c: &Cubic, prec: usize) -> Result<Cubic> {
    require_rcp(c, prec)?;
    Cubic::new(c.q().clone(), c.p() * c.r(), c.r().square())
}

/// `x^3 - (q/c) x^2 + pc x - r`, with roots `x_i - c`.
pub fn shift_by_cbrt_r(c: &Cubic, prec: usize) -> Result<Cubic> {
    require_rcp(c, prec)?;
    let cr = c.r().cbrt(working_precision(prec));
    Cubic::new(-(c.q() / &cr), c.p() * &cr, -c.r())
}
