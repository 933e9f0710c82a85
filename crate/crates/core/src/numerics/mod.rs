//! Arbitrary-precision arithmetic, real cube roots, cubic solving and
//! symmetric-function utilities.

mod real;
mod reconstruct;
mod roots;
mod scalar;
mod symmetric;

pub use real::{two_pow, working_precision, Real, DEFAULT_PRECISION, GUARD_BITS, MIN_PRECISION};
pub use reconstruct::{convergents, reconstruct_rational};
#[allow(unused_imports)]
pub(crate) use roots::check_precision;
pub use roots::{discriminant, real_roots, solve_cubic_real, RootTriple};
pub use scalar::{rat, rational_cube_root, Scalar};
pub use symmetric::{power_sum3, SymTriple};

/// Real cube root of `x` at `prec` bits, computed with guard bits.
pub fn real_cbrt(x: &Real, prec: usize) -> Real {
    x.with_precision(working_precision(prec))
        .cbrt()
        .with_precision(prec)
}

/// `|a - b| <= tol`.
pub fn within(a: &Real, b: &Real, tol: &Real) -> bool {
    (a - b).abs() <= *tol
}
