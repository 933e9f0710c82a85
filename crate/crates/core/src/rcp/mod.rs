//! Membership, the `pq/r` parameter and the cube-root identities of
//! Ramanujan cubic polynomials.
//!
//! A cubic `x^3 + p x^2 + q x + r` is an RCP when it has three real roots and
//! `p c + 3 c^2 + q = 0` with `c` the real cube root of `r`. For rational
//! coefficients the condition can only hold when `r` is a rational cube:
//! otherwise `1, c, c^2` are linearly independent over the rationals and the
//! coefficient of `c^2` would have to vanish. [`is_rcp`] uses this to answer
//! exactly without any numeric work.

mod generate;
mod identities;
mod ramanujan;
mod report;
mod xi;

use serde::Serialize;

pub use generate::{
    random_ab, random_rcp, random_real_rooted_non_rcp, rcp_from_params, rcp_from_shape,
};
pub use identities::{
    ratio_sum, ratio_sum_unchecked, verify_eq11, verify_eq12, verify_eq13, RatioSumReport,
};
pub use ramanujan::{ramanujan_t, special_t, to_ramanujan_form, RamanujanForm, TSelection};
pub use report::IdentityReport;
pub use xi::{xi_polynomial, xi_values, XiPoly, XiTriple};

use crate::cubic::Cubic;
use crate::error::{Error, Result};
use crate::numerics::{check_precision, discriminant, two_pow, working_precision, Real, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

/// Verdict of the membership test.
#[derive(Clone, Debug, Serialize)]
pub struct RcpCheck {
    pub is_rcp: bool,
    pub mode: Mode,
    /// `p c + 3 c^2 + q`.
    pub residual: Scalar,
    /// Real cube root of `r`.
    pub c: Scalar,
    /// `pq/r`.
    pub mu: Scalar,
    /// `p / c`.
    pub shape: Scalar,
    pub discriminant_ok: bool,
}

/// `p c + 3 c^2 + q` with `c` the real cube root of `r`; exact when the
/// coefficients are rational and `r` is a rational cube.
pub fn rcp_residual(c: &Cubic, prec: usize) -> Scalar {
    let w = working_precision(prec);
    let cr = c.r().cbrt(w);
    residual_with(c, &cr)
}

fn residual_with(c: &Cubic, cr: &Scalar) -> Scalar {
    &(&(c.p() * cr) + &(&Scalar::int(3) * &cr.square())) + c.q()
}

/// `max(1, |p c|, 3 c^2, |q|)`: the size of the terms that cancel in the
/// residual.
fn residual_scale(c: &Cubic, cr: &Scalar, prec: usize) -> Real {
    let terms = [c.p() * cr, &Scalar::int(3) * &cr.square(), c.q().clone()];
    terms
        .iter()
        .fold(Real::one(prec), |m, t| m.max(&t.to_real(prec).abs()))
}

/// Definition-level membership test.
pub fn is_rcp(c: &Cubic, prec: usize) -> RcpCheck {
    let w = working_precision(prec);
    let cr = c.r().cbrt(w);
    let residual = residual_with(c, &cr);
    let mu = mu(c);
    let shape = c.p() / &cr;
    let disc = discriminant(c);
    let tol = two_pow(-((prec / 2) as i64), w);

    let (is_rcp, mode, discriminant_ok) = if c.is_exact() {
        let disc_ok = disc.signum() >= 0;
        // r not a rational cube: the condition cannot hold exactly
        let holds = cr.is_exact() && residual.is_zero();
        (holds && disc_ok, Mode::Exact, disc_ok)
    } else {
        let scale = residual_scale(c, &cr, w);
        let holds = residual.to_real(w).abs() <= &tol * &scale;
        let disc_scale = c.root_scale(w).powi(6);
        let disc_ok = disc.to_real(w) >= -(&tol * &disc_scale);
        (holds && disc_ok, Mode::Numeric, disc_ok)
    };

    RcpCheck {
        is_rcp,
        mode,
        residual: round_scalar(residual, prec),
        c: round_scalar(cr, prec),
        mu,
        shape: round_scalar(shape, prec),
        discriminant_ok,
    }
}

pub(crate) fn round_scalar(x: Scalar, prec: usize) -> Scalar {
    match x {
        Scalar::Approx(r) => Scalar::Approx(r.with_precision(prec)),
        exact => exact,
    }
}

pub(crate) fn require_rcp(c: &Cubic, prec: usize) -> Result<RcpCheck> {
    check_precision(prec)?;
    let check = is_rcp(c, prec);
    if check.is_rcp {
        Ok(check)
    } else {
        Err(Error::NotAnRcp)
    }
}

/// `pq/r`, computed from the coefficients (exact for rational input).
pub fn mu(c: &Cubic) -> Scalar {
    &(c.p() * c.q()) / c.r()
}

/// `p / c` with `c` the real cube root of `r`.
pub fn shape(c: &Cubic, prec: usize) -> Scalar {
    let w = working_precision(prec);
    round_scalar(c.p() / &c.r().cbrt(w), prec)
}

/// `9/4 - pq/r`, checked against `(3/2 + p/c)^2`.
///
/// For an RCP, `pq/r = -s^2 - 3s` with `s = p/c`, so the gap is a perfect
/// square and `pq/r <= 9/4`.
pub fn mu_gap(c: &Cubic, prec: usize) -> Result<Scalar> {
    require_rcp(c, prec)?;
    let w = working_precision(prec);
    let gap = &Scalar::ratio(9, 4) - &mu(c);
    let s = c.p() / &c.r().cbrt(w);
    let square = (&Scalar::ratio(3, 2) + &s).square();
    let report = IdentityReport::judge("mu_gap", gap.to_real(w), square.to_real(w), prec);
    if !report.pass {
        return Err(Error::NotAnRcp);
    }
    Ok(round_scalar(gap, prec))
}
