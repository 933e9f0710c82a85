//! The cube-root identities satisfied by the roots of an RCP.

use serde::Serialize;

use super::report::IdentityReport;
use super::{mu, require_rcp};
use crate::cubic::Cubic;
use crate::error::{Error, Result};
use crate::numerics::{solve_cubic_real, working_precision, Real, RootTriple, Scalar};

fn roots_at(c: &Cubic, w: usize) -> Result<RootTriple> {
    solve_cubic_real(c, w)
}

fn sum_cbrt<'a>(xs: impl IntoIterator<Item = &'a Real>) -> Real {
    let mut it = xs.into_iter();
    let first = it.next().expect("non-empty").cbrt();
    it.fold(first, |acc, x| &acc + &x.cbrt())
}

/// Sum of the cube roots of the roots:
/// `x1^(1/3) + x2^(1/3) + x3^(1/3) = (-p - 6 r^(1/3) + 3 (9r - pq)^(1/3))^(1/3)`.
pub fn verify_eq11(c: &Cubic, prec: usize) -> Result<IdentityReport> {
    require_rcp(c, prec)?;
    let w = working_precision(prec);
    let roots = roots_at(c, w)?;
    let lhs = sum_cbrt(roots.reals());

    let (p, q, r) = (c.p(), c.q(), c.r());
    let cr = r.cbrt(w);
    let inner = &(&(&Scalar::int(9) * r) - &(p * q)).cbrt(w) * &Scalar::int(3);
    let rhs = (&(&(-p) - &(&Scalar::int(6) * &cr)) + &inner).cbrt(w);
    Ok(IdentityReport::judge("eq11", lhs, rhs.to_real(w), prec))
}

/// Sum of the cube roots of the pairwise products of the roots:
/// `(x1 x2)^(1/3) + (x2 x3)^(1/3) + (x3 x1)^(1/3)
///   = (q + 6 r^(2/3) - 3 (9 r^2 - pqr)^(1/3))^(1/3)`.
pub fn verify_eq12(c: &Cubic, prec: usize) -> Result<IdentityReport> {
    require_rcp(c, prec)?;
    let w = working_precision(prec);
    let roots = roots_at(c, w)?;
    let [x1, x2, x3] = roots.reals();
    let lhs = sum_cbrt(&[x1 * x2, x2 * x3, x3 * x1]);

    let (p, q, r) = (c.p(), c.q(), c.r());
    let cr = r.cbrt(w);
    let inner = (&(&Scalar::int(9) * &r.square()) - &(&(p * q) * r)).cbrt(w);
    let rhs = (&(q + &(&Scalar::int(6) * &cr.square())) - &(&Scalar::int(3) * &inner)).cbrt(w);
    Ok(IdentityReport::judge("eq12", lhs, rhs.to_real(w), prec))
}

/// Sum of the reciprocal cube roots of the roots:
/// `x1^(-1/3) + x2^(-1/3) + x3^(-1/3)
///   = r^(-1/3) (-q - 6 r^(2/3) + 3 (9 r^2 - pqr)^(1/3))^(1/3)`.
pub fn verify_eq13(c: &Cubic, prec: usize) -> Result<IdentityReport> {
    require_rcp(c, prec)?;
    let w = working_precision(prec);
    let roots = roots_at(c, w)?;
    let recips: Vec<Real> = roots.reals().iter().map(Real::recip).collect();
    let lhs = sum_cbrt(&recips);

    let (p, q, r) = (c.p(), c.q(), c.r());
    let cr = r.cbrt(w);
    let inner = (&(&Scalar::int(9) * &r.square()) - &(&(p * q) * r)).cbrt(w);
    let body = &(&(-q) - &(&Scalar::int(6) * &cr.square())) + &(&Scalar::int(3) * &inner);
    let rhs = &body.cbrt(w) / &cr;
    Ok(IdentityReport::judge("eq13", lhs, rhs.to_real(w), prec))
}

/// Certificates for the six-ratio cube-root sum and its cube law.
#[derive(Clone, Debug, Serialize)]
pub struct RatioSumReport {
    /// `sum over i != j of (xi/xj)^(1/3) = (pq/r - 9)^(1/3)`.
    pub identity: IdentityReport,
    /// `(sum of (xi/xj)^(1/3))^3 = (sum of xi/xj) - 6`.
    pub cube_law: IdentityReport,
}

/// Sum of the cube roots of the six ordered root ratios, for an RCP.
pub fn ratio_sum(c: &Cubic, prec: usize) -> Result<RatioSumReport> {
    require_rcp(c, prec)?;
    ratio_sum_unchecked(c, prec)
}

/// [`ratio_sum`] without the membership gate; used as a negative control on
/// cubics that are real-rooted but not RCPs.
pub fn ratio_sum_unchecked(c: &Cubic, prec: usize) -> Result<RatioSumReport> {
    let w = working_precision(prec);
    let roots = roots_at(c, w)?;
    if roots.has_zero_root() {
        return Err(Error::ZeroConstantTerm);
    }
    let xs = roots.reals();
    let mut ratios = Vec::with_capacity(6);
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                ratios.push(&xs[i] / &xs[j]);
            }
        }
    }
    let lhs = sum_cbrt(&ratios);
    let rhs = (&mu(c) - &Scalar::int(9)).cbrt(w).to_real(w);
    let plain = ratios.iter().fold(Real::zero(w), |acc, x| &acc + x);
    let cube_law = IdentityReport::judge("eq27", lhs.cube(), &plain - &Real::from_i64(6, w), prec);
    Ok(RatioSumReport {
        identity: IdentityReport::judge("eq26", lhs, rhs, prec),
        cube_law,
    })
}
