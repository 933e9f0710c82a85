use serde::Serialize;

use crate::numerics::{two_pow, Real};

/// Certificate for a single identity evaluated at a stated precision.
///
/// `pass` holds exactly when `residual <= tolerance`, where the tolerance is
/// `2^(-precision_bits/2) * max(1, |lhs|, |rhs|)` unless overridden.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    #[serde(rename = "identity")]
    pub identity_id: String,
    pub lhs: Real,
    pub rhs: Real,
    pub residual: Real,
    pub tolerance: Real,
    pub pass: bool,
    pub precision_bits: usize,
}

impl IdentityReport {
    /// Compares `lhs` and `rhs` (computed with guard bits) and records the
    /// verdict at `prec` bits.
    pub fn judge(id: impl Into<String>, lhs: Real, rhs: Real, prec: usize) -> Self {
        Self::judge_with_exponent(id, lhs, rhs, prec, (prec / 2) as i64)
    }

    /// As [`judge`](Self::judge) with tolerance `2^(-tol_exp) * scale`.
    pub fn judge_with_exponent(
        id: impl Into<String>,
        lhs: Real,
        rhs: Real,
        prec: usize,
        tol_exp: i64,
    ) -> Self {
        let residual = (&lhs - &rhs).abs();
        let scale = Real::one(prec).max(&lhs.abs()).max(&rhs.abs());
        let tolerance = (&two_pow(-tol_exp, prec) * &scale).with_precision(prec);
        let pass = residual <= tolerance;
        IdentityReport {
            identity_id: id.into(),
            lhs: lhs.with_precision(prec),
            rhs: rhs.with_precision(prec),
            residual: residual.with_precision(prec),
            tolerance,
            pass,
            precision_bits: prec,
        }
    }

    /// Re-judges the stored sides with tolerance `2^(-tol_exp) * scale`.
    pub fn rejudge(&self, tol_exp: i64) -> Self {
        let mut out = Self::judge_with_exponent(
            self.identity_id.clone(),
            self.lhs.clone(),
            self.rhs.clone(),
            self.precision_bits,
            tol_exp,
        );
        out.residual = self.residual.clone();
        out.pass = out.residual <= out.tolerance;
        out
    }

    pub fn renamed(mut self, id: impl Into<String>) -> Self {
        self.identity_id = id.into();
        self
    }
}
