//! Ramanujan's theorem on `x^3 - a x^2 + b x - 1` and its bridge to monic
//! cubics through `x = -r^(1/3) alpha`.
//!
//! For the roots `alpha, beta, gamma` of `x^3 - a x^2 + b x - 1` and a real
//! `t` solving `t^3 - 3(a + b + 3) t - (ab + 6(a + b) + 9) = 0`,
//!
//! ```text
//! alpha^(1/3) + beta^(1/3) + gamma^(1/3)                = (a + 6 + 3t)^(1/3)
//! (alpha beta)^(1/3) + (beta gamma)^(1/3) + (gamma alpha)^(1/3) = (b + 6 + 3t)^(1/3)
//! ```
//!
//! With real cube roots the suitable `t` is the sum of the six mixed products
//! `u^2 v` of the cube roots, which is always real, so one of the real roots of
//! the t-cubic is selected by checking the first identity.

use serde::Serialize;

use super::report::IdentityReport;
use super::round_scalar;
use crate::cubic::Cubic;
use crate::error::{Error, Result};
use crate::numerics::{
    check_precision, real_roots, solve_cubic_real, two_pow, working_precision, Real, RootTriple,
    Scalar,
};

/// A monic cubic rewritten as `x^3 - a x^2 + b x - 1` in the variable
/// `alpha = -x / c`, `c = r^(1/3)`.
#[derive(Clone, Debug)]
pub struct RamanujanForm {
    /// `p / c`.
    pub a: Scalar,
    /// `q / c^2`.
    pub b: Scalar,
    pub c: Scalar,
    pub alpha_roots: RootTriple,
    /// `alpha beta gamma`, equal to 1 up to rounding.
    pub alpha_product: Real,
    /// `a + b + 3`, equal to the membership residual divided by `c^2`.
    pub condition_five: Scalar,
}

/// Outcome of the t selection.
#[derive(Clone, Debug, Serialize)]
pub struct TSelection {
    pub t: Real,
    pub all_real_t: Vec<Real>,
    /// `sum alpha^(1/3)` against `(a + 6 + 3t)^(1/3)`.
    pub eq2_report: IdentityReport,
    /// `sum (alpha beta)^(1/3)` against `(b + 6 + 3t)^(1/3)`.
    pub eq3_report: IdentityReport,
    /// `sum (alpha beta)^(1/3)` against `b + 6 + 3t` without the outer cube
    /// root; recorded for reference, generally fails.
    pub eq3_literal_report: IdentityReport,
    /// More than one distinct real `t` satisfied the first identity.
    pub ambiguous: bool,
}

/// Rewrites `c` in Ramanujan's normalisation.
pub fn to_ramanujan_form(c: &Cubic, prec: usize) -> Result<RamanujanForm> {
    check_precision(prec)?;
    let w = working_precision(prec);
    let cr = c.r().cbrt(w);
    let a = c.p() / &cr;
    let b = c.q() / &cr.square();
    let alpha_cubic = Cubic::new(-&a, b.clone(), -1)?;
    let alpha_roots = solve_cubic_real(&alpha_cubic, prec)?;
    let alpha_product = alpha_roots
        .reals()
        .iter()
        .fold(Real::one(prec), |acc, x| &acc * x);
    let tol = two_pow(-((prec / 2) as i64), prec);
    debug_assert!((&alpha_product - &Real::one(prec)).abs() <= tol);
    let condition_five = &(&a + &b) + &Scalar::int(3);
    Ok(RamanujanForm {
        a: round_scalar(a, prec),
        b: round_scalar(b, prec),
        c: round_scalar(cr, prec),
        alpha_roots,
        alpha_product,
        condition_five: round_scalar(condition_five, prec),
    })
}

/// Solves the t-cubic, picks the real root that makes the cube-root sum
/// identity hold, and certifies both identities for it.
pub fn ramanujan_t(a: &Scalar, b: &Scalar, prec: usize) -> Result<TSelection> {
    check_precision(prec)?;
    let w = working_precision(prec);
    let alpha = solve_cubic_real(&Cubic::new(-a, b.clone(), -1)?, w)?;
    let [x1, x2, x3] = alpha.reals();
    let sum_alpha = &(&x1.cbrt() + &x2.cbrt()) + &x3.cbrt();
    let sum_pairs = &(&(x1 * x2).cbrt() + &(x2 * x3).cbrt()) + &(x3 * x1).cbrt();

    let three = Scalar::int(3);
    let six = Scalar::int(6);
    let s = &(a + b) + &three;
    let t_q = -(&three * &s);
    let t_r = -(&(&(a * b) + &(&six * &(a + b))) + &Scalar::int(9));
    let all_real_t = real_roots(&Scalar::int(0), &t_q, &t_r, w)?;

    let a_w = a.to_real(w);
    let b_w = b.to_real(w);
    let six_w = Real::from_i64(6, w);
    let three_w = Real::from_i64(3, w);
    let eq2_for = |t: &Real| {
        let target = &(&a_w + &six_w) + &(&three_w * t);
        IdentityReport::judge("eq2", sum_alpha.clone(), target.cbrt(), prec)
    };

    let mut passing: Vec<(Real, IdentityReport)> = all_real_t
        .iter()
        .map(|t| (t.clone(), eq2_for(t)))
        .filter(|(_, rep)| rep.pass)
        .collect();
    if passing.is_empty() {
        return Err(Error::NoSuitableT);
    }
    passing.sort_by(|x, y| {
        x.1.residual
            .partial_cmp(&y.1.residual)
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let cluster_tol = two_pow(-((prec / 2) as i64), w);
    let ambiguous = passing
        .iter()
        .skip(1)
        .any(|(t, _)| (t - &passing[0].0).abs() > cluster_tol);
    let (t, eq2_report) = passing.swap_remove(0);

    let target3 = &(&b_w + &six_w) + &(&three_w * &t);
    let eq3_report = IdentityReport::judge("eq3", sum_pairs.clone(), target3.cbrt(), prec);
    let eq3_literal_report = IdentityReport::judge("eq3_literal", sum_pairs, target3, prec);

    Ok(TSelection {
        t: t.with_precision(prec),
        all_real_t: all_real_t
            .into_iter()
            .map(|x| x.with_precision(prec))
            .collect(),
        eq2_report,
        eq3_report,
        eq3_literal_report,
        ambiguous,
    })
}

/// `t = (ab - 9)^(1/3)`, valid when `a + b + 3 = 0`.
pub fn special_t(a: &Scalar, b: &Scalar, prec: usize) -> Result<Scalar> {
    check_precision(prec)?;
    let w = working_precision(prec);
    let s = &(a + b) + &Scalar::int(3);
    let holds = match &s {
        Scalar::Exact(_) => s.is_zero(),
        Scalar::Approx(v) => {
            let scale = Real::one(w)
                .max(&a.to_real(w).abs())
                .max(&b.to_real(w).abs());
            v.abs() <= &two_pow(-((prec / 2) as i64), w) * &scale
        }
    };
    if !holds {
        return Err(Error::ConditionFiveViolated);
    }
    Ok(round_scalar((&(a * b) - &Scalar::int(9)).cbrt(w), prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rcp::rcp_residual;

    #[test]
    fn bridge_examples() {
        let f = to_ramanujan_form(&Cubic::from_ints(-3, -6, 8), 256).unwrap();
        assert_eq!(f.a, Scalar::ratio(-3, 2));
        assert_eq!(f.b, Scalar::ratio(-3, 2));
        assert!(f.condition_five.is_zero());

        let f = to_ramanujan_form(&Cubic::from_ints(3, -6, 1), 256).unwrap();
        assert_eq!(
            (f.a.clone(), f.b.clone()),
            (Scalar::int(3), Scalar::int(-6))
        );
        assert!(f.condition_five.is_zero());

        let c = Cubic::from_ints(1, 1, 1);
        let f = to_ramanujan_form(&c, 256);
        // x^3 + x^2 + x + 1 has complex roots, so the alpha cubic does too
        assert_eq!(f.unwrap_err(), Error::NegativeDiscriminant);
        let cr = Scalar::int(1);
        let expected = &rcp_residual(&c, 256) / &cr.square();
        assert_eq!(expected, Scalar::int(5));
    }

    #[test]
    fn condition_five_tracks_the_residual() {
        // real-rooted non-RCP: roots 1, 2, -1; r = 2
        let c = Cubic::from_ints(-2, -1, 2);
        let f = to_ramanujan_form(&c, 256).unwrap();
        let cr = c.r().cbrt(300);
        let via_residual = &rcp_residual(&c, 256) / &cr.square();
        let diff = (&f.condition_five - &via_residual).abs().to_real(256);
        assert!(diff < two_pow(-200, 256));
        assert!((&f.alpha_product - &Real::one(256)).abs() < two_pow(-200, 256));
    }

    #[test]
    fn t_selection_examples() {
        let sel = ramanujan_t(&Scalar::ratio(-3, 2), &Scalar::ratio(-3, 2), 256).unwrap();
        let expected = special_t(&Scalar::ratio(-3, 2), &Scalar::ratio(-3, 2), 256).unwrap();
        assert!((&sel.t - &expected.to_real(256)).abs() < two_pow(-200, 256));
        assert!((sel.t.to_f64() + (27.0f64 / 4.0).cbrt()).abs() < 1e-13);
        assert!(sel.eq2_report.pass && sel.eq3_report.pass);
        let cubed = sel.eq2_report.lhs.cube().to_f64();
        assert!((cubed + 1.16967).abs() < 1e-4);

        let sel = ramanujan_t(&Scalar::int(3), &Scalar::int(-6), 256).unwrap();
        assert!((sel.t.to_f64() + 3.0).abs() < 1e-30);
        assert!(sel.eq2_report.lhs.abs() < two_pow(-100, 256));

        let sel = ramanujan_t(&Scalar::int(3), &Scalar::int(3), 256).unwrap();
        assert!((sel.t.to_f64() - 6.0).abs() < 1e-30);
        assert!(!sel.ambiguous);
        assert!(sel.eq3_report.pass);
        assert!(!sel.eq3_literal_report.pass);
    }

    #[test]
    fn special_t_examples() {
        let t = special_t(&Scalar::int(3), &Scalar::int(-6), 256).unwrap();
        assert_eq!(t, Scalar::int(-3));
        let t = special_t(&Scalar::int(0), &Scalar::int(-3), 256).unwrap();
        assert!((t.to_f64() + 9f64.cbrt()).abs() < 1e-14);
        assert_eq!(
            special_t(&Scalar::int(1), &Scalar::int(1), 256).unwrap_err(),
            Error::ConditionFiveViolated
        );
    }
}
