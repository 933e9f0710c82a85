//! Closed-form root descriptions and the identities evaluated on them.
//!
//! Every evaluator computes both sides from trigonometric values at working
//! precision, independently of the cubic solver.

use crate::numerics::{working_precision, Real};
use crate::rcp::IdentityReport;
use crate::transforms::match_same_mu;

use super::cubics;

/// `2 pi k / n`.
fn angle(k: i64, n: i64, w: usize) -> Real {
    &(&Real::pi(w) * &Real::from_i64(2 * k, w)) / &Real::from_i64(n, w)
}

pub(crate) fn cos_frac(k: i64, n: i64, w: usize) -> Real {
    angle(k, n, w).cos()
}

fn sin_frac(k: i64, n: i64, w: usize) -> Real {
    angle(k, n, w).sin()
}

fn int(v: i64, w: usize) -> Real {
    Real::from_i64(v, w)
}

fn ratio(n: i64, d: i64, w: usize) -> Real {
    &int(n, w) / &int(d, w)
}

fn sum(xs: impl IntoIterator<Item = Real>, w: usize) -> Real {
    xs.into_iter().fold(Real::zero(w), |acc, x| &acc + &x)
}

fn sum_cbrt(xs: &[Real], w: usize) -> Real {
    sum(xs.iter().map(Real::cbrt), w)
}

/// Numerators `1, 2, 4` of the angles `2 pi k / n` in a doubling orbit.
const DOUBLING: [i64; 3] = [1, 2, 4];

pub(crate) fn ex1_roots(w: usize) -> [Real; 3] {
    [int(4, w), int(1, w), int(-2, w)]
}

pub(crate) fn cos_roots(n: i64, w: usize) -> [Real; 3] {
    DOUBLING.map(|k| cos_frac(k, n, w))
}

pub(crate) fn two_cos_roots(n: i64, w: usize) -> [Real; 3] {
    cos_roots(n, w).map(|c| &c * &int(2, w))
}

/// `factor * sin^6(theta_k) cos(2 theta_k)` for `theta_k = 2^k * 2pi/7`.
fn ws7a_roots_with(factor: i64, w: usize) -> [Real; 3] {
    DOUBLING.map(|k| {
        let s = sin_frac(k, 7, w);
        &(&int(factor, w) * &s.powi(6)) * &cos_frac(2 * k, 7, w)
    })
}

pub(crate) fn ws7a_roots(w: usize) -> [Real; 3] {
    ws7a_roots_with(128, w)
}

/// `128 cos(theta) (sin a sin b)^3` in the order printed for the second
/// heptagon decomposition.
pub(crate) fn ws7b_roots(w: usize) -> [Real; 3] {
    let s = DOUBLING.map(|k| sin_frac(k, 7, w));
    let c = DOUBLING.map(|k| cos_frac(k, 7, w));
    let term = |ci: &Real, a: &Real, b: &Real| &(&int(128, w) * ci) * &(a * b).cube();
    [
        term(&c[0], &s[0], &s[2]),
        term(&c[1], &s[0], &s[1]),
        term(&c[2], &s[1], &s[2]),
    ]
}

fn judge(id: &str, lhs: Real, rhs: Real, prec: usize) -> IdentityReport {
    IdentityReport::judge(id, lhs, rhs, prec)
}

pub(crate) fn eq14(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let lhs = &(&ratio(1, 9, w).cbrt() - &ratio(2, 9, w).cbrt()) + &ratio(4, 9, w).cbrt();
    let rhs = (&int(2, w).cbrt() - &int(1, w)).cbrt();
    judge("eq14", lhs, rhs, prec)
}

pub(crate) fn ex1_sum(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let lhs = &(&int(1, w) - &int(2, w).cbrt()) + &int(4, w).cbrt();
    let rhs = (&int(-9, w) + &(&int(9, w) * &int(2, w).cbrt())).cbrt();
    judge("ex1_sum", lhs, rhs, prec)
}

pub(crate) fn eq15(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let lhs = sum_cbrt(&cos_roots(7, w), w);
    let rhs = (&(&int(5, w) - &(&int(3, w) * &int(7, w).cbrt())) / &int(2, w)).cbrt();
    judge("eq15", lhs, rhs, prec)
}

pub(crate) fn eq16(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let lhs = sum_cbrt(&cos_roots(9, w), w);
    let rhs = (&(&(&int(3, w) * &int(9, w).cbrt()) - &int(6, w)) / &int(2, w)).cbrt();
    judge("eq16", lhs, rhs, prec)
}

pub(crate) fn eq19(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let secs = cos_roots(7, w).map(|c| c.recip());
    let lhs = sum_cbrt(&secs, w);
    let rhs = (&int(8, w) - &(&int(6, w) * &int(7, w).cbrt())).cbrt();
    judge("eq19", lhs, rhs, prec)
}

pub(crate) fn eq20(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let secs = cos_roots(9, w).map(|c| c.recip());
    let lhs = sum_cbrt(&secs, w);
    let rhs = (&int(6, w) * &(&int(9, w).cbrt() - &int(1, w))).cbrt();
    judge("eq20", lhs, rhs, prec)
}

/// Sum of the cube roots of the six ordered ratios of `xs`.
fn six_ratio_cbrt(xs: &[Real; 3], w: usize) -> Real {
    let mut terms = Vec::with_capacity(6);
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                terms.push((&xs[i] / &xs[j]).cbrt());
            }
        }
    }
    sum(terms, w)
}

pub(crate) fn eq31(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let lhs = six_ratio_cbrt(&cos_roots(7, w), w);
    judge("eq31", lhs, -int(7, w).cbrt(), prec)
}

pub(crate) fn eq32(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let lhs = six_ratio_cbrt(&cos_roots(9, w), w);
    judge("eq32", lhs, -int(9, w).cbrt(), prec)
}

pub(crate) fn eq22(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let lhs = sum(
        DOUBLING.map(|k| {
            let s2 = sin_frac(k, 7, w).square();
            &s2 * &(&int(2, w) * &cos_frac(2 * k, 7, w)).cbrt()
        }),
        w,
    );
    let inner = &int(63, w) * &(&int(1, w) + &int(7, w).cbrt());
    let rhs = -(&inner.cbrt() / &int(4, w));
    judge("eq22", lhs, rhs, prec)
}

fn eq23_lhs(w: usize) -> Real {
    sum(
        DOUBLING.map(|k| {
            let csc2 = sin_frac(k, 7, w).square().recip();
            let sec = cos_frac(2 * k, 7, w).recip();
            &csc2 * &(&int(2, w) * &sec).cbrt()
        }),
        w,
    )
}

fn eq23_base(w: usize) -> Real {
    &int(441, w) * &(&int(2, w) - &int(7, w).cbrt())
}

pub(crate) fn eq23_literal(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let rhs = &int(7, w) * &eq23_base(w).cbrt();
    judge("eq23_literal", eq23_lhs(w), rhs, prec)
}

pub(crate) fn eq23_corrected(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let rhs = &(&int(256, w) * &eq23_base(w)).cbrt() / &int(7, w);
    judge("eq23_corrected", eq23_lhs(w), rhs, prec)
}

/// `(sin a / sin b)^2 (cos 2a / cos 2b)^(1/3)` for heptagon indices.
fn eq33_term(i: usize, j: usize, w: usize) -> Real {
    let s = (&sin_frac(DOUBLING[i], 7, w) / &sin_frac(DOUBLING[j], 7, w)).square();
    let c = &cos_frac(2 * DOUBLING[i], 7, w) / &cos_frac(2 * DOUBLING[j], 7, w);
    &s * &c.cbrt()
}

pub(crate) fn eq33_corrected(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let mut terms = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                terms.push(eq33_term(i, j, w));
            }
        }
    }
    judge(
        "eq33_corrected",
        sum(terms, w),
        -(&int(3, w) * &int(7, w).cbrt()),
        prec,
    )
}

/// The printed sum, whose fifth term has `cos(8pi/7)` in place of
/// `sin(8pi/7)` inside the square.
pub(crate) fn eq33_literal(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let fifth = {
        let s = (&sin_frac(2, 7, w) / &cos_frac(4, 7, w)).square();
        &s * &(&cos_frac(4, 7, w) / &cos_frac(1, 7, w)).cbrt()
    };
    let terms = vec![
        eq33_term(0, 1, w),
        eq33_term(1, 0, w),
        eq33_term(0, 2, w),
        eq33_term(2, 0, w),
        fifth,
        eq33_term(2, 1, w),
    ];
    judge(
        "eq33_literal",
        sum(terms, w),
        -(&int(3, w) * &int(7, w).cbrt()),
        prec,
    )
}

fn product(xs: &[Real; 3]) -> Real {
    &(&xs[0] * &xs[1]) * &xs[2]
}

/// Root product of the printed factorisation (factor 2) against `-r = 343`.
pub(crate) fn eq21_roots_literal(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    judge(
        "eq21_roots_literal",
        product(&ws7a_roots_with(2, w)),
        int(343, w),
        prec,
    )
}

pub(crate) fn eq21_roots_corrected(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    judge(
        "eq21_roots_corrected",
        product(&ws7a_roots(w)),
        int(343, w),
        prec,
    )
}

/// Relations between reciprocals and shifted roots of the heptagon and
/// nonagon cubics, `1/x_i = sign (1 + sign' x_j)`.
fn reciprocal_relation(
    id: &str,
    n: i64,
    i: usize,
    j: usize,
    outer: i64,
    inner: i64,
    prec: usize,
) -> IdentityReport {
    let w = working_precision(prec);
    let x = two_cos_roots(n, w);
    let rhs = &int(outer, w) * &(&int(1, w) + &(&int(inner, w) * &x[j]));
    judge(id, x[i].recip(), rhs, prec)
}

pub(crate) fn ex5_literal(k: usize, prec: usize) -> IdentityReport {
    let partner = [2, 0, 1][k];
    let id = format!("ex5_{}_literal", k + 1);
    reciprocal_relation(&id, 7, k, partner, 1, 1, prec)
}

pub(crate) fn ex5_corrected(k: usize, prec: usize) -> IdentityReport {
    let partner = [2, 0, 1][k];
    let id = format!("ex5_{}_corrected", k + 1);
    reciprocal_relation(&id, 7, k, partner, -1, 1, prec)
}

pub(crate) fn ex6(k: usize, prec: usize) -> IdentityReport {
    let partner = [1, 2, 0][k];
    reciprocal_relation(&format!("ex6_{}", k + 1), 9, k, partner, 1, -1, prec)
}

/// `(cos a / cos b) (sin c / sin d)^3 = cos e / cos f`, arguments as
/// numerators over 7 of `2 pi`.
fn eq41_instance(
    id: &str,
    ab: (i64, i64),
    cd: (i64, i64),
    ef: (i64, i64),
    prec: usize,
) -> IdentityReport {
    let w = working_precision(prec);
    let cos_ratio = &cos_frac(ab.0, 7, w) / &cos_frac(ab.1, 7, w);
    let sin_ratio = &sin_frac(cd.0, 7, w) / &sin_frac(cd.1, 7, w);
    let lhs = &cos_ratio * &sin_ratio.cube();
    let rhs = &cos_frac(ef.0, 7, w) / &cos_frac(ef.1, 7, w);
    judge(id, lhs, rhs, prec)
}

pub(crate) fn eq41a(prec: usize) -> IdentityReport {
    eq41_instance("eq41a", (1, 2), (4, 2), (2, 4), prec)
}

pub(crate) fn eq41b(prec: usize) -> IdentityReport {
    eq41_instance("eq41b", (1, 4), (1, 2), (2, 1), prec)
}

pub(crate) fn eq41c(prec: usize) -> IdentityReport {
    eq41_instance("eq41c", (2, 4), (1, 4), (4, 1), prec)
}

/// Ratio multisets of the second heptagon cubic and the cosine cubic agree.
pub(crate) fn thm5_match_cos7(prec: usize) -> IdentityReport {
    let w = working_precision(prec);
    let gap = match match_same_mu(&cubics::ws7b(), &cubics::cos7(), prec) {
        Ok(m) if m.matched => m.max_residual.to_real(w),
        Ok(m) => m.max_residual.to_real(w).max(&int(1, w)),
        Err(_) => int(1, w),
    };
    judge("thm5_match_cos7", gap, Real::zero(w), prec)
}
