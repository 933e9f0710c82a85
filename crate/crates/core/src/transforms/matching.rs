use std::cmp::Ordering;

use serde::Serialize;

use crate::cubic::Cubic;
use crate::error::{Error, Result};
use crate::numerics::{solve_cubic_real, two_pow, working_precision, Real, Scalar};
use crate::rcp::{mu, require_rcp, round_scalar as round};

/// A bijection `sigma` on root indices (1-based) with `c^2 / x_i` matching
/// `c - x_sigma(i)`.
#[derive(Clone, Debug, Serialize)]
pub struct PermutationWitness {
    /// `sigma[i - 1] = sigma(i)`.
    pub sigma: [usize; 3],
    pub max_residual: Scalar,
    pub tolerance: Real,
    /// `c^2 / x_i` in root order.
    pub lhs: [Scalar; 3],
    /// `c - x_j` in root order.
    pub rhs: [Scalar; 3],
}

/// One edge of a ratio matching: `x_i / x_j` of the first cubic paired with
/// `y_k / y_l` of the second (indices 1-based, roots in descending order).
#[derive(Clone, Debug, Serialize)]
pub struct RatioPair {
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub value_from: Scalar,
    pub value_to: Scalar,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatchWitness {
    pub matched: bool,
    /// Sorted-order alignment of the two ratio lists; empty when not matched.
    pub bijection: Vec<RatioPair>,
    pub max_residual: Scalar,
    pub tolerance: Real,
    pub mu1: Scalar,
    pub mu2: Scalar,
}

fn tolerance_for<'a>(values: impl IntoIterator<Item = &'a Scalar>, prec: usize) -> Real {
    let w = working_precision(prec);
    let scale = values
        .into_iter()
        .fold(Real::one(w), |m, v| m.max(&v.to_real(w).abs()));
    (&two_pow(-((prec / 2) as i64), w) * &scale).with_precision(prec)
}

fn within(x: &Scalar, tol: &Real) -> bool {
    match x {
        Scalar::Exact(_) => x.is_zero() || x.abs().to_real(tol.precision()) <= *tol,
        Scalar::Approx(v) => v.abs() <= *tol,
    }
}

/// Finds `sigma` with `c^2 / x_i = c - x_sigma(i)` for an RCP.
pub fn thm33_permutation(c: &Cubic, prec: usize) -> Result<PermutationWitness> {
    require_rcp(c, prec)?;
    let w = working_precision(prec);
    let roots = solve_cubic_real(c, w)?;
    let x = roots.values();
    let cr = c.r().cbrt(w);
    let c2 = cr.square();
    let lhs: [Scalar; 3] = std::array::from_fn(|i| &c2 / &x[i]);
    let rhs: [Scalar; 3] = std::array::from_fn(|j| &cr - &x[j]);
    let tol = tolerance_for(lhs.iter().chain(rhs.iter()), prec);
    let loose = &tol * &Real::from_i64(2, prec);

    let mut sigma = [0usize; 3];
    let mut max_residual = Scalar::zero();
    for i in 0..3 {
        let near: Vec<(usize, Scalar)> = (0..3)
            .map(|j| (j, (&lhs[i] - &rhs[j]).abs()))
            .filter(|(_, d)| within(d, &loose))
            .collect();
        if near.len() > 1 {
            return Err(Error::AmbiguousMatch);
        }
        let Some((j, d)) = near.into_iter().next() else {
            return Err(Error::NoBijection(format!("no partner for root {}", i + 1)));
        };
        if !within(&d, &tol) {
            return Err(Error::NoBijection(format!("root {} misses by {d}", i + 1)));
        }
        if d.compare(&max_residual) == Ordering::Greater {
            max_residual = d;
        }
        sigma[i] = j + 1;
    }
    let mut seen = sigma;
    seen.sort_unstable();
    if seen != [1, 2, 3] {
        return Err(Error::NoBijection("matching is not injective".into()));
    }
    Ok(PermutationWitness {
        sigma,
        max_residual: round(max_residual, prec),
        tolerance: tol,
        lhs: lhs.map(|v| round(v, prec)),
        rhs: rhs.map(|v| round(v, prec)),
    })
}

type IndexedRatio = ((usize, usize), Scalar);

fn indexed_ratios(c: &Cubic, prec: usize) -> Result<Vec<IndexedRatio>> {
    let w = working_precision(prec);
    let roots = solve_cubic_real(c, w)?;
    if roots.has_zero_root() {
        return Err(Error::ZeroConstantTerm);
    }
    let x = roots.values();
    let tol = tolerance_for(x.iter(), prec);
    for i in 0..3 {
        for j in i + 1..3 {
            if within(&(&x[i] - &x[j]), &tol) {
                return Err(Error::RepeatedRoot);
            }
        }
    }
    let mut out = Vec::with_capacity(6);
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                out.push(((i + 1, j + 1), &x[i] / &x[j]));
            }
        }
    }
    out.sort_by(|a, b| a.1.compare(&b.1).then(a.0.cmp(&b.0)));
    Ok(out)
}

/// The six ordered root ratios `x_i / x_j`, `i != j`, sorted ascending.
pub fn ratio_multiset(c: &Cubic, prec: usize) -> Result<Vec<Scalar>> {
    Ok(indexed_ratios(c, prec)?
        .into_iter()
        .map(|(_, v)| round(v, prec))
        .collect())
}

/// Pairs the ratio multisets of two RCPs; they coincide exactly when the two
/// cubics share `pq/r`.
///
/// On the real line, aligning both lists in sorted order minimises the largest
/// pairwise gap, so a failed sorted alignment means no bijection exists.
pub fn match_same_mu(c1: &Cubic, c2: &Cubic, prec: usize) -> Result<MatchWitness> {
    require_rcp(c1, prec)?;
    require_rcp(c2, prec)?;
    let a = indexed_ratios(c1, prec)?;
    let b = indexed_ratios(c2, prec)?;
    let tol = tolerance_for(a.iter().chain(b.iter()).map(|(_, v)| v), prec);

    let mut max_residual = Scalar::zero();
    for ((_, u), (_, v)) in a.iter().zip(&b) {
        let d = (u - v).abs();
        if d.compare(&max_residual) == Ordering::Greater {
            max_residual = d;
        }
    }
    let matched = within(&max_residual, &tol);
    let bijection = if matched {
        a.into_iter()
            .zip(b)
            .map(|((from, u), (to, v))| RatioPair {
                from,
                to,
                value_from: round(u, prec),
                value_to: round(v, prec),
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(MatchWitness {
        matched,
        bijection,
        max_residual: round(max_residual, prec),
        tolerance: tol,
        mu1: mu(c1),
        mu2: mu(c2),
    })
}
