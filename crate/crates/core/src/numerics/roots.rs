//! Real roots of monic cubics.
//!
//! Three-real-root cubics are solved with the trigonometric form of the
//! depressed cubic and then polished with Newton steps at the working
//! precision. Cubics with a single real root (only needed for the auxiliary
//! t-cubic of the Ramanujan engine) go through Cardano's formula instead.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::real::{two_pow, working_precision, Real, MIN_PRECISION};
use super::scalar::Scalar;
use super::symmetric::SymTriple;
use crate::cubic::Cubic;
use crate::error::{Error, Result};

/// `18pqr - 4p^3 r + p^2 q^2 - 4q^3 - 27r^2`, exact for rational input.
pub fn discriminant(c: &Cubic) -> Scalar {
    discriminant_of(c.p(), c.q(), c.r())
}

pub(crate) fn discriminant_of(p: &Scalar, q: &Scalar, r: &Scalar) -> Scalar {
    let pq = p * q;
    let t1 = &(&pq * r) * &Scalar::int(18);
    let t2 = &(&p.cube() * r) * &Scalar::int(4);
    let t3 = pq.square();
    let t4 = &q.cube() * &Scalar::int(4);
    let t5 = &r.square() * &Scalar::int(27);
    &(&(&(&t1 - &t2) + &t3) - &t4) - &t5
}

/// Three real roots in descending order with a common absolute error bound.
#[derive(Clone, Debug)]
pub struct RootTriple {
    roots: [Real; 3],
    err: Real,
    exact: Option<[BigRational; 3]>,
}

impl RootTriple {
    pub fn x1(&self) -> &Real {
        &self.roots[0]
    }

    pub fn x2(&self) -> &Real {
        &self.roots[1]
    }

    pub fn x3(&self) -> &Real {
        &self.roots[2]
    }

    pub fn reals(&self) -> &[Real; 3] {
        &self.roots
    }

    /// Upper bound on the absolute error of each root.
    pub fn err(&self) -> &Real {
        &self.err
    }

    /// The roots as rationals, when all three are rational.
    pub fn exact(&self) -> Option<&[BigRational; 3]> {
        self.exact.as_ref()
    }

    /// Roots as scalars: exact when known, otherwise the approximations.
    pub fn values(&self) -> [Scalar; 3] {
        match &self.exact {
            Some(e) => e.clone().map(Scalar::Exact),
            None => self.roots.clone().map(Scalar::Approx),
        }
    }

    pub fn precision(&self) -> usize {
        self.roots[0].precision()
    }

    pub fn has_zero_root(&self) -> bool {
        self.roots.iter().any(Real::is_zero)
    }
}

pub(crate) fn check_precision(prec: usize) -> Result<()> {
    if prec < MIN_PRECISION {
        Err(Error::InvalidPrecision(prec))
    } else {
        Ok(())
    }
}

/// Tolerance applied to the sign test of a numeric discriminant.
fn discriminant_tolerance(c: &Cubic, prec: usize) -> Real {
    let scale = c.root_scale(prec).powi(6);
    &two_pow(-((prec / 2) as i64), prec) * &scale
}

/// Solves a cubic whose roots are all real.
pub fn solve_cubic_real(c: &Cubic, prec: usize) -> Result<RootTriple> {
    check_precision(prec)?;
    let w = working_precision(prec);
    let disc = discriminant(c);
    let negative = match &disc {
        Scalar::Exact(_) => disc.signum() < 0,
        Scalar::Approx(d) => d < &-discriminant_tolerance(c, prec),
    };
    if negative {
        return Err(Error::NegativeDiscriminant);
    }
    let coeffs = c.real_coefficients(w);
    let mut xs = trig_roots(&coeffs, w).map(|x| newton_polish(&coeffs, x));
    sort_descending(&mut xs);

    let exact = rational_roots(c, &xs);
    if let Some(e) = &exact {
        xs = e.clone().map(|x| Real::from_rational(&x, w));
    }

    let rounding = two_pow(-(prec as i64), w);
    let mut err = Real::zero(w);
    for x in &xs {
        let unit = &rounding * &Real::one(w).max(&x.abs());
        let bound = if exact.is_some() {
            unit
        } else {
            let (fx, dfx) = c.eval_real(x, w);
            let cube_bound = fx.abs().cbrt();
            let newton_bound = if dfx.is_zero() {
                cube_bound.clone()
            } else {
                (&fx / &dfx).abs()
            };
            &cube_bound.min(&newton_bound) + &unit
        };
        err = err.max(&bound);
    }

    Ok(RootTriple {
        roots: xs.map(|x| x.with_precision(prec)),
        err: err.with_precision(prec),
        exact,
    })
}

/// All real roots (with multiplicity when three are real) of
/// `x^3 + p x^2 + q x + r`, descending. `r` may be zero here.
pub fn real_roots(p: &Scalar, q: &Scalar, r: &Scalar, prec: usize) -> Result<Vec<Real>> {
    check_precision(prec)?;
    let w = working_precision(prec);
    let coeffs = [p.to_real(w), q.to_real(w), r.to_real(w)];
    let disc = discriminant_of(p, q, r);
    let one_root = match &disc {
        Scalar::Exact(_) => disc.signum() < 0,
        Scalar::Approx(d) => {
            let scale = coeffs
                .iter()
                .fold(Real::one(w), |m, c| m.max(&c.abs()))
                .powi(6);
            d < &-(&two_pow(-((prec / 2) as i64), w) * &scale)
        }
    };
    let mut xs: Vec<Real> = if one_root {
        vec![newton_polish(&coeffs, cardano_root(&coeffs, w))]
    } else {
        trig_roots(&coeffs, w)
            .map(|x| newton_polish(&coeffs, x))
            .to_vec()
    };
    xs.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
    Ok(xs.into_iter().map(|x| x.with_precision(prec)).collect())
}

fn sort_descending(xs: &mut [Real; 3]) {
    xs.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
}

/// Depressed-cubic coefficients `(P, Q)` for `x = y - p/3`.
fn depress(coeffs: &[Real; 3], w: usize) -> (Real, Real, Real) {
    let [p, q, r] = coeffs;
    let three = Real::from_i64(3, w);
    let shift = p / &three;
    let big_p = q - &(&p.square() / &three);
    let big_q =
        &(&(&Real::from_i64(2, w) * &p.cube()) / &Real::from_i64(27, w)) - &(&(p * q) / &three) + r;
    (shift, big_p, big_q)
}

fn trig_roots(coeffs: &[Real; 3], w: usize) -> [Real; 3] {
    let (shift, big_p, big_q) = depress(coeffs, w);
    if !big_p.is_negative() {
        // three real roots with P >= 0 forces a triple root
        let x = -&shift;
        return [x.clone(), x.clone(), x];
    }
    let three = Real::from_i64(3, w);
    let one = Real::one(w);
    let neg_p_third = &(-&big_p) / &three;
    let m = &Real::from_i64(2, w) * &neg_p_third.sqrt();
    let arg =
        &(&(&three * &big_q) / &(&Real::from_i64(2, w) * &big_p)) * &(&three / &(-&big_p)).sqrt();
    let arg = arg.clamp(&-&one, &one);
    let phi = &arg.acos() / &three;
    let two_pi_third = &(&Real::from_i64(2, w) * &Real::pi(w)) / &three;
    [0i64, 1, 2].map(|k| {
        let angle = &phi - &(&Real::from_i64(k, w) * &two_pi_third);
        &(&m * &angle.cos()) - &shift
    })
}

fn cardano_root(coeffs: &[Real; 3], w: usize) -> Real {
    let (shift, big_p, big_q) = depress(coeffs, w);
    let half_q = &big_q / &Real::from_i64(2, w);
    let d = &half_q.square() + &(&big_p.cube() / &Real::from_i64(27, w));
    let sd = d.max(&Real::zero(w)).sqrt();
    // pick the branch without cancellation
    let big = if half_q.is_negative() {
        &sd - &half_q
    } else {
        -&(&half_q + &sd)
    };
    let u = big.cbrt();
    let y = if u.is_zero() {
        u
    } else {
        &u - &(&big_p / &(&Real::from_i64(3, w) * &u))
    };
    &y - &shift
}

fn newton_polish(coeffs: &[Real; 3], mut x: Real) -> Real {
    let w = x.precision();
    let [p, q, r] = coeffs;
    let three = Real::from_i64(3, w);
    let eval = |x: &Real| {
        let fx = &(&(&(x + p) * x) + q) * x + r;
        let dfx = &(&(&three * x) + &(p + p)) * x + q;
        (fx, dfx)
    };
    let (mut fx, mut dfx) = eval(&x);
    let stop = two_pow(-(w as i64) + 2, w);
    for _ in 0..2 * (usize::BITS - w.leading_zeros()) as usize + 8 {
        if fx.is_zero() || dfx.is_zero() {
            break;
        }
        let step = &fx / &dfx;
        let next = &x - &step;
        let (fn_, dfn) = eval(&next);
        if fn_.abs() > fx.abs() {
            break;
        }
        x = next;
        fx = fn_;
        dfx = dfn;
        if step.abs() <= &stop * &Real::one(w).max(&x.abs()) {
            break;
        }
    }
    x
}

/// Exact roots of a rational cubic whose roots are all rational.
///
/// Any rational root has a denominator dividing the lcm `D` of the
/// coefficient denominators, so each approximation is snapped to the nearest
/// multiple of `1/D` and confirmed by exact evaluation.
fn rational_roots(c: &Cubic, approx: &[Real; 3]) -> Option<[BigRational; 3]> {
    let [p, q, r] = c.exact_coefficients()?;
    let lcm = p.denom().lcm(q.denom()).lcm(r.denom());
    let d = Real::from_bigint(&lcm, approx[0].precision());
    let mut out = Vec::with_capacity(3);
    for x in approx {
        let n: BigInt = (x * &d).round_to_integer();
        let cand = BigRational::new(n, lcm.clone());
        if !c.eval(&Scalar::Exact(cand.clone())).is_zero() {
            return None;
        }
        out.push(cand);
    }
    let roots: [BigRational; 3] = out.try_into().ok()?;
    let sym = SymTriple::from_roots(&roots.clone().map(Scalar::Exact));
    let expected = SymTriple::from_cubic(c);
    (sym == expected).then_some(roots)
}
