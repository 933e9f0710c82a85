//! Deterministic samplers used by property tests and the CLI `random` input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::is_rcp;
use crate::cubic::Cubic;
use crate::error::{Error, Result};
use crate::numerics::{discriminant, Scalar};

const RETRY_BUDGET: usize = 256;
const MAX_DEN: i64 = 6;
const NON_RCP_MAX_DEN: i64 = 60;

/// The RCP with `r = c^3` and `q = -pc - 3c^2`; real-rootedness is not
/// checked.
pub fn rcp_from_params(c: &BigRational, p: &BigRational) -> Result<Cubic> {
    if c.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let r = c * c * c;
    let q = -(p * c) - BigRational::from_integer(3.into()) * c * c;
    Ok(Cubic::from_rationals(p.clone(), q, r))
}

/// The RCP with cube root `c` of `r` and `p = s c`.
pub fn rcp_from_shape(s: &BigRational, c: &BigRational) -> Result<Cubic> {
    rcp_from_params(c, &(s * c))
}

fn bound_numerator(bound: &BigRational, den: i64) -> i64 {
    (bound * BigRational::from_integer(den.into()))
        .floor()
        .to_integer()
        .to_i64()
        .unwrap_or(i64::MAX / 4)
        .clamp(0, i64::MAX / 4)
}

fn sample_rational(rng: &mut ChaCha8Rng, bound: &BigRational, nonzero: bool) -> BigRational {
    sample_rational_with(rng, bound, nonzero, MAX_DEN)
}

fn sample_rational_with(
    rng: &mut ChaCha8Rng,
    bound: &BigRational,
    nonzero: bool,
    max_den: i64,
) -> BigRational {
    loop {
        let den = rng.gen_range(1..=max_den);
        let lim = bound_numerator(bound, den);
        let num = rng.gen_range(-lim..=lim);
        if nonzero && num == 0 {
            continue;
        }
        return BigRational::new(num.into(), den.into());
    }
}

fn check_bound(bound: &BigRational) -> Result<()> {
    if bound < &BigRational::one() {
        return Err(Error::GeneratorExhausted(0));
    }
    Ok(())
}

/// A real-rooted RCP with `|p|, |c| <= bound`, determined by `seed`.
pub fn random_rcp(seed: u64, bound: &BigRational) -> Result<Cubic> {
    check_bound(bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let c = sample_rational(&mut rng, bound, true);
        let p = sample_rational(&mut rng, bound, false);
        let cubic = rcp_from_params(&c, &p)?;
        if discriminant(&cubic).signum() >= 0 {
            return Ok(cubic);
        }
    }
    Err(Error::GeneratorExhausted(RETRY_BUDGET))
}

/// A cubic with three nonzero rational roots of size at most `bound` that is
/// not an RCP.
///
/// Roots come from a finer grid than [`random_rcp`] uses: on a coarse grid,
/// root sets `{a, -a, b}` turn up often, and for those the ratio-sum identity
/// holds even though the cubic is not an RCP.
pub fn random_real_rooted_non_rcp(seed: u64, bound: &BigRational) -> Result<Cubic> {
    check_bound(bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let xs: Vec<BigRational> = (0..3)
            .map(|_| sample_rational_with(&mut rng, bound, true, NON_RCP_MAX_DEN))
            .collect();
        let (s1, s2, s3) = elementary(&xs[0], &xs[1], &xs[2]);
        let cubic = Cubic::from_rationals(-s1, s2, -s3);
        if !is_rcp(&cubic, 64).is_rcp {
            return Ok(cubic);
        }
    }
    Err(Error::GeneratorExhausted(RETRY_BUDGET))
}

fn elementary(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
) -> (BigRational, BigRational, BigRational) {
    (a + b + c, a * b + b * c + c * a, a * b * c)
}

/// Coefficients `(a, b)` of `x^3 - a x^2 + b x - 1` with three real roots:
/// two roots are sampled and the third is fixed by the unit product.
pub fn random_ab(seed: u64) -> (Scalar, Scalar) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = BigRational::from_integer(BigInt::from(4));
    let alpha = sample_rational(&mut rng, &bound, true);
    let beta = sample_rational(&mut rng, &bound, true);
    let gamma = (&alpha * &beta).recip();
    let (a, b, prod) = elementary(&alpha, &beta, &gamma);
    debug_assert!(prod.is_one());
    (Scalar::Exact(a), Scalar::Exact(b))
}
