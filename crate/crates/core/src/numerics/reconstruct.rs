//! Continued-fraction recovery of small rationals from approximations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::real::Real;

/// Convergents of the continued fraction of `x`, stopping once the
/// denominator exceeds `max_den`.
pub fn convergents(x: &BigRational, max_den: &BigInt) -> Vec<BigRational> {
    let mut out = Vec::new();
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let mut rest = x.clone();
    loop {
        let a = rest.floor().to_integer();
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        if &k_next > max_den {
            break;
        }
        out.push(BigRational::new(h_next.clone(), k_next.clone()));
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        let frac = &rest - BigRational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        rest = frac.recip();
    }
    out
}

/// The convergent of smallest denominator (at most `max_den`) lying within
/// `tol` of `x`.
pub fn reconstruct_rational(x: &Real, max_den: &BigInt, tol: &Real) -> Option<BigRational> {
    let exact = x.to_rational();
    let tol = tol.to_rational();
    convergents(&exact, max_den)
        .into_iter()
        .find(|c| (c - &exact).abs() <= tol)
}
