//! Binary floating-point reals with an explicit working precision.
//!
//! [`Real`] wraps an `astro_float::BigFloat` together with the precision (in
//! bits) that every operation on it is rounded to. Binary operations run at the
//! larger of the two operand precisions.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Smallest working precision accepted anywhere in the crate.
pub const MIN_PRECISION: usize = 64;

/// Extra bits carried internally on top of a requested precision.
pub const GUARD_BITS: usize = 32;

/// Default precision used by the CLI and the catalog.
pub const DEFAULT_PRECISION: usize = 256;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> =
        RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Internal precision used for a result requested at `prec` bits.
pub fn working_precision(prec: usize) -> usize {
    prec.max(MIN_PRECISION) + GUARD_BITS
}

/// `2^(-bits)`, the unit used for tolerances.
pub fn two_pow(exp: i64, prec: usize) -> Real {
    // exponent e means 0.1b * 2^e, so 2^k is 0.1b * 2^(k+1)
    let e = i32::try_from(exp + 1).expect("exponent within astro-float range");
    Real {
        value: BigFloat::from_words(&[1u64 << 63], Sign::Pos, e),
        prec,
    }
}

/// A finite high-precision real number.
#[derive(Clone)]
pub struct Real {
    value: BigFloat,
    prec: usize,
}

impl Real {
    fn wrap(value: BigFloat, prec: usize) -> Self {
        debug_assert!(!value.is_nan(), "NaN produced at {prec} bits");
        Real { value, prec }
    }

    pub fn zero(prec: usize) -> Self {
        Self::from_i64(0, prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: usize) -> Self {
        Self::wrap(BigFloat::from_i64(v, prec.max(MIN_PRECISION)), prec)
    }

    /// Exact conversion of an `f64`.
    pub fn from_f64(v: f64, prec: usize) -> Self {
        assert!(v.is_finite(), "Real::from_f64 needs a finite value");
        Self::wrap(BigFloat::from_f64(v, prec.max(MIN_PRECISION)), prec)
    }

    /// Exact conversion of an integer (the mantissa grows as needed).
    pub fn from_bigint(n: &BigInt, prec: usize) -> Self {
        if n.is_zero() {
            return Self::zero(prec);
        }
        let (sign, words) = n.to_u64_digits();
        let sign = if sign == num_bigint::Sign::Minus {
            Sign::Neg
        } else {
            Sign::Pos
        };
        let e = i32::try_from(64 * words.len()).expect("integer too large");
        Self::wrap(BigFloat::from_words(&words, sign, e), prec)
    }

    /// Rounded conversion of a rational.
    pub fn from_rational(x: &BigRational, prec: usize) -> Self {
        let num = Self::from_bigint(x.numer(), prec);
        if x.denom().is_one() {
            return num;
        }
        let den = Self::from_bigint(x.denom(), prec);
        num / den
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    /// Rounds the stored value to `prec` bits and records the new precision.
    pub fn with_precision(&self, prec: usize) -> Self {
        let mut value = self.value.clone();
        // only fails for invalid precision, which MIN_PRECISION rules out
        let _ = value.set_precision(prec.max(MIN_PRECISION), RM);
        Self::wrap(value, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.value.is_nan() && !self.value.is_inf()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.value.is_negative()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.value.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.prec)
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.value.reciprocal(self.p(), RM), self.prec)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn cube(&self) -> Self {
        &self.square() * self
    }

    pub fn powi(&self, n: usize) -> Self {
        Self::wrap(self.value.powi(n, self.p(), RM), self.prec)
    }

    pub fn sqrt(&self) -> Self {
        debug_assert!(!self.is_negative(), "sqrt of a negative value");
        Self::wrap(self.value.sqrt(self.p(), RM), self.prec)
    }

    /// The real cube root, sign preserving.
    pub fn cbrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self::wrap(self.value.cbrt(self.p(), RM), self.prec)
    }

    pub fn cos(&self) -> Self {
        let v = with_consts(|cc| self.value.cos(self.p(), RM, cc));
        Self::wrap(v, self.prec)
    }

    pub fn sin(&self) -> Self {
        let v = with_consts(|cc| self.value.sin(self.p(), RM, cc));
        Self::wrap(v, self.prec)
    }

    /// Arc cosine; the argument must lie in [-1, 1].
    pub fn acos(&self) -> Self {
        let v = with_consts(|cc| self.value.acos(self.p(), RM, cc));
        Self::wrap(v, self.prec)
    }

    pub fn pi(prec: usize) -> Self {
        let v = with_consts(|cc| cc.pi(prec.max(MIN_PRECISION), RM));
        Self::wrap(v, prec)
    }

    pub fn max(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Clamps into `[lo, hi]`.
    pub fn clamp(&self, lo: &Self, hi: &Self) -> Self {
        if self < lo {
            lo.clone()
        } else if self > hi {
            hi.clone()
        } else {
            self.clone()
        }
    }

    /// Exact value of the stored binary fraction.
    pub fn to_rational(&self) -> BigRational {
        let Some((words, _, sign, exp, _)) = self.value.as_raw_parts() else {
            panic!("non-finite Real has no rational value");
        };
        if self.value.is_zero() {
            return BigRational::zero();
        }
        let mut digits = Vec::with_capacity(words.len() * 2);
        for w in words {
            digits.push(*w as u32);
            digits.push((*w >> 32) as u32);
        }
        let mantissa = BigInt::from(BigUint::new(digits));
        let shift = exp as i64 - 64 * words.len() as i64;
        let mut r = if shift >= 0 {
            BigRational::from_integer(mantissa << shift as usize)
        } else {
            BigRational::new(mantissa, BigInt::one() << (-shift) as usize)
        };
        if sign == Sign::Neg {
            r = -r;
        }
        r
    }

    /// Nearest integer (ties away from zero).
    pub fn round_to_integer(&self) -> BigInt {
        self.to_rational().round().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let (words, _, sign, exp, _) = self.value.as_raw_parts().expect("finite value");
        let top = *words.last().unwrap_or(&0) as f64 / 2f64.powi(64);
        let mag = top * 2f64.powi(exp);
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        format_decimal(&self.to_rational(), digits.max(1))
    }

    /// Number of decimal digits that `prec` bits carry.
    pub fn decimal_digits(prec: usize) -> usize {
        (prec as f64 * std::f64::consts::LOG10_2).floor() as usize
    }

    fn p(&self) -> usize {
        self.prec.max(MIN_PRECISION)
    }
}

fn format_decimal(x: &BigRational, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let ax = x.abs();
    let ten = BigInt::from(10);
    let pow10 = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            BigRational::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    // decimal exponent k with 10^k <= |x| < 10^(k+1)
    let mut k = ax.numer().to_string().len() as i64 - ax.denom().to_string().len() as i64;
    while pow10(k) > ax {
        k -= 1;
    }
    while pow10(k + 1) <= ax {
        k += 1;
    }
    let scaled = &ax * pow10(digits as i64 - 1 - k);
    let mut n = scaled.round().to_integer();
    if n >= num_traits::pow(ten.clone(), digits) {
        n = n.div_floor(&ten);
        k += 1;
    }
    let s = n.to_string();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if (-6..=20).contains(&k) {
        if k >= 0 {
            let int_len = (k + 1) as usize;
            if s.len() <= int_len {
                out.push_str(&s);
                out.push_str(&"0".repeat(int_len - s.len()));
            } else {
                let frac = s[int_len..].trim_end_matches('0');
                out.push_str(&s[..int_len]);
                if !frac.is_empty() {
                    out.push('.');
                    out.push_str(frac);
                }
            }
        } else {
            out.push_str("0.");
            out.push_str(&"0".repeat((-k - 1) as usize));
            out.push_str(s.trim_end_matches('0'));
        }
    } else {
        let frac = s[1..].trim_end_matches('0');
        out.push_str(&s[..1]);
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
        out.push_str(&format!("e{k}"));
    }
    out
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or_else(|| Real::decimal_digits(self.prec));
        f.write_str(&self.to_decimal(digits))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({:.30}, {} bits)", self, self.prec)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(BigFloat::neg(&self.value), self.prec)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(BigFloat::neg(&self.value), self.prec)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let prec = self.prec.max(rhs.prec);
                Real::wrap(
                    self.value.$method(&rhs.value, prec.max(MIN_PRECISION), RM),
                    prec,
                )
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl serde::Serialize for Real {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl ToPrimitive for Real {
    fn to_i64(&self) -> Option<i64> {
        self.round_to_integer().to_i64()
    }
    fn to_u64(&self) -> Option<u64> {
        self.round_to_integer().to_u64()
    }
    fn to_f64(&self) -> Option<f64> {
        Some(Real::to_f64(self))
    }
}
