//! Coefficient values that stay exact while they can.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::real::Real;

/// Shorthand for building a rational `n/d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The rational `y` with `y^3 = x`, if there is one.
pub fn rational_cube_root(x: &BigRational) -> Option<BigRational> {
    let n = x.numer().cbrt();
    let d = x.denom().cbrt();
    if &(&n * &n * &n) == x.numer() && &(&d * &d * &d) == x.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// An exact rational or a high-precision approximation.
#[derive(Clone)]
pub enum Scalar {
    Exact(BigRational),
    Approx(Real),
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Exact(rat(n, d))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(x) => Some(x),
            Scalar::Approx(_) => None,
        }
    }

    /// Precision of the approximation, `None` when exact.
    pub fn precision(&self) -> Option<usize> {
        match self {
            Scalar::Exact(_) => None,
            Scalar::Approx(x) => Some(x.precision()),
        }
    }

    pub fn to_real(&self, prec: usize) -> Real {
        match self {
            Scalar::Exact(x) => Real::from_rational(x, prec),
            Scalar::Approx(x) if x.precision() == prec => x.clone(),
            Scalar::Approx(x) => x.with_precision(prec),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(x) => Real::from_rational(x, 64).to_f64(),
            Scalar::Approx(x) => x.to_f64(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(x) => x.is_zero(),
            Scalar::Approx(x) => x.is_zero(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Exact(x) => {
                if x.is_zero() {
                    0
                } else if x.is_negative() {
                    -1
                } else {
                    1
                }
            }
            Scalar::Approx(x) => x.signum(),
        }
    }

    pub fn abs(&self) -> Self {
        match self {
            Scalar::Exact(x) => Scalar::Exact(x.abs()),
            Scalar::Approx(x) => Scalar::Approx(x.abs()),
        }
    }

    pub fn recip(&self) -> Self {
        match self {
            Scalar::Exact(x) => Scalar::Exact(x.recip()),
            Scalar::Approx(x) => Scalar::Approx(x.recip()),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn cube(&self) -> Self {
        &self.square() * self
    }

    /// Real cube root: exact when the value is a rational cube, otherwise a
    /// `prec`-bit approximation.
    pub fn cbrt(&self, prec: usize) -> Self {
        match self {
            Scalar::Exact(x) => match rational_cube_root(x) {
                Some(y) => Scalar::Exact(y),
                None => Scalar::Approx(Real::from_rational(x, prec).cbrt()),
            },
            Scalar::Approx(x) => Scalar::Approx(x.with_precision(prec).cbrt()),
        }
    }

    /// Order comparison; mixed operands are compared at the approximation's
    /// precision.
    pub fn compare(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            _ => {
                let prec = self.precision().max(other.precision()).unwrap_or(64);
                self.to_real(prec)
                    .partial_cmp(&other.to_real(prec))
                    .unwrap_or(Ordering::Equal)
            }
        }
    }

    /// Exact representation for export: `n/d` for rationals, a decimal for
    /// approximations.
    pub fn to_exact_string(&self) -> String {
        match self {
            Scalar::Exact(x) => x.to_string(),
            Scalar::Approx(x) => x.to_string(),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(x: BigRational) -> Self {
        Scalar::Exact(x)
    }
}

impl From<Real> for Scalar {
    fn from(x: Real) -> Self {
        Scalar::Approx(x)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_exact_string())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(x) => write!(f, "{x}"),
            Scalar::Approx(x) => fmt::Display::fmt(x, f),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(x) => write!(f, "Exact({x})"),
            Scalar::Approx(x) => write!(f, "Approx({x:.30})"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(x) => Scalar::Exact(-x),
            Scalar::Approx(x) => Scalar::Approx(-x),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.$method(b)),
                    (Scalar::Approx(a), Scalar::Approx(b)) => Scalar::Approx(a.$method(b)),
                    (Scalar::Exact(a), Scalar::Approx(b)) => {
                        Scalar::Approx(Real::from_rational(a, b.precision()).$method(b))
                    }
                    (Scalar::Approx(a), Scalar::Exact(b)) => {
                        Scalar::Approx(a.$method(Real::from_rational(b, a.precision())))
                    }
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);
scalar_binop!(Div, div);

impl One for Scalar {
    fn one() -> Self {
        Scalar::int(1)
    }
}
