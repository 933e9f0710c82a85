//! Monic cubics `x^3 + p x^2 + q x + r` with `r != 0`.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numerics::{Real, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Cubic {
    p: Scalar,
    q: Scalar,
    r: Scalar,
}

impl Cubic {
    pub fn new(p: impl Into<Scalar>, q: impl Into<Scalar>, r: impl Into<Scalar>) -> Result<Self> {
        let r = r.into();
        if r.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(Cubic {
            p: p.into(),
            q: q.into(),
            r,
        })
    }

    /// Integer coefficients. Panics when `r == 0`.
    pub fn from_ints(p: i64, q: i64, r: i64) -> Self {
        Self::new(p, q, r).expect("constant term must be nonzero")
    }

    /// Rational coefficients. Panics when `r == 0`.
    pub fn from_rationals(p: BigRational, q: BigRational, r: BigRational) -> Self {
        Self::new(p, q, r).expect("constant term must be nonzero")
    }

    pub fn p(&self) -> &Scalar {
        &self.p
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn r(&self) -> &Scalar {
        &self.r
    }

    pub fn coefficients(&self) -> [&Scalar; 3] {
        [&self.p, &self.q, &self.r]
    }

    /// True when all three coefficients are rational.
    pub fn is_exact(&self) -> bool {
        self.p.is_exact() && self.q.is_exact() && self.r.is_exact()
    }

    pub fn exact_coefficients(&self) -> Option<[&BigRational; 3]> {
        Some([self.p.as_exact()?, self.q.as_exact()?, self.r.as_exact()?])
    }

    /// Highest precision among approximate coefficients.
    pub fn precision(&self) -> Option<usize> {
        self.coefficients()
            .iter()
            .filter_map(|c| c.precision())
            .max()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let acc = x + &self.p;
        let acc = &(&acc * x) + &self.q;
        &(&acc * x) + &self.r
    }

    /// Horner evaluation at `prec` bits; returns `(f(x), f'(x))`.
    pub fn eval_real(&self, x: &Real, prec: usize) -> (Real, Real) {
        let [p, q, r] = self.real_coefficients(prec);
        let fx = &(&(&(x + &p) * x) + &q) * x + &r;
        let three = Real::from_i64(3, prec);
        let two_p = &p + &p;
        let dfx = &(&(&three * x) + &two_p) * x + &q;
        (fx, dfx)
    }

    pub fn real_coefficients(&self, prec: usize) -> [Real; 3] {
        [
            self.p.to_real(prec),
            self.q.to_real(prec),
            self.r.to_real(prec),
        ]
    }

    /// `max(1, |p|, |q|, |r|)`, the magnitude used to scale tolerances.
    pub fn magnitude(&self, prec: usize) -> Real {
        self.real_coefficients(prec)
            .iter()
            .fold(Real::one(prec), |m, c| m.max(&c.abs()))
    }

    /// `max(1, |p|, |q|^(1/2), |r|^(1/3))`, a bound on the size of the roots
    /// up to a factor 3.
    pub fn root_scale(&self, prec: usize) -> Real {
        let [p, q, r] = self.real_coefficients(prec);
        Real::one(prec)
            .max(&p.abs())
            .max(&q.abs().sqrt())
            .max(&r.abs().cbrt())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &Scalar, var: &str) -> fmt::Result {
    let mag = c.abs();
    f.write_str(if c.signum() < 0 { " - " } else { " + " })?;
    let unit = matches!(&mag, Scalar::Exact(m) if m.is_one());
    if var.is_empty() || !unit {
        write!(f, "{mag}")?;
    }
    f.write_str(var)
}

/// Renders as `x^3 - 3x^2 - 6x + 8`; rational coefficients are written `n/d`.
impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("x^3")?;
        for (c, var) in [(&self.p, "x^2"), (&self.q, "x"), (&self.r, "")] {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, var)?;
        }
        Ok(())
    }
}
