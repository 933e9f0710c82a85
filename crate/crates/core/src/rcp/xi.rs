//! The pair values `xi = xi/xj + xj/xi` and the cubic they satisfy.

use serde::Serialize;

use super::round_scalar;
use crate::cubic::Cubic;
use crate::error::{Error, Result};
use crate::numerics::{solve_cubic_real, working_precision, Scalar};

/// `xi` values for the root pairs (1,2), (1,3), (2,3).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct XiTriple {
    pub xi: [Scalar; 3],
}

impl XiTriple {
    pub fn sum(&self) -> Scalar {
        let [a, b, c] = &self.xi;
        &(a + b) + c
    }

    pub fn pair_sum(&self) -> Scalar {
        let [a, b, c] = &self.xi;
        &(&(a * b) + &(a * c)) + &(b * c)
    }

    pub fn product(&self) -> Scalar {
        let [a, b, c] = &self.xi;
        &(a * b) * c
    }
}

/// Monic cubic `xi^3 + c2 xi^2 + c1 xi + c0` whose roots are the `xi`
/// values of any RCP with the given `pq/r`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct XiPoly {
    pub mu: Scalar,
    pub c2: Scalar,
    pub c1: Scalar,
    pub c0: Scalar,
}

impl XiPoly {
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let acc = x + &self.c2;
        let acc = &(&acc * x) + &self.c1;
        &(&acc * x) + &self.c0
    }

    /// The same polynomial as a [`Cubic`]; `c0 = -((mu-7)^2 + 4)` never
    /// vanishes for real `mu`.
    pub fn to_cubic(&self) -> Cubic {
        Cubic::new(self.c2.clone(), self.c1.clone(), self.c0.clone())
            .expect("constant term is at most -4")
    }
}

/// `xi^3 - (mu - 3) xi^2 + 4 (mu - 6) xi - ((mu - 7)^2 + 4)`.
pub fn xi_polynomial(mu: &Scalar) -> XiPoly {
    let c2 = -(mu - &Scalar::int(3));
    let c1 = &Scalar::int(4) * &(mu - &Scalar::int(6));
    let c0 = -(&(mu - &Scalar::int(7)).square() + &Scalar::int(4));
    XiPoly {
        mu: mu.clone(),
        c2,
        c1,
        c0,
    }
}

/// Pair values of the roots of `c`; exact when the roots are rational.
pub fn xi_values(c: &Cubic, prec: usize) -> Result<XiTriple> {
    let roots = solve_cubic_real(c, working_precision(prec))?;
    if roots.has_zero_root() {
        return Err(Error::ZeroConstantTerm);
    }
    let x = roots.values();
    let pair = |i: usize, j: usize| {
        let ratio = &x[i] / &x[j];
        round_scalar(&ratio + &ratio.recip(), prec)
    };
    Ok(XiTriple {
        xi: [pair(0, 1), pair(0, 2), pair(1, 2)],
    })
}
