//! Elementary symmetric functions of three roots.

use super::scalar::Scalar;
use crate::cubic::Cubic;

/// `(s1, s2, s3)`: the elementary symmetric polynomials of three roots.
#[derive(Clone, Debug, PartialEq)]
pub struct SymTriple {
    pub s1: Scalar,
    pub s2: Scalar,
    pub s3: Scalar,
}

impl SymTriple {
    pub fn new(s1: impl Into<Scalar>, s2: impl Into<Scalar>, s3: impl Into<Scalar>) -> Self {
        SymTriple {
            s1: s1.into(),
            s2: s2.into(),
            s3: s3.into(),
        }
    }

    /// For a monic cubic: `s1 = -p`, `s2 = q`, `s3 = -r`.
    pub fn from_cubic(c: &Cubic) -> Self {
        SymTriple {
            s1: -c.p(),
            s2: c.q().clone(),
            s3: -c.r(),
        }
    }

    pub fn from_roots([a, b, c]: &[Scalar; 3]) -> Self {
        SymTriple {
            s1: &(a + b) + c,
            s2: &(&(a * b) + &(b * c)) + &(c * a),
            s3: &(a * b) * c,
        }
    }
}

/// Sum of cubes from the symmetric functions: `s1^3 - 3 s1 s2 + 3 s3`.
pub fn power_sum3(s: &SymTriple) -> Scalar {
    let three = Scalar::int(3);
    &(&s.s1.cube() - &(&(&three * &s.s1) * &s.s2)) + &(&three * &s.s3)
}
