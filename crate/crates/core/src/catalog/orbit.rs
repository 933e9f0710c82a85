//! Minimal cubics of cosine triples closed under angle doubling.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::orbit_max_den;
use super::trig::cos_frac;
use crate::cubic::Cubic;
use crate::error::{Error, Result};
use crate::numerics::{
    check_precision, reconstruct_rational, two_pow, working_precision, Real, Scalar,
};
use crate::rcp::{is_rcp, mu};

#[derive(Clone, Debug, Serialize)]
pub struct OrbitFamily {
    pub n: u64,
    pub m: u64,
    /// Numerators `k` of the angles `2 pi k / n`, reduced into `(0, n/2)`, in
    /// doubling order starting from `m`.
    pub orbit: [u64; 3],
    #[serde(serialize_with = "serialize_cubic")]
    pub cubic: Cubic,
    pub is_rcp: bool,
    pub mu: Scalar,
}

fn serialize_cubic<S: serde::Serializer>(c: &Cubic, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Cubic", 3)?;
    st.serialize_field("p", c.p())?;
    st.serialize_field("q", c.q())?;
    st.serialize_field("r", c.r())?;
    st.end()
}

/// `k` and `n - k` give the same cosine.
fn fold(k: u64, n: u64) -> u64 {
    let k = k % n;
    k.min(n - k)
}

/// The doubling orbit of `m` modulo `+-n`, in doubling order.
fn doubling_orbit(n: u64, m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = fold(m, n);
    while !out.contains(&k) {
        out.push(k);
        k = fold(2 * k, n);
    }
    out
}

/// Reduces `m/n`, computes the doubling orbit and reconstructs the monic
/// cubic with roots `cos(2 pi k / n)`.
pub fn build_cos_orbit(n: u64, m: u64, prec: usize) -> Result<OrbitFamily> {
    check_precision(prec)?;
    let g = n.gcd(&m);
    if n < 3 || n.is_multiple_of(2) || g == 0 {
        return Err(Error::OrbitNotCubic { n, m, size: 0 });
    }
    let (n, m) = (n / g, m / g);
    let orbit = doubling_orbit(n, m);
    if orbit.len() != 3 {
        return Err(Error::OrbitNotCubic {
            n,
            m,
            size: orbit.len(),
        });
    }
    let orbit = [orbit[0], orbit[1], orbit[2]];

    let coefficients = |bits: usize| -> [Real; 3] {
        let c = orbit.map(|k| cos_frac(k as i64, n as i64, bits));
        [
            -(&(&c[0] + &c[1]) + &c[2]),
            &(&(&c[0] * &c[1]) + &(&c[1] * &c[2])) + &(&c[2] * &c[0]),
            -(&(&c[0] * &c[1]) * &c[2]),
        ]
    };
    let max_den = orbit_max_den(n);
    let w = working_precision(prec);
    let tol = two_pow(-((prec / 2) as i64), w);
    let fine = coefficients(working_precision(2 * prec));
    let strict = two_pow(-(prec as i64), 2 * prec);

    let mut exact: Vec<BigRational> = Vec::with_capacity(3);
    for (approx, check) in coefficients(w).iter().zip(&fine) {
        let failed = || Error::ReconstructionFailed {
            value: approx.to_decimal(30),
            max_den: max_den.to_string(),
        };
        let q = reconstruct_rational(approx, &max_den, &tol).ok_or_else(failed)?;
        let back = Real::from_rational(&q, 2 * prec);
        if (&back - check).abs() > strict {
            return Err(failed());
        }
        exact.push(q);
    }
    let [p, q, r]: [BigRational; 3] = exact.try_into().expect("three coefficients");
    let cubic = Cubic::from_rationals(p, q, r);
    Ok(OrbitFamily {
        n,
        m,
        orbit,
        is_rcp: is_rcp(&cubic, prec).is_rcp,
        mu: mu(&cubic),
        cubic,
    })
}

/// All distinct size-3 doubling-orbit families with odd `n <= n_max`,
/// ordered by `(n, m)`.
pub fn scan_cos_families(n_max: u64, prec: usize) -> Result<Vec<OrbitFamily>> {
    check_precision(prec)?;
    let mut seen = BTreeSet::new();
    let mut candidates = Vec::new();
    for n in (3..=n_max).step_by(2) {
        for m in 1..n {
            if n.gcd(&m) != 1 {
                continue;
            }
            let orbit = doubling_orbit(n, m);
            if orbit.len() != 3 {
                continue;
            }
            let mut key = orbit.clone();
            key.sort_unstable();
            if seen.insert((n, key)) {
                candidates.push((n, m));
            }
        }
    }
    candidates
        .into_par_iter()
        .map(|(n, m)| build_cos_orbit(n, m, prec))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::cubics;
    use crate::numerics::solve_cubic_real;

    #[test]
    fn heptagon_and_nonagon() {
        let f = build_cos_orbit(7, 1, 256).unwrap();
        assert_eq!(f.cubic, cubics::cos7());
        assert_eq!(f.orbit, [1, 2, 3]);
        assert!(f.is_rcp);
        assert_eq!(f.mu, Scalar::int(2));

        let f = build_cos_orbit(9, 1, 256).unwrap();
        assert_eq!(f.cubic, cubics::cos9());
        assert_eq!(f.mu, Scalar::int(0));

        let f = build_cos_orbit(7, 3, 256).unwrap();
        assert_eq!(f.cubic, cubics::cos7());
        assert_eq!(f.orbit, [3, 1, 2]);
    }

    #[test]
    fn reconstructed_roots_are_the_cosines() {
        let f = build_cos_orbit(9, 2, 256).unwrap();
        let roots = solve_cubic_real(&f.cubic, 256).unwrap();
        let mut cos: Vec<f64> = f
            .orbit
            .iter()
            .map(|&k| (2.0 * std::f64::consts::PI * k as f64 / 9.0).cos())
            .collect();
        cos.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (x, c) in roots.reals().iter().zip(cos) {
            assert!((x.to_f64() - c).abs() < 1e-14);
        }
    }

    #[test]
    fn orbits_that_are_not_cubic() {
        assert!(matches!(
            build_cos_orbit(5, 1, 256),
            Err(Error::OrbitNotCubic { size: 2, .. })
        ));
        assert!(matches!(
            build_cos_orbit(9, 3, 256),
            Err(Error::OrbitNotCubic { n: 3, .. })
        ));
        assert!(matches!(
            build_cos_orbit(8, 1, 256),
            Err(Error::OrbitNotCubic { .. })
        ));
        // reduces to n = 7
        assert_eq!(build_cos_orbit(21, 3, 256).unwrap().n, 7);
    }

    #[test]
    fn scan_finds_exactly_two_families() {
        let fams = scan_cos_families(30, 256).unwrap();
        let ns: Vec<u64> = fams.iter().map(|f| f.n).collect();
        assert_eq!(ns, vec![7, 9]);
        assert!(fams.iter().all(|f| f.is_rcp));
        assert!(scan_cos_families(5, 256).unwrap().is_empty());
        assert_eq!(scan_cos_families(9, 256).unwrap().len(), 2);
    }
}
