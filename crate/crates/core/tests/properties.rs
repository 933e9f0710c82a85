//! Property tests for the solver, the transforms and the RCP invariants.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use rayon::prelude::*;

use rcp::numerics::{discriminant, rat, rational_cube_root, solve_cubic_real, two_pow, Real};
use rcp::rcp::{
    is_rcp, mu, ramanujan_t, random_rcp, random_real_rooted_non_rcp, ratio_sum,
    ratio_sum_unchecked, rcp_residual, special_t, to_ramanujan_form, verify_eq11, verify_eq12,
    verify_eq13, Mode,
};
use rcp::transforms::{reciprocal, scale, shift_by_cbrt_r};
use rcp::{Cubic, Scalar};

const PREC: usize = 256;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

fn tol(scale: &Real) -> Real {
    &two_pow(-((PREC / 2) as i64), PREC) * &Real::one(PREC).max(scale)
}

fn from_roots(xs: &[BigRational; 3]) -> Cubic {
    let [a, b, c] = xs;
    Cubic::from_rationals(-(a + b + c), a * b + b * c + c * a, -(a * b * c))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-60i64..=60, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn generated() -> impl Strategy<Value = Cubic> {
    any::<u64>().prop_map(|seed| random_rcp(seed, &rat(10, 1)).unwrap())
}

/// Distinct real roots by Sturm's theorem, in exact arithmetic.
mod sturm {
    use num_rational::BigRational;
    use num_traits::{Signed, Zero};

    /// Coefficients from the constant term up.
    type Poly = Vec<BigRational>;

    fn trim(mut p: Poly) -> Poly {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    fn rem(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let lead = b.last().unwrap();
        while a.len() >= b.len() && !a.is_empty() {
            let k = a.len() - b.len();
            let f = a.last().unwrap() / lead;
            for (i, c) in b.iter().enumerate() {
                a[i + k] = &a[i + k] - &(&f * c);
            }
            a.pop();
            a = trim(a);
        }
        a
    }

    fn sign_at_pos_inf(p: &Poly) -> i32 {
        p.last().map_or(0, |c| if c.is_positive() { 1 } else { -1 })
    }

    fn sign_at_neg_inf(p: &Poly) -> i32 {
        let s = sign_at_pos_inf(p);
        if p.len().is_multiple_of(2) {
            -s
        } else {
            s
        }
    }

    fn changes(signs: impl Iterator<Item = i32>) -> usize {
        let signs: Vec<i32> = signs.filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots of the monic `x^3 + p x^2 + q x + r`.
    pub fn distinct_real_roots(p: &BigRational, q: &BigRational, r: &BigRational) -> usize {
        let three = BigRational::from_integer(3.into());
        let two = BigRational::from_integer(2.into());
        let f: Poly = vec![
            r.clone(),
            q.clone(),
            p.clone(),
            BigRational::from_integer(1.into()),
        ];
        let df: Poly = trim(vec![q.clone(), &two * p, three]);
        let mut seq = vec![f, df];
        loop {
            let n = seq.len();
            let next: Poly = rem(&seq[n - 2], &seq[n - 1])
                .into_iter()
                .map(|c| -c)
                .collect();
            if next.is_empty() {
                break;
            }
            seq.push(next);
        }
        changes(seq.iter().map(sign_at_neg_inf)) - changes(seq.iter().map(sign_at_pos_inf))
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn solver_recovers_rational_roots(xs in [nonzero_rational(), nonzero_rational(), nonzero_rational()]) {
        let c = from_roots(&xs);
        let roots = solve_cubic_real(&c, PREC).unwrap();
        let mut want = xs.to_vec();
        want.sort_by(|a, b| b.cmp(a));
        for (x, w) in roots.reals().iter().zip(&want) {
            let w = Real::from_rational(w, PREC);
            prop_assert!((x - &w).abs() <= tol(&w.abs()), "{x} vs {w}");
        }
    }

    #[test]
    fn vieta_residuals(c in generated()) {
        let roots = solve_cubic_real(&c, PREC).unwrap();
        let [x1, x2, x3] = roots.reals();
        let sums = [
            (&(x1 + x2) + x3, -c.p().to_real(PREC)),
            (&(&(x1 * x2) + &(x2 * x3)) + &(x3 * x1), c.q().to_real(PREC)),
            (&(x1 * x2) * x3, -c.r().to_real(PREC)),
        ];
        for (k, (got, want)) in sums.iter().enumerate() {
            prop_assert!((got - want).abs() <= tol(&Real::one(PREC)), "e{}: {got} vs {want}", k + 1);
        }
    }

    #[test]
    fn repeated_roots_have_zero_discriminant(a in nonzero_rational(), b in nonzero_rational()) {
        let c = from_roots(&[a.clone(), a.clone(), b.clone()]);
        prop_assert!(discriminant(&c).is_zero());
        let expected = if a == b { 1 } else { 2 };
        prop_assert_eq!(
            sturm::distinct_real_roots(c.p().as_exact().unwrap(), c.q().as_exact().unwrap(), c.r().as_exact().unwrap()),
            expected
        );
    }

    #[test]
    fn transforms_move_roots_and_keep_mu(c in generated(), a in nonzero_rational()) {
        let cr = is_rcp(&c, PREC).c.to_real(PREC);
        let xs = solve_cubic_real(&c, PREC).unwrap().reals().clone();
        let a_real = Real::from_rational(&a, PREC);
        let r = c.r().to_real(PREC);
        let cases = [
            (scale(&c, &Scalar::Exact(a.clone())).unwrap(), xs.iter().map(|x| &a_real * x).collect::<Vec<_>>()),
            (reciprocal(&c, PREC).unwrap(), xs.iter().map(|x| &r / x).collect()),
            (shift_by_cbrt_r(&c, PREC).unwrap(), xs.iter().map(|x| x - &cr).collect()),
        ];
        for (t, mut want) in cases {
            prop_assert_eq!(mu(&t), mu(&c));
            want.sort_by(|x, y| y.partial_cmp(x).unwrap());
            let got = solve_cubic_real(&t, PREC).unwrap();
            for (g, w) in got.reals().iter().zip(&want) {
                prop_assert!((g - w).abs() <= tol(&t.root_scale(PREC)), "{t}: {g} vs {w}");
            }
        }
    }

    #[test]
    fn ramanujan_form_bridges_to_special_t(c in generated()) {
        let form = to_ramanujan_form(&c, PREC).unwrap();
        prop_assert!(form.condition_five.is_zero());
        let sel = ramanujan_t(&form.a, &form.b, PREC).unwrap();
        let special = special_t(&form.a, &form.b, PREC).unwrap().to_real(PREC);
        prop_assert!((&sel.t - &special).abs() <= tol(&special.abs()), "{} vs {special}", sel.t);
    }

    #[test]
    fn reciprocal_sum_is_scaled_sum_of_reciprocal_cubic(c in generated()) {
        let cr = is_rcp(&c, PREC).c.to_real(PREC);
        let direct = verify_eq13(&c, PREC).unwrap();
        let via = verify_eq11(&reciprocal(&c, PREC).unwrap(), PREC).unwrap();
        prop_assert!(direct.pass && via.pass);
        let scaled = &cr * &direct.lhs;
        prop_assert!((&scaled - &via.lhs).abs() <= tol(&via.lhs.abs()));
        let scaled = &cr * &direct.rhs;
        prop_assert!((&scaled - &via.rhs).abs() <= tol(&via.rhs.abs()));
    }

    #[test]
    fn mu_never_exceeds_nine_fourths(c in generated()) {
        prop_assert!(mu(&c).compare(&Scalar::ratio(9, 4)).is_le());
        prop_assert!(!discriminant(&c).as_exact().unwrap().is_negative());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn discriminant_sign_matches_root_count(p in rational(), q in rational(), r in nonzero_rational()) {
        let c = Cubic::from_rationals(p.clone(), q.clone(), r.clone());
        let d = discriminant(&c).signum();
        let n = sturm::distinct_real_roots(&p, &q, &r);
        match d {
            1 => prop_assert_eq!(n, 3),
            -1 => prop_assert_eq!(n, 1),
            _ => prop_assert!(n < 3),
        }
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn non_cube_constant_term_is_never_exact(p in rational(), q in rational(), r in nonzero_rational()) {
        prop_assume!(rational_cube_root(&r).is_none());
        let c = Cubic::from_rationals(p, q, r);
        let v = is_rcp(&c, PREC);
        prop_assert!(!v.is_rcp && v.mode == Mode::Exact);
        prop_assert!(!rcp_residual(&c, PREC).is_zero());
    }
}

#[test]
fn generated_rcps_satisfy_every_identity() {
    let tight = two_pow(-100, PREC);
    let bad: Vec<String> = (0..500u64)
        .into_par_iter()
        .flat_map_iter(|seed| {
            let c = random_rcp(seed, &rat(10, 1)).unwrap();
            let sums = ratio_sum(&c, PREC).unwrap();
            [
                verify_eq11(&c, PREC).unwrap(),
                verify_eq12(&c, PREC).unwrap(),
                verify_eq13(&c, PREC).unwrap(),
                sums.identity,
                sums.cube_law,
            ]
            .into_iter()
            .filter(|r| {
                let scale = Real::one(PREC).max(&r.lhs.abs()).max(&r.rhs.abs());
                r.residual > &tight * &scale
            })
            .map(move |r| format!("seed {seed}: {} residual {}", r.identity_id, r.residual))
        })
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn cube_law_fails_for_non_rcps() {
    let loose = two_pow(-16, PREC);
    let failed = (0..500u64)
        .into_par_iter()
        .filter(|&seed| {
            let c = random_real_rooted_non_rcp(seed, &rat(10, 1)).unwrap();
            ratio_sum_unchecked(&c, PREC).unwrap().cube_law.residual > loose
        })
        .count();
    assert!(
        failed * 100 >= 500 * 99,
        "cube law failed for only {failed}/500"
    );
}
