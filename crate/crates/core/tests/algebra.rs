mod support;

use ihara_core::algebra::{
    parse_rational, render_rational, Matrix, Polynomial, RationalFunction, TruncatedSeries,
};
use ihara_core::Rational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use support::oracle::det_cofactor;
use support::{int, poly, q};

fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

fn rat_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(rational(), rows * cols)
        .prop_map(move |v| Matrix::new(rows, cols, v).unwrap())
}

fn square(max: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max).prop_flat_map(|n| rat_matrix(n, n))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=3).prop_map(Polynomial::new)
}

fn poly_matrix(n: usize) -> impl Strategy<Value = Matrix<Polynomial>> {
    prop::collection::vec(polynomial(), n * n).prop_map(move |v| Matrix::new(n, n, v).unwrap())
}

/// A rational function with `den(0) != 0`.
fn power_series_ratfun() -> impl Strategy<Value = RationalFunction> {
    (
        polynomial(),
        1i64..=3,
        prop::collection::vec(rational(), 0..=2),
    )
        .prop_map(|(n, d0, rest)| {
            let mut den = vec![int(d0)];
            den.extend(rest);
            RationalFunction::new(n, Polynomial::new(den)).unwrap()
        })
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (polynomial(), polynomial()).prop_filter_map("nonzero denominator", |(n, d)| {
        RationalFunction::new(n, d).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bareiss_gauss_and_cofactor_agree(m in square(5)) {
        let oracle = det_cofactor(&m);
        prop_assert_eq!(m.det_bareiss().unwrap(), oracle.clone());
        prop_assert_eq!(m.det_gauss().unwrap(), oracle);
    }

    #[test]
    fn polynomial_determinant_matches_cofactor(m in (1usize..=4).prop_flat_map(poly_matrix)) {
        let oracle = det_cofactor(&m);
        prop_assert_eq!(m.det_bareiss().unwrap(), oracle.clone());
        prop_assert_eq!(m.to_ratfun().determinant().unwrap(), RationalFunction::from_poly(oracle.clone()));
        prop_assert_eq!(m.to_ratfun().det_gauss().unwrap(), RationalFunction::from_poly(oracle));
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in (1usize..=4).prop_flat_map(|n| (rat_matrix(n, n), rat_matrix(n, n)))) {
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(
            ab.det_bareiss().unwrap(),
            a.det_bareiss().unwrap() * b.det_bareiss().unwrap()
        );
    }

    #[test]
    fn sylvester_identity_for_rectangular_factors(
        (a, b) in (1usize..=4, 1usize..=4)
            .prop_filter("p != q", |(p, q)| p != q)
            .prop_flat_map(|(p, q)| (rat_matrix(p, q), rat_matrix(q, p)))
    ) {
        let p = a.rows();
        let qn = a.cols();
        let ab = a.try_mul(&b).unwrap();
        let ba = b.try_mul(&a).unwrap();
        let lhs = Matrix::identity(p).try_sub(&ab).unwrap().det_bareiss().unwrap();
        let rhs = Matrix::identity(qn).try_sub(&ba).unwrap().det_bareiss().unwrap();
        prop_assert_eq!(lhs, rhs);
        // and in t: det(I - tAB) = det(I - tBA)
        prop_assert_eq!(
            ab.identity_minus_t().unwrap().det_bareiss().unwrap(),
            ba.identity_minus_t().unwrap().det_bareiss().unwrap()
        );
    }

    #[test]
    fn inverse_times_matrix_is_identity(m in square(4)) {
        prop_assume!(!m.det_bareiss().unwrap().is_zero());
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.try_mul(&inv).unwrap(), Matrix::identity(m.rows()));
    }

    #[test]
    fn series_of_product_is_product_of_series(f in power_series_ratfun(), g in power_series_ratfun()) {
        let order = 8;
        let fg = &f * &g;
        let lhs = TruncatedSeries::from_ratfun(&fg, order).unwrap();
        let rhs = TruncatedSeries::from_ratfun(&f, order)
            .unwrap()
            .mul(&TruncatedSeries::from_ratfun(&g, order).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_times_denominator_recovers_numerator(f in power_series_ratfun()) {
        let order = 8;
        let s = TruncatedSeries::from_ratfun(&f, order).unwrap();
        let back = s.mul(&TruncatedSeries::from_polynomial(f.den(), order));
        prop_assert_eq!(back, TruncatedSeries::from_polynomial(f.num(), order));
    }

    #[test]
    fn canonical_form_is_stable(f in ratfun()) {
        let again = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert!(f.num().gcd(f.den()).is_one());
        let low = f.den().coeffs().iter().find(|c| !c.is_zero()).unwrap();
        prop_assert!(low.is_one());
    }

    #[test]
    fn scaling_numerator_and_denominator_changes_nothing(f in ratfun(), c in rational(), g in polynomial()) {
        prop_assume!(!c.is_zero() && !g.is_zero());
        let n = f.num().scale(&c) * g.clone();
        let d = f.den().scale(&c) * g;
        prop_assert_eq!(RationalFunction::new(n, d).unwrap(), f);
    }

    #[test]
    fn field_axioms_for_rational_functions(f in ratfun(), g in ratfun()) {
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).checked_div(&g).unwrap(), f);
    }

    #[test]
    fn exp_and_log_are_inverse(tail in prop::collection::vec(rational(), 1..=6)) {
        let mut c = vec![Rational::zero()];
        c.extend(tail);
        let s = TruncatedSeries::from_coeffs(6, c);
        prop_assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    #[test]
    fn rational_rendering_round_trips(r in (-50i64..=50, 1i64..=50).prop_map(|(n, d)| q(n, d))) {
        prop_assert_eq!(parse_rational(&render_rational(&r)).unwrap(), r);
    }
}

#[test]
fn polynomial_rendering() {
    assert_eq!(
        Polynomial::new(vec![int(1), q(-3, 2), int(1)]).to_string(),
        "1 - 3/2*t + t^2"
    );
    assert_eq!(Polynomial::zero().to_string(), "0");
    assert_eq!(poly(&[0, -1]).to_string(), "-t");
}

#[test]
fn rational_function_rendering() {
    let f = RationalFunction::new(poly(&[1, 1]), poly(&[1, -1])).unwrap();
    assert_eq!(f.to_string(), "(1 + t)/(1 - t)");
    let g = RationalFunction::new(poly(&[4]), poly(&[2, 0, -2])).unwrap();
    assert_eq!(g.to_string(), "2/(1 - t^2)");
}

#[test]
fn ratfun_reduces_common_factor() {
    // (1 - t^2)/(1 - t) = 1 + t
    let f = RationalFunction::new(poly(&[1, 0, -1]), poly(&[1, -1])).unwrap();
    assert!(f.is_polynomial());
    assert_eq!(f.num(), &poly(&[1, 1]));
}

#[test]
fn zero_denominator_is_rejected() {
    assert!(RationalFunction::new(poly(&[1]), Polynomial::zero()).is_err());
}

#[test]
fn parse_rational_rejects_garbage() {
    for bad in ["", "1/0", "1/-2", "x", "1/2/3", "1.5"] {
        assert!(parse_rational(bad).is_err(), "{bad}");
    }
    assert_eq!(parse_rational("-3/6").unwrap(), q(-1, 2));
}

#[test]
fn cyclic_permutation_trace_powers() {
    let p = Matrix::from_fn(3, 3, |i, j| if (i + 1) % 3 == j { int(1) } else { int(0) });
    assert_eq!(p.trace_power(3).unwrap(), int(3));
    assert_eq!(p.trace_power(2).unwrap(), int(0));
    assert_eq!(
        p.powers_traces(6).unwrap(),
        vec![int(0), int(0), int(3), int(0), int(0), int(3)]
    );
}

#[test]
fn cofactor_oracle_sanity() {
    let m = Matrix::new(2, 2, vec![int(1), int(2), int(3), int(4)]).unwrap();
    assert_eq!(det_cofactor(&m), int(-2));
    assert_eq!(det_cofactor(&Matrix::<Rational>::identity(7)), int(1));
}
