mod common;

use common::{conway, int_poly, unit_poly, z4_unit_poly};
use conway_core::obstructions::{build_from_exponents, factor_integer_poly, triple_product_of};
use conway_core::oracles::{brute_square_z4, SearchMode};
use conway_core::{
    conjecture_test, exp_z, hk_factorization, square_test_z4, ConwayPolynomial, ExponentSequence, HkVerdict,
    Polynomial, SquareVerdict, TruncatedSeries,
};
use num_traits::Signed;
use proptest::prelude::*;

fn phi_times_mirror(phi: &Polynomial<num_bigint::BigInt>) -> ConwayPolynomial {
    ConwayPolynomial::from_z_polynomial(&(phi * &phi.substitute_neg())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn square_test_matches_search(p in z4_unit_poly(12)) {
        // a failure exponent e is only visible to roots of degree >= e
        let reach = 2 * p.degree().unwrap();
        let fast = square_test_z4(&p).unwrap();
        let slow = brute_square_z4(&p, reach, SearchMode::Binary).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn square_test_matches_full_enumeration(p in z4_unit_poly(6)) {
        let fast = square_test_z4(&p).unwrap();
        let slow = brute_square_z4(&p, 3, SearchMode::Paranoid).unwrap();
        match (&fast, &slow) {
            (
                SquareVerdict::NotSquare { failure_exponent: e },
                SquareVerdict::NotSquare { failure_exponent: f },
            ) => prop_assert!(e == f || *e > 3, "{} vs {}", e, f),
            _ => prop_assert_eq!(fast, slow),
        }
    }

    #[test]
    fn squares_are_recognized(h in z4_unit_poly(8)) {
        let sq = &h * &h;
        match square_test_z4(&sq).unwrap() {
            SquareVerdict::Square { witness } => prop_assert_eq!(&witness * &witness, sq),
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn triple_product_square_iff_even_exponents_even(a in prop::collection::vec(0i64..=3, 1..=8)) {
        let seq = ExponentSequence::from_i64s(&a);
        let f = build_from_exponents(&seq).unwrap();
        let verdict = square_test_z4(&triple_product_of(&f).reduce::<4>()).unwrap();
        let evens_even = a.iter().skip(1).step_by(2).all(|v| v % 2 == 0);
        prop_assert_eq!(verdict.is_square(), evens_even);
    }

    #[test]
    fn built_polynomial_matches_exp(a in prop::collection::vec(0i64..=3, 1..=6)) {
        let seq = ExponentSequence::from_i64s(&a);
        let f = build_from_exponents(&seq).unwrap();
        let deg = f.degree().unwrap();
        let padded = ExponentSequence::from_i64s(&[a.clone(), vec![0; deg]].concat());
        prop_assert_eq!(TruncatedSeries::from_polynomial(&f, deg), exp_z(&padded, deg).unwrap());
    }

    #[test]
    fn conjecture_report_is_consistent(c in conway(6, 8)) {
        let report = conjecture_test(&c);
        prop_assert!(report.consistent, "{:?}", report);
    }

    #[test]
    fn phi_times_mirror_is_square_and_factors(phi in unit_poly(5, 6)) {
        let c = phi_times_mirror(&phi);
        prop_assert!(conjecture_test(&c).verdict.is_square());
        match hk_factorization(&c) {
            HkVerdict::Factored { phi: found, .. } => prop_assert_eq!(&found * &found.substitute_neg(), c.z_polynomial()),
            HkVerdict::NotFactorable => prop_assert!(false, "missed φ = {}", phi.display('z')),
        }
    }

    #[test]
    fn factorization_is_complete(p in int_poly(7, 12), q in int_poly(5, 12)) {
        let pq = &p * &q;
        prop_assume!(!pq.is_zero());
        let fac = factor_integer_poly(&pq).unwrap();
        prop_assert_eq!(fac.product(), pq);
        for g in &fac.factors {
            let again = factor_integer_poly(g).unwrap();
            prop_assert!(again.content.abs() == num_bigint::BigInt::from(1));
            prop_assert_eq!(&again.factors, &vec![g.clone()]);
        }
    }
}
