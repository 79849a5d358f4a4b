mod common;

use common::{int_poly, unit_poly};
use conway_core::ring::IntegerSqrt;
use conway_core::{Polynomial, TruncatedSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

proptest! {
    #[test]
    fn reduction_is_a_ring_map(p in int_poly(8, 50), q in int_poly(8, 50)) {
        prop_assert_eq!((&p * &q).reduce::<4>(), &p.reduce::<4>() * &q.reduce::<4>());
        prop_assert_eq!((&p + &q).reduce::<4>(), &p.reduce::<4>() + &q.reduce::<4>());
        prop_assert_eq!((&p * &q).reduce::<2>(), &p.reduce::<2>() * &q.reduce::<2>());
        prop_assert_eq!(p.reduce::<4>().lift().reduce::<4>(), p.reduce::<4>());
    }

    #[test]
    fn substitutions_are_multiplicative(p in int_poly(8, 9), q in int_poly(8, 9)) {
        let pq = &p * &q;
        prop_assert_eq!(pq.substitute_neg(), &p.substitute_neg() * &q.substitute_neg());
        prop_assert_eq!(pq.substitute_square(), &p.substitute_square() * &q.substitute_square());
        let squared = p.substitute_square();
        prop_assert_eq!(squared.substitute_neg(), squared.clone());
        let mirrored = p.substitute_neg().substitute_square();
        for (i, c) in p.coeffs().iter().enumerate() {
            let sign = if i % 2 == 0 { c.clone() } else { -c };
            prop_assert_eq!(mirrored.coeff(2 * i), sign);
            prop_assert_eq!(mirrored.coeff(2 * i + 1), BigInt::from(0));
        }
    }

    #[test]
    fn division_reconstructs(a in int_poly(10, 20), b in unit_poly(4, 20)) {
        // b reversed has leading coefficient 1, so division stays integral
        let b = Polynomial::new(b.coeffs().iter().rev().cloned().collect());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree().map_or(true, |d| Some(d) < b.degree()));
    }

    #[test]
    fn rational_sqrt_squares_back(p in unit_poly(6, 9), order in 1usize..12) {
        let f = TruncatedSeries::from_polynomial(&p, order).to_rational();
        let g = f.sqrt_rational().unwrap();
        prop_assert_eq!(&g * &g, f);
    }

    #[test]
    fn integer_sqrt_agrees_with_rational(p in unit_poly(6, 9), order in 1usize..12) {
        let f = TruncatedSeries::from_polynomial(&p, order);
        let rational = f.to_rational().sqrt_rational().unwrap();
        let first_fraction = rational.coeffs().iter().position(|c: &BigRational| !c.is_integer());
        match f.sqrt_integer().unwrap() {
            IntegerSqrt::Integer(g) => {
                prop_assert_eq!(first_fraction, None);
                prop_assert_eq!(&g * &g, f);
            }
            IntegerSqrt::NotInteger { exponent } => prop_assert_eq!(first_fraction, Some(exponent)),
        }
    }

    #[test]
    fn squares_have_integer_roots(p in unit_poly(5, 9)) {
        let sq = &p * &p;
        let deg = sq.degree().unwrap();
        match TruncatedSeries::from_polynomial(&sq, deg).sqrt_integer().unwrap() {
            IntegerSqrt::Integer(g) => prop_assert_eq!(g.truncate(p.degree().unwrap()).unwrap().to_polynomial(), p),
            other => prop_assert!(false, "{:?}", other),
        }
    }
}

#[test]
fn sqrt_failure_exponent_depends_on_variable() {
    let one_plus_x = TruncatedSeries::from_polynomial(&Polynomial::from_i64s(&[1, 1]), 4);
    assert_eq!(one_plus_x.sqrt_integer(), Ok(IntegerSqrt::NotInteger { exponent: 1 }));
    let one_plus_z2 = TruncatedSeries::from_polynomial(&Polynomial::from_i64s(&[1, 0, 1]), 4);
    assert_eq!(one_plus_z2.sqrt_integer(), Ok(IntegerSqrt::NotInteger { exponent: 2 }));
}
