#![allow(dead_code)]

use conway_core::{ConwayPolynomial, ExponentSequence, Polynomial, Z4};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn big_poly(coeffs: Vec<i64>) -> Polynomial<BigInt> {
    Polynomial::from_i64s(&coeffs)
}

pub fn int_poly(max_len: usize, bound: i64) -> impl Strategy<Value = Polynomial<BigInt>> {
    prop::collection::vec(-bound..=bound, 0..=max_len).prop_map(big_poly)
}

/// Nonzero with constant term 1.
pub fn unit_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = Polynomial<BigInt>> {
    prop::collection::vec(-bound..=bound, 0..=max_deg).prop_map(|tail| {
        let mut c = vec![1];
        c.extend(tail);
        big_poly(c)
    })
}

/// Conway polynomial with `x`-degree at most `max_deg`.
pub fn conway(max_deg: usize, bound: i64) -> impl Strategy<Value = ConwayPolynomial> {
    unit_poly(max_deg, bound).prop_map(|p| ConwayPolynomial::from_x_polynomial(&p).unwrap())
}

pub fn z4_unit_poly(max_deg: usize) -> impl Strategy<Value = Polynomial<Z4>> {
    prop::collection::vec(0i64..4, 0..=max_deg).prop_map(|tail| {
        let mut c = vec![1];
        c.extend(tail);
        big_poly(c).reduce::<4>()
    })
}

/// Length `len`, at most `support` nonzero entries in `[-bound, bound]`.
pub fn sparse_sequence(len: usize, support: usize, bound: i64) -> impl Strategy<Value = ExponentSequence> {
    prop::collection::vec((1..=len, -bound..=bound), 0..=support).prop_map(move |terms| {
        let mut entries = vec![0i64; len];
        for (i, a) in terms {
            entries[i - 1] = a;
        }
        ExponentSequence::from_i64s(&entries)
    })
}
