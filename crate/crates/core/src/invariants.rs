//! The Conway polynomial and the invariants read off from it: primitive
//! invariants `pc_{2i}`, the mod-2 amphicheirality criteria, the
//! determinant with its sum-of-two-squares test, and `v_3` from the Jones
//! polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::formal_log::{log_z, ExponentSequence};
use crate::ring::{LaurentPolynomial, Polynomial, TruncatedSeries};

/// An element of `1 + z^2 Z[z^2]`, stored by its coefficients `c_0, c_2, c_4, ...`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConwayPolynomial {
    // coeffs[i] = c_{2i}; coeffs[0] == 1, trailing entry nonzero
    coeffs: Vec<BigInt>,
}

impl ConwayPolynomial {
    /// From `c_0, c_2, c_4, ...`; `c_0` must be 1.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        Self::from_x_polynomial(&Polynomial::new(coeffs))
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn unknot() -> Self {
        ConwayPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// From the polynomial in `x = z^2`.
    pub fn from_x_polynomial(p: &Polynomial<BigInt>) -> Result<Self> {
        let c0 = p.coeff(0);
        if !c0.is_one() {
            return Err(Error::NonUnitConstant { found: c0.to_string() });
        }
        Ok(ConwayPolynomial {
            coeffs: p.coeffs().to_vec(),
        })
    }

    /// From a polynomial in `z`, which must be even with constant term 1.
    pub fn from_z_polynomial(p: &Polynomial<BigInt>) -> Result<Self> {
        if let Some((exponent, _)) = p.terms().find(|(i, _)| i % 2 == 1) {
            return Err(Error::OddExponent { exponent });
        }
        Self::from_x_polynomial(&p.compress(2).expect("even polynomial"))
    }

    /// `c_{2i}`.
    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `c_0, c_2, ...`
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The polynomial in `x = z^2`.
    pub fn x_polynomial(&self) -> Polynomial<BigInt> {
        Polynomial::new(self.coeffs.clone())
    }

    pub fn z_polynomial(&self) -> Polynomial<BigInt> {
        self.x_polynomial().substitute_square()
    }

    pub fn degree_z(&self) -> usize {
        2 * (self.coeffs.len() - 1)
    }

    pub fn is_unknot(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Conway polynomial of the connected sum.
    pub fn connected_sum(&self, other: &Self) -> Self {
        ConwayPolynomial {
            coeffs: (&self.x_polynomial() * &other.x_polynomial()).into_coeffs(),
        }
    }
}

impl fmt::Display for ConwayPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.z_polynomial().display('z'))
    }
}

impl fmt::Debug for ConwayPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConwayPolynomial({self})")
    }
}

/// Primitive invariants: `log_z` of the coefficient sequence of `C` in
/// `x = z^2`. Entry `i` of the result is `pc_{2i}`.
pub fn pc(c: &ConwayPolynomial, horizon: usize) -> ExponentSequence {
    let series = TruncatedSeries::from_polynomial(&c.x_polynomial(), horizon);
    log_z(&series, horizon).expect("Conway polynomials have constant term 1")
}

/// Value of a mod-2 criterion before and after reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionValue {
    pub value: BigInt,
    pub parity: u8,
}

/// Degree (in `z`) of the `k`-th displayed criterion.
pub fn criterion_degree(k: u8) -> usize {
    4 * k as usize
}

/// Evaluates the `k`-th displayed congruence (`k = 1` is Stanford's degree-4
/// criterion, `k = 2, 3` the degree-8 and degree-12 ones) and reduces mod 2.
///
/// The halves and quarters are combined over Q; a non-integral total is
/// reported as [`Error::NonIntegral`].
pub fn criterion_mod2(c: &ConwayPolynomial, k: u8) -> Result<CriterionValue> {
    let q = |i: usize| BigRational::from_integer(c.coefficient(i));
    let frac = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let (c2, c4, c6, c8, c10, c12) = (q(1), q(2), q(3), q(4), q(5), q(6));
    let value = match k {
        1 => &c4 + frac(1, 2) * (&c2 * &c2 + &c2),
        2 => {
            let c2_sq = &c2 * &c2;
            &c8 + &c2 * (&c6 + &c4)
                + frac(1, 2) * (&c4 * &c4 - &c4)
                + frac(1, 4) * (&c2_sq * &c2_sq + &c2_sq + frac(2, 1) * &c2)
        }
        3 => {
            let c2c4 = &c2 * &c4;
            &c12 + &c2 * (&c10 + &c4 + &c6 + &c8)
                + &c4 * &c8
                + frac(1, 2) * (&c6 * &c6 + &c6)
                + frac(1, 2) * (&c2c4 - frac(3, 1) * &c2c4 * &c2c4)
        }
        _ => panic!("criteria are indexed 1..=3, got {k}"),
    };
    if !value.is_integer() {
        return Err(Error::NonIntegral { value: value.to_string() });
    }
    let value = value.to_integer();
    let parity = parity(&value);
    Ok(CriterionValue { value, parity })
}

/// `pc_{4i} mod 2`.
pub fn criterion_pc_parity(c: &ConwayPolynomial, i: usize) -> u8 {
    let seq = pc(c, 2 * i);
    parity(seq.get(2 * i).expect("horizon covers 2i"))
}

pub(crate) fn parity(n: &BigInt) -> u8 {
    if n.is_odd() {
        1
    } else {
        0
    }
}

/// `C` evaluated at `z^2 = -4`. The knot determinant is its absolute value.
pub fn determinant(c: &ConwayPolynomial) -> BigInt {
    c.x_polynomial().eval(&BigInt::from(-4))
}

/// Answer to "is `|n|` a sum of two squares".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoSquares {
    /// `a^2 + b^2 = |n|` with `0 <= a <= b`, `a` minimal.
    Yes { a: BigInt, b: BigInt },
    /// Smallest prime `p ≡ 3 (mod 4)` dividing `|n|` to an odd power.
    No { blocking_prime: BigInt },
}

/// Decides by trial-division factorization (Fermat's criterion) and then
/// searches for the witness pair.
pub fn sum_of_two_squares(n: &BigInt) -> TwoSquares {
    let n = n.abs();
    if let Some(p) = blocking_prime(&n) {
        return TwoSquares::No { blocking_prime: p };
    }
    let mut a = BigInt::zero();
    while &a * &a * 2 <= n {
        let rest = &n - &a * &a;
        let b = rest.sqrt();
        if &b * &b == rest {
            return TwoSquares::Yes { a, b };
        }
        a += 1;
    }
    unreachable!("no prime 3 mod 4 to an odd power, so a witness exists")
}

fn blocking_prime(n: &BigInt) -> Option<BigInt> {
    let mut m = n.clone();
    if m.is_zero() {
        return None;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        let mut mult = 0u32;
        while (&m % &d).is_zero() {
            m /= &d;
            mult += 1;
        }
        if mult % 2 == 1 && (&d % 4u32).to_u32() == Some(3) {
            return Some(d);
        }
        d += if d == BigInt::from(2) { 1 } else { 2 };
    }
    // m is 1 or a prime appearing once
    ((&m % 4u32).to_u32() == Some(3)).then_some(m)
}

/// Jones polynomial of a knot, a Laurent polynomial in `t` with `J(1) = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JonesPolynomial(LaurentPolynomial<BigInt>);

impl JonesPolynomial {
    pub fn new(j: LaurentPolynomial<BigInt>) -> Result<Self> {
        let at_one = j.eval_one();
        if !at_one.is_one() {
            return Err(Error::BadNormalization {
                point: "t = 1",
                found: at_one.to_string(),
            });
        }
        Ok(JonesPolynomial(j))
    }

    pub fn laurent(&self) -> &LaurentPolynomial<BigInt> {
        &self.0
    }
}

/// `v_3 = -J''(1)/12 - J'''(1)/36`, which must be an integer.
pub fn v3_from_jones(j: &JonesPolynomial) -> Result<BigInt> {
    let mut second = BigInt::zero();
    let mut third = BigInt::zero();
    for (e, c) in j.0.terms() {
        let e = BigInt::from(e);
        let falling2 = &e * (&e - 1);
        third += c * &falling2 * (&e - 2);
        second += c * falling2;
    }
    let v = -BigRational::new(second, BigInt::from(12)) - BigRational::new(third, BigInt::from(36));
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegral { value: v.to_string() })
    }
}
