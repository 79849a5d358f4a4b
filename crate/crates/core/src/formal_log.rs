//! The integral formal exponential and logarithm.
//!
//! `exp_z` sends an exponent sequence `(a_1, a_2, ...)` to the product
//! `Π_{i≥1} (1 + (-x)^i)^{a_i}`, a group isomorphism from `(x·Z[[x]], +)`
//! onto `(1 + x·Z[[x]], ×)`. `log_z` is its inverse.
//!
//! Sign convention: the factor is `1 + (-x)^i`, so `exp_z` of the
//! sequence with `a_1 = 1` is `1 - x`, not `1 + x`. Everything exposed as
//! an integer (including the primitive Conway invariants) follows this
//! convention; parity statements are insensitive to it.

use std::ops::{Add, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::TruncatedSeries;

/// Integer exponents `a_i` for `i = 1..=horizon`; entries past the horizon
/// are unknown rather than zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExponentSequence {
    // entries[i - 1] = a_i
    entries: Vec<BigInt>,
}

impl ExponentSequence {
    /// `entries[k]` becomes `a_{k+1}`.
    pub fn new(entries: Vec<BigInt>) -> Self {
        ExponentSequence { entries }
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn zeros(horizon: usize) -> Self {
        Self::new(vec![BigInt::zero(); horizon])
    }

    /// Sequence known through `horizon`, zero except at the listed indices.
    pub fn from_sparse<I: IntoIterator<Item = (usize, BigInt)>>(terms: I, horizon: usize) -> Self {
        let mut seq = Self::zeros(horizon);
        for (i, a) in terms {
            assert!((1..=horizon).contains(&i), "index {i} outside 1..={horizon}");
            seq.entries[i - 1] += a;
        }
        seq
    }

    pub fn horizon(&self) -> usize {
        self.entries.len()
    }

    /// `a_i`, or `None` past the horizon. Panics on `i == 0`.
    pub fn get(&self, i: usize) -> Option<&BigInt> {
        assert!(i >= 1, "exponent sequences are indexed from 1");
        self.entries.get(i - 1)
    }

    /// `(i, a_i)` for every known index.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        self.entries.iter().enumerate().map(|(k, a)| (k + 1, a))
    }

    /// Indices with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        self.iter().filter(|(_, a)| !a.is_zero()).map(|(i, _)| i).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn truncate(&self, horizon: usize) -> Result<Self> {
        if horizon > self.horizon() {
            return Err(Error::HorizonTooShort {
                horizon: self.horizon(),
                order: horizon,
            });
        }
        Ok(Self::new(self.entries[..horizon].to_vec()))
    }
}

impl Add for &ExponentSequence {
    type Output = ExponentSequence;
    fn add(self, rhs: Self) -> ExponentSequence {
        ExponentSequence::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Neg for &ExponentSequence {
    type Output = ExponentSequence;
    fn neg(self) -> ExponentSequence {
        ExponentSequence::new(self.entries.iter().map(|a| -a).collect())
    }
}

/// Multiplies `acc` in place by `(1 + (-x)^i)^a`, truncated at `acc`'s order.
///
/// Uses the generalized binomial series, which is exact for negative `a`
/// and needs only `order / i` terms regardless of `|a|`.
fn multiply_by_factor(acc: &mut [BigInt], i: usize, a: &BigInt) {
    if a.is_zero() {
        return;
    }
    let order = acc.len() - 1;
    let sign_flip = i % 2 == 1;
    // factor[k] = binom(a, k) * (-1)^(i k), coefficient of x^(i k)
    let mut factor = Vec::with_capacity(order / i + 1);
    let mut binom = BigInt::one();
    for k in 0..=order / i {
        if k > 0 {
            binom = binom * (a - BigInt::from(k - 1)) / BigInt::from(k);
            if binom.is_zero() {
                break;
            }
        }
        let term = if sign_flip && k % 2 == 1 { -&binom } else { binom.clone() };
        factor.push(term);
    }
    for e in (0..=order).rev() {
        let mut total = BigInt::zero();
        for (k, b) in factor.iter().enumerate() {
            let shift = k * i;
            if shift > e {
                break;
            }
            total += b * &acc[e - shift];
        }
        acc[e] = total;
    }
}

/// `Π_{i=1}^{order} (1 + (-x)^i)^{a_i}` through `x^order`.
pub fn exp_z(a: &ExponentSequence, order: usize) -> Result<TruncatedSeries<BigInt>> {
    if a.horizon() < order {
        return Err(Error::HorizonTooShort {
            horizon: a.horizon(),
            order,
        });
    }
    let mut acc = vec![BigInt::zero(); order + 1];
    acc[0] = BigInt::one();
    for (i, ai) in a.iter().take(order) {
        multiply_by_factor(&mut acc, i, ai);
    }
    Ok(TruncatedSeries::new(acc))
}

/// The unique `a` with `exp_z(a) = f` through `x^order`.
///
/// Triangular peeling: the coefficient of `x^i` in `exp_z(a)` is
/// `(-1)^i a_i` plus an integer polynomial in `a_1..a_{i-1}`, so each
/// `a_i` is read off once the earlier factors have been multiplied in.
pub fn log_z(f: &TruncatedSeries<BigInt>, order: usize) -> Result<ExponentSequence> {
    let f = f.truncate(order)?;
    if !f.coeffs()[0].is_one() {
        return Err(Error::NonUnitConstant {
            found: f.coeffs()[0].to_string(),
        });
    }
    let mut partial = vec![BigInt::zero(); order + 1];
    partial[0] = BigInt::one();
    let mut a = Vec::with_capacity(order);
    for i in 1..=order {
        let gap = &f.coeffs()[i] - &partial[i];
        let ai = if i % 2 == 1 { -gap } else { gap };
        multiply_by_factor(&mut partial, i, &ai);
        a.push(ai);
    }
    debug_assert_eq!(partial, f.coeffs(), "log_z peeling must reproduce its input");
    Ok(ExponentSequence::new(a))
}

/// The closed forms for the first four entries of `log_z(1 + a1 x + a2 x^2 + a3 x^3 + a4 x^4 + ...)`.
///
/// Evaluated over Q term by term as displayed and then checked to be integral.
pub fn closed_form_b(a: [&BigInt; 4]) -> Result<[BigInt; 4]> {
    let q = |n: &BigInt| BigRational::from_integer(n.clone());
    let frac = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let [a1, a2, a3, a4] = a.map(q);
    let half = frac(1, 2);

    let b1 = -a1.clone();
    let b2 = &a2 - &half * (&a1 + &a1 * &a1);
    let b3 = -a3.clone() + &a1 * &a2 + frac(1, 3) * (&a1 - &a1 * &a1 * &a1);
    let a1_sq = &a1 * &a1;
    let b4 = &a4 - &a1 * &a3 + &half * (&a2 - &a2 * &a2) + &a1_sq * &a2
        - frac(1, 4) * (frac(2, 1) * &a1 + &a1_sq + &a1_sq * &a1_sq);

    let to_int = |v: BigRational| -> Result<BigInt> {
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::NonIntegral { value: v.to_string() })
        }
    };
    Ok([to_int(b1)?, to_int(b2)?, to_int(b3)?, to_int(b4)?])
}

/// True when every entry is nonnegative.
pub(crate) fn all_nonnegative(a: &ExponentSequence) -> bool {
    a.entries.iter().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(c: &[i64]) -> TruncatedSeries<BigInt> {
        TruncatedSeries::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn single_factors() {
        assert_eq!(exp_z(&ExponentSequence::from_i64s(&[1, 0]), 2).unwrap(), series(&[1, -1, 0]));
        assert_eq!(exp_z(&ExponentSequence::from_i64s(&[0, 1, 0]), 3).unwrap(), series(&[1, 0, 1, 0]));
    }

    #[test]
    fn inverse_factor_is_geometric() {
        let g = exp_z(&ExponentSequence::from_i64s(&[-1, 0, 0, 0]), 4).unwrap();
        assert_eq!(g, series(&[1, 1, 1, 1, 1]));
        assert_eq!(&g * &series(&[1, -1, 0, 0, 0]), series(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn exp_needs_horizon() {
        assert_eq!(
            exp_z(&ExponentSequence::zeros(3), 5),
            Err(Error::HorizonTooShort { horizon: 3, order: 5 })
        );
    }

    #[test]
    fn log_of_one_plus_x_is_powers_of_two() {
        let mut f = vec![0i64; 65];
        f[0] = 1;
        f[1] = 1;
        let a = log_z(&series(&f), 64).unwrap();
        for (i, ai) in a.iter() {
            let expected = if i.is_power_of_two() { -1 } else { 0 };
            assert_eq!(*ai, big(expected), "a_{i}");
        }
    }

    #[test]
    fn log_of_single_factors() {
        assert_eq!(log_z(&series(&[1, -1, 0, 0, 0]), 4).unwrap(), ExponentSequence::from_i64s(&[1, 0, 0, 0]));
        assert_eq!(log_z(&series(&[1, 0, 1, 0, 0]), 4).unwrap(), ExponentSequence::from_i64s(&[0, 1, 0, 0]));
    }

    #[test]
    fn log_rejects_non_unit() {
        assert!(matches!(log_z(&series(&[2, 1]), 1), Err(Error::NonUnitConstant { .. })));
        assert!(matches!(log_z(&series(&[1, 1]), 4), Err(Error::BeyondOrder { .. })));
    }

    #[test]
    fn closed_forms() {
        let z = big(0);
        assert_eq!(closed_form_b([&big(1), &z, &z, &z]).unwrap(), [big(-1), big(-1), big(0), big(-1)]);
        assert_eq!(closed_form_b([&z, &z, &z, &z]).unwrap(), [big(0), big(0), big(0), big(0)]);
        let b = closed_form_b([&big(-1), &big(2), &big(1), &big(0)]).unwrap();
        assert_eq!(b[1], big(2));
    }

    #[test]
    fn huge_exponents_stay_cheap() {
        let a = ExponentSequence::from_i64s(&[1_000_000_007, -999_999_937, 0, 0, 0, 0]);
        let f = exp_z(&a, 6).unwrap();
        assert_eq!(log_z(&f, 6).unwrap(), a);
    }
}
