//! Exact coefficient rings (Z, Z/2, Z/4, Q) and the dense polynomial,
//! Laurent polynomial and truncated power series types built on them.

use std::fmt;
use std::ops::{Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

mod laurent;
mod poly;
mod series;
mod zmod;

pub use laurent::LaurentPolynomial;
pub use poly::Polynomial;
pub use series::{IntegerSqrt, TruncatedSeries};
pub use zmod::{Zmod, Z2, Z4};

/// Coefficient ring for polynomials and series.
///
/// Implemented for `BigInt` (Z), `BigRational` (Q) and `Zmod<M>` (Z/M).
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    /// The unique `q` with `q * rhs == self`, if the ring provides one.
    ///
    /// For `Zmod` this only succeeds for unit divisors.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// Sign flag and magnitude text, used for printing `a - b` instead of `a + -b`.
    fn sign_and_magnitude(&self) -> (bool, String);
}

impl Coefficient for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn sign_and_magnitude(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

impl Coefficient for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }

    fn sign_and_magnitude(&self) -> (bool, String) {
        let mag = self.abs();
        let text = if mag.is_integer() {
            mag.numer().to_string()
        } else {
            format!("({}/{})", mag.numer(), mag.denom())
        };
        (self.is_negative(), text)
    }
}

impl<const M: u8> Coefficient for Zmod<M> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| *self * inv)
    }

    fn sign_and_magnitude(&self) -> (bool, String) {
        (false, self.value().to_string())
    }
}

/// Writes `terms` (ascending exponent, nonzero coefficients) as `1 - z^2 + 2z^4`.
pub(crate) fn write_terms<'a, R, I>(f: &mut fmt::Formatter<'_>, terms: I, var: char) -> fmt::Result
where
    R: Coefficient + 'a,
    I: IntoIterator<Item = (i64, &'a R)>,
{
    let mut first = true;
    for (exp, c) in terms {
        let (negative, magnitude) = c.sign_and_magnitude();
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if exp == 0 {
            f.write_str(&magnitude)?;
            continue;
        }
        if magnitude != "1" {
            f.write_str(&magnitude)?;
        }
        if exp == 1 {
            write!(f, "{var}")?;
        } else {
            write!(f, "{var}^{exp}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
