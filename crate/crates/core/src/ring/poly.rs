use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{write_terms, Coefficient, Zmod};
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// The last stored coefficient is always nonzero, so the zero polynomial
/// has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Coefficient> Polynomial<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: R, exp: usize) -> Self {
        let mut coeffs = vec![R::zero(); exp + 1];
        coeffs[exp] = c;
        Self::new(coeffs)
    }

    /// Sums `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (usize, R)>>(terms: I) -> Self {
        let mut coeffs: Vec<R> = Vec::new();
        for (exp, c) in terms {
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, R::zero());
            }
            coeffs[exp] = coeffs[exp].clone() + c;
        }
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, exp: usize) -> R {
        self.coeffs.get(exp).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &R)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `p(x) -> p(-x)`.
    pub fn substitute_neg(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `p(x) -> p(x^2)`.
    pub fn substitute_square(&self) -> Self {
        self.substitute_power(2)
    }

    /// `p(x) -> p(x^k)` for `k >= 1`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution power must be positive");
        Self::from_terms(self.terms().map(|(i, c)| (i * k, c.clone())))
    }

    /// Inverse of [`substitute_power`](Self::substitute_power): `None` when
    /// some exponent is not a multiple of `k`.
    pub fn compress(&self, k: usize) -> Option<Self> {
        if self.terms().any(|(i, _)| i % k != 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(i, c)| (i / k, c.clone()))))
    }

    /// True when only even powers occur.
    pub fn is_even(&self) -> bool {
        self.terms().all(|(i, _)| i % 2 == 0)
    }

    /// Long division that must come out exact.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::DivisionRemainder)
        }
    }

    /// Long division where every leading-coefficient quotient is exact in `R`.
    ///
    /// Over Z this fails with [`Error::DivisionRemainder`] as soon as a
    /// leading coefficient does not divide, since no integral quotient
    /// can exist in that case.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![R::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(lead).ok_or(Error::DivisionRemainder)?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * d.clone();
            }
            quot[k] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl Polynomial<BigInt> {
    /// Coefficientwise reduction into Z/M.
    pub fn reduce<const M: u8>(&self) -> Polynomial<Zmod<M>> {
        self.map(Zmod::<M>::from_bigint)
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        let mut g = self.content();
        if g.is_zero() {
            return Self::zero();
        }
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        self.map(|c| c / &g)
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl<const M: u8> Polynomial<Zmod<M>> {
    /// Integer polynomial with coefficients in `0..M`.
    pub fn lift(&self) -> Polynomial<BigInt> {
        self.map(|c| c.to_bigint())
    }
}

impl<R: Coefficient> Default for Polynomial<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Coefficient> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.display('x'))
    }
}

impl<R: Coefficient> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display('x'), f)
    }
}

/// Display adaptor with a chosen variable name.
pub struct PolyDisplay<'a, R> {
    poly: &'a Polynomial<R>,
    var: char,
}

impl<R: Coefficient> Polynomial<R> {
    pub fn display(&self, var: char) -> PolyDisplay<'_, R> {
        PolyDisplay { poly: self, var }
    }
}

impl<R: Coefficient> fmt::Display for PolyDisplay<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.poly.terms().map(|(i, c)| (i as i64, c)), self.var)
    }
}

impl<R: Coefficient> Add for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn add(self, rhs: Self) -> Polynomial<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<R: Coefficient> Sub for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn sub(self, rhs: Self) -> Polynomial<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<R: Coefficient> Mul for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn mul(self, rhs: Self) -> Polynomial<R> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<R: Coefficient> Neg for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn neg(self) -> Polynomial<R> {
        self.map(|c| -c.clone())
    }
}

macro_rules! forward_owned {
    ($imp:ident, $method:ident) => {
        impl<R: Coefficient> $imp for Polynomial<R> {
            type Output = Polynomial<R>;
            fn $method(self, rhs: Self) -> Polynomial<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Coefficient> Neg for Polynomial<R> {
    type Output = Polynomial<R>;
    fn neg(self) -> Polynomial<R> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Z4;

    fn p(c: &[i64]) -> Polynomial<BigInt> {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 0, -1]) * &p(&[1, 0, 1]), p(&[1, 0, 0, 0, -1]));
    }

    #[test]
    fn exact_division_inverts_product() {
        assert_eq!(p(&[1, 0, 0, 0, -1]).checked_div(&p(&[1, 0, 1])), Ok(p(&[1, 0, -1])));
    }

    #[test]
    fn nine_47_not_divisible_by_one_plus_z() {
        let c = p(&[1, 0, -1, 0, 2, 0, 1]);
        assert_eq!(c.checked_div(&p(&[1, 1])), Err(Error::DivisionRemainder));
        let (q, r) = c.div_rem(&p(&[1, 1])).unwrap();
        // C(-1) = 3
        assert_eq!(r, p(&[3]));
        assert_eq!(&(&q * &p(&[1, 1])) + &r, c);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(p(&[1]).checked_div(&Polynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn integer_division_needs_dividing_leading_coefficient() {
        assert_eq!(p(&[1, 1]).checked_div(&p(&[1, 2])), Err(Error::DivisionRemainder));
    }

    #[test]
    fn substitutions() {
        assert_eq!(p(&[1, 1]).substitute_neg(), p(&[1, -1]));
        assert_eq!(p(&[1, -1, 2, 1]).substitute_neg(), p(&[1, 1, 2, -1]));
        assert_eq!(p(&[1, -1]).substitute_square(), p(&[1, 0, -1]));
        assert_eq!(p(&[1, -1, 2, 1]).substitute_square(), p(&[1, 0, -1, 0, 2, 0, 1]));
        assert!(Polynomial::<BigInt>::zero().substitute_square().is_zero());
        assert_eq!(p(&[1, 0, -1, 0, 2]).compress(2), Some(p(&[1, -1, 2])));
        assert_eq!(p(&[1, 1]).compress(2), None);
    }

    #[test]
    fn reduce_mod_four() {
        let mut c = vec![0i64; 25];
        c[0] = 1;
        c[4] = 2;
        c[8] = 1;
        c[24] = -1;
        let r = p(&c).reduce::<4>();
        assert_eq!(r.coeff(24), Z4::new(3));
        assert_eq!(r.coeff(4), Z4::new(2));
        assert_eq!(p(&[-2]).reduce::<4>(), Polynomial::constant(Z4::new(2)));
        let sq = p(&[1, 0, 0, 0, -1]).pow(2);
        assert_eq!(sq.reduce::<4>(), p(&[1, 0, 0, 0, 2, 0, 0, 0, 1]).reduce::<4>());
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[1, 0, -1, 0, 2, 0, 1]).display('z').to_string(), "1 - z^2 + 2z^4 + z^6");
        assert_eq!(p(&[0, -1]).display('z').to_string(), "-z");
        assert_eq!(Polynomial::<BigInt>::zero().to_string(), "0");
    }

    #[test]
    fn primitive_part_has_positive_lead() {
        assert_eq!(p(&[2, 0, -4]).primitive_part(), p(&[-1, 0, 2]));
        assert_eq!(p(&[6, 4]).content(), BigInt::from(2));
    }
}
