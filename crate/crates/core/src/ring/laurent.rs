use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{write_terms, Coefficient, Zmod};

/// Laurent polynomial `Σ coeffs[k] t^(low + k)`.
///
/// Both boundary coefficients are nonzero; the zero polynomial has no
/// coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial<R> {
    low: i64,
    coeffs: Vec<R>,
}

impl<R: Coefficient> LaurentPolynomial<R> {
    pub fn new(low: i64, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead_zeros);
        let low = if coeffs.is_empty() { 0 } else { low + lead_zeros as i64 };
        LaurentPolynomial { low, coeffs }
    }

    pub fn zero() -> Self {
        LaurentPolynomial { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(0, vec![R::one()])
    }

    pub fn monomial(c: R, exp: i64) -> Self {
        Self::new(exp, vec![c])
    }

    /// Sums `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (i64, R)>>(terms: I) -> Self {
        let terms: Vec<(i64, R)> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap_or(low);
        let mut coeffs = vec![R::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            let k = (e - low) as usize;
            coeffs[k] = coeffs[k].clone() + c;
        }
        Self::new(low, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> R {
        let k = exp - self.low;
        if k < 0 {
            return R::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(R::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> LaurentPolynomial<S> {
        LaurentPolynomial::new(self.low, self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `A(t) -> A(-t)`.
    pub fn substitute_neg(&self) -> Self {
        Self::from_terms(
            self.terms()
                .map(|(e, c)| (e, if e.rem_euclid(2) == 1 { -c.clone() } else { c.clone() })),
        )
    }

    /// `A(t) -> A(t^2)`.
    pub fn substitute_square(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (2 * e, c.clone())))
    }

    /// `A(t) -> A(1/t)`.
    pub fn reflect(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reflect()
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> R {
        self.coeffs.iter().cloned().fold(R::zero(), |a, b| a + b)
    }

    /// Value at `t = -1`.
    pub fn eval_minus_one(&self) -> R {
        self.substitute_neg().eval_one()
    }

    pub fn display(&self, var: char) -> LaurentDisplay<'_, R> {
        LaurentDisplay { poly: self, var }
    }
}

impl LaurentPolynomial<BigInt> {
    pub fn reduce<const M: u8>(&self) -> LaurentPolynomial<Zmod<M>> {
        self.map(Zmod::<M>::from_bigint)
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl<R: Coefficient> Default for LaurentPolynomial<R> {
    fn default() -> Self {
        Self::zero()
    }
}

pub struct LaurentDisplay<'a, R> {
    poly: &'a LaurentPolynomial<R>,
    var: char,
}

impl<R: Coefficient> fmt::Display for LaurentDisplay<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.poly.terms(), self.var)
    }
}

impl<R: Coefficient> fmt::Display for LaurentPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display('t'), f)
    }
}

impl<R: Coefficient> fmt::Debug for LaurentPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self.display('t'))
    }
}

impl<R: Coefficient> Add for &LaurentPolynomial<R> {
    type Output = LaurentPolynomial<R>;
    fn add(self, rhs: Self) -> LaurentPolynomial<R> {
        LaurentPolynomial::from_terms(
            self.terms()
                .chain(rhs.terms())
                .map(|(e, c)| (e, c.clone())),
        )
    }
}

impl<R: Coefficient> Sub for &LaurentPolynomial<R> {
    type Output = LaurentPolynomial<R>;
    fn sub(self, rhs: Self) -> LaurentPolynomial<R> {
        self + &(-rhs)
    }
}

impl<R: Coefficient> Neg for &LaurentPolynomial<R> {
    type Output = LaurentPolynomial<R>;
    fn neg(self) -> LaurentPolynomial<R> {
        self.map(|c| -c.clone())
    }
}

impl<R: Coefficient> Mul for &LaurentPolynomial<R> {
    type Output = LaurentPolynomial<R>;
    fn mul(self, rhs: Self) -> LaurentPolynomial<R> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        LaurentPolynomial::new(self.low + rhs.low, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type L = LaurentPolynomial<BigInt>;

    #[test]
    fn normalizes_boundaries() {
        let a = L::from_i64s(-3, &[0, 0, 1, 2, 0]);
        assert_eq!(a.low(), Some(-1));
        assert_eq!(a.high(), Some(0));
        assert_eq!(L::from_i64s(5, &[0, 0]), L::zero());
    }

    #[test]
    fn symmetric_and_evaluation() {
        // 3 - t - t^-1
        let a = L::from_i64s(-1, &[-1, 3, -1]);
        assert!(a.is_symmetric());
        assert_eq!(a.eval_one(), BigInt::from(1));
        assert_eq!(a.eval_minus_one(), BigInt::from(5));
        assert!(!L::from_i64s(0, &[1, 1]).is_symmetric());
    }

    #[test]
    fn product_and_substitutions() {
        let a = L::from_i64s(-1, &[1, 0, 1]);
        assert_eq!(&a * &a, L::from_i64s(-2, &[1, 0, 2, 0, 1]));
        assert_eq!(a.substitute_neg(), L::from_i64s(-1, &[-1, 0, -1]));
        assert_eq!(a.substitute_square(), L::from_i64s(-2, &[1, 0, 0, 0, 1]));
    }

    #[test]
    fn display_negative_exponents() {
        assert_eq!(L::from_i64s(-1, &[-1, 3, -1]).to_string(), "-t^-1 + 3 - t");
    }
}
