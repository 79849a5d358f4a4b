use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::{Coefficient, Polynomial};
use crate::error::{Error, Result};

/// Power series known exactly through `x^order`; higher coefficients are unknown.
///
/// Binary operations keep the smaller of the two orders, so a result never
/// claims more precision than its weakest operand.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncatedSeries<R> {
    // len == order + 1
    coeffs: Vec<R>,
}

/// Outcome of [`TruncatedSeries::sqrt_integer`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IntegerSqrt {
    /// The root with constant term `+1`, through the input's order.
    Integer(TruncatedSeries<BigInt>),
    /// First exponent at which the root coefficient is not an integer.
    NotInteger { exponent: usize },
}

impl<R: Coefficient> TruncatedSeries<R> {
    /// Series whose known coefficients are exactly `coeffs`; order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series knows at least its constant term");
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = R::one();
        s
    }

    /// The polynomial `p` viewed as a series known through `order`.
    pub fn from_polynomial(p: &Polynomial<R>, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, exp: usize) -> Result<&R> {
        self.coeffs.get(exp).ok_or(Error::BeyondOrder {
            exponent: exp,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// The known part as a polynomial.
    pub fn to_polynomial(&self) -> Polynomial<R> {
        Polynomial::new(self.coeffs.clone())
    }

    /// Forgets coefficients above `order`; asking for more precision is an error.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::BeyondOrder {
                exponent: order,
                order: self.order(),
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `f(x) -> f(-x)`; order unchanged.
    pub fn substitute_neg(&self) -> Self {
        self.map_indexed(|i, c| if i % 2 == 1 { -c.clone() } else { c.clone() })
    }

    /// `f(x) -> f(x^2)`, known through `2 * order + 1`.
    pub fn substitute_square(&self) -> Self {
        let order = 2 * self.order() + 1;
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        TruncatedSeries { coeffs }
    }

    fn map_indexed(&self, f: impl Fn(usize, &R) -> R) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().enumerate().map(|(i, c)| f(i, c)).collect(),
        }
    }

    fn require_unit_constant(&self) -> Result<()> {
        if self.coeffs[0].is_one() {
            Ok(())
        } else {
            Err(Error::NonUnitConstant {
                found: format!("{:?}", self.coeffs[0]),
            })
        }
    }
}

impl TruncatedSeries<BigRational> {
    /// Square root with constant term 1, via `2 g_n = f_n - Σ_{0<k<n} g_k g_{n-k}`.
    pub fn sqrt_rational(&self) -> Result<Self> {
        self.require_unit_constant()?;
        let two = BigRational::from_integer(BigInt::from(2));
        let mut g: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        g.push(BigRational::one());
        for n in 1..self.coeffs.len() {
            let mut rhs = self.coeffs[n].clone();
            for k in 1..n {
                rhs -= &g[k] * &g[n - k];
            }
            g.push(rhs / &two);
        }
        Ok(TruncatedSeries { coeffs: g })
    }
}

impl TruncatedSeries<BigInt> {
    /// Integer square root with constant term `+1`, or the first exponent
    /// where the recurrence's right-hand side is odd.
    pub fn sqrt_integer(&self) -> Result<IntegerSqrt> {
        self.require_unit_constant()?;
        let mut g: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        g.push(BigInt::one());
        for n in 1..self.coeffs.len() {
            let mut rhs = self.coeffs[n].clone();
            for k in 1..n {
                rhs -= &g[k] * &g[n - k];
            }
            if rhs.is_odd() {
                return Ok(IntegerSqrt::NotInteger { exponent: n });
            }
            g.push(rhs / 2);
        }
        Ok(IntegerSqrt::Integer(TruncatedSeries { coeffs: g }))
    }

    pub fn to_rational(&self) -> TruncatedSeries<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl<R: Coefficient> Add for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: Self) -> TruncatedSeries<R> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TruncatedSeries {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<R: Coefficient> Sub for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, rhs: Self) -> TruncatedSeries<R> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TruncatedSeries {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<R: Coefficient> Neg for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn neg(self) -> TruncatedSeries<R> {
        self.map(|c| -c.clone())
    }
}

impl<R: Coefficient> Mul for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: Self) -> TruncatedSeries<R> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }
}
