//! Conway ↔ Alexander conversion and the Z/4 form of the squareness test.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::invariants::ConwayPolynomial;
use crate::obstructions::{conjecture_test, ConjectureReport, SquareVerdict};
use crate::ring::{LaurentPolynomial, Polynomial, Z4};

/// `A(t) = a_0 + Σ_{i≥1} a_i (t^i + t^{-i})` with `A(1) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlexanderPolynomial {
    // coeffs[i] = a_i, no trailing zeros past a_0
    coeffs: Vec<BigInt>,
}

impl AlexanderPolynomial {
    /// From `a_0, a_1, ...`.
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let at_one = coeffs.iter().skip(1).fold(coeffs.first().cloned().unwrap_or_default(), |acc, a| acc + a * 2);
        if !at_one.is_one() {
            return Err(Error::BadNormalization {
                point: "t = 1",
                found: at_one.to_string(),
            });
        }
        Ok(AlexanderPolynomial { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_laurent(a: &LaurentPolynomial<BigInt>) -> Result<Self> {
        if !a.is_symmetric() {
            return Err(Error::Asymmetric);
        }
        let top = a.high().unwrap_or(0).max(0);
        Self::new((0..=top).map(|i| a.coeff(i)).collect())
    }

    pub fn to_laurent(&self) -> LaurentPolynomial<BigInt> {
        LaurentPolynomial::from_terms(self.coeffs.iter().enumerate().flat_map(|(i, a)| {
            let i = i as i64;
            let mirror = (i > 0).then(|| (-i, a.clone()));
            std::iter::once((i, a.clone())).chain(mirror)
        }))
    }

    /// `a_i`.
    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Largest `i` with `a_i ≠ 0`.
    pub fn span(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `A(-1)`.
    pub fn eval_minus_one(&self) -> BigInt {
        self.to_laurent().eval_minus_one()
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_laurent().display('t').fmt(f)
    }
}

/// `t - 2 + t^{-1}`, the image of `z^2`.
fn z_squared_image() -> LaurentPolynomial<BigInt> {
    LaurentPolynomial::from_i64s(-1, &[1, -2, 1])
}

/// Horner evaluation of `p` at a Laurent polynomial.
fn compose<R: crate::ring::Coefficient>(p: &Polynomial<R>, at: &LaurentPolynomial<R>) -> LaurentPolynomial<R> {
    p.coeffs().iter().rev().fold(LaurentPolynomial::zero(), |acc, c| {
        &(&acc * at) + &LaurentPolynomial::monomial(c.clone(), 0)
    })
}

/// Substitutes `z^2 = t - 2 + t^{-1}`.
pub fn conway_to_alexander(c: &ConwayPolynomial) -> AlexanderPolynomial {
    let laurent = compose(&c.x_polynomial(), &z_squared_image());
    AlexanderPolynomial::from_laurent(&laurent).expect("the substitution is symmetric and fixes C(0) = A(1)")
}

/// Inverts [`conway_to_alexander`]: `t^i + t^{-i}` is a polynomial `P_i` in
/// `y = z^2` with `P_0 = 2`, `P_1 = y + 2`, `P_{i+1} = (y + 2) P_i - P_{i-1}`.
pub fn alexander_to_conway(a: &AlexanderPolynomial) -> ConwayPolynomial {
    let u = Polynomial::from_i64s(&[2, 1]);
    let mut prev = Polynomial::from_i64s(&[2]);
    let mut cur = u.clone();
    let mut acc = Polynomial::constant(a.coefficient(0));
    for ai in a.coeffs.iter().skip(1) {
        acc = &acc + &cur.scale(ai);
        let next = &(&u * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    let c = ConwayPolynomial::from_x_polynomial(&acc).expect("A(1) = 1 gives C(0) = 1");
    debug_assert_eq!(conway_to_alexander(&c), *a);
    c
}

/// Sends a polynomial in `x = z^2` over Z/4 to `Z/4[t, t^{-1}]` through the
/// ring map `z^2 ↦ t + 2 + t^{-1}`.
///
/// Since `-2 ≡ 2 (mod 4)`, this agrees with reducing the exact substitution.
/// The monomial-wise rule `z^{2n} ↦ t^n + 2 + t^{-n}` coincides with it only
/// for `n = 1, 2, 4, 8`.
pub fn mod4_rule(c: &Polynomial<Z4>) -> LaurentPolynomial<Z4> {
    let image = LaurentPolynomial::new(-1, vec![Z4::new(1), Z4::new(2), Z4::new(1)]);
    compose(c, &image)
}

/// Squareness of `A(t) A(-t) A(t^2)` in `Z/4[t, t^{-1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderConjectureReport {
    pub conway: ConwayPolynomial,
    pub conway_report: ConjectureReport,
    /// `A(t) A(-t) A(t^2)` mod 4.
    pub product: LaurentPolynomial<Z4>,
    /// Image of the Conway-side witness; its square is `product`.
    pub witness: Option<LaurentPolynomial<Z4>>,
}

impl AlexanderConjectureReport {
    pub fn verdict(&self) -> &SquareVerdict {
        &self.conway_report.verdict
    }
}

/// Decides squareness on the Conway side and carries the witness across.
pub fn alexander_conjecture_form(a: &AlexanderPolynomial) -> Result<AlexanderConjectureReport> {
    let conway = alexander_to_conway(a);
    let conway_report = conjecture_test(&conway);
    let l = a.to_laurent().reduce::<4>();
    let product = &(&l * &l.substitute_neg()) * &l.substitute_square();

    let witness = match &conway_report.verdict {
        SquareVerdict::Square { witness } => {
            let w = mod4_rule(&witness.compress(2).expect("root of an even square is even"));
            if &w * &w != product {
                return Err(Error::WitnessMismatch(format!("({})^2 ≠ {}", w.display('t'), product.display('t'))));
            }
            Some(w)
        }
        SquareVerdict::NotSquare { .. } => None,
    };
    Ok(AlexanderConjectureReport {
        conway,
        conway_report,
        product,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conway(c: &[i64]) -> ConwayPolynomial {
        ConwayPolynomial::from_i64s(c).unwrap()
    }

    fn alex(c: &[i64]) -> AlexanderPolynomial {
        AlexanderPolynomial::from_i64s(c).unwrap()
    }

    fn z4_laurent(low: i64, c: &[i64]) -> LaurentPolynomial<Z4> {
        LaurentPolynomial::from_i64s(low, c).reduce::<4>()
    }

    #[test]
    fn conway_to_alexander_vectors() {
        assert_eq!(conway_to_alexander(&conway(&[1, -1])), alex(&[3, -1]));
        assert_eq!(conway_to_alexander(&ConwayPolynomial::unknot()), alex(&[1]));
        assert_eq!(conway_to_alexander(&conway(&[1, -4])), alex(&[9, -4]));
    }

    #[test]
    fn alexander_to_conway_vectors() {
        assert_eq!(alexander_to_conway(&alex(&[3, -1])), conway(&[1, -1]));
        assert_eq!(alexander_to_conway(&alex(&[1])), ConwayPolynomial::unknot());
        assert_eq!(alexander_to_conway(&alex(&[9, -4])), conway(&[1, -4]));
        // trefoil: 1 - t + t^2 centered
        assert_eq!(alexander_to_conway(&alex(&[-1, 1])), conway(&[1, 1]));
    }

    #[test]
    fn normalization_errors() {
        assert!(matches!(AlexanderPolynomial::from_i64s(&[1, 1]), Err(Error::BadNormalization { .. })));
        let lopsided = LaurentPolynomial::from_i64s(0, &[1, -1, 1]);
        assert_eq!(AlexanderPolynomial::from_laurent(&lopsided), Err(Error::Asymmetric));
        let fig8 = LaurentPolynomial::from_i64s(-1, &[-1, 3, -1]);
        assert_eq!(AlexanderPolynomial::from_laurent(&fig8), Ok(alex(&[3, -1])));
        assert_eq!(alex(&[3, -1]).to_laurent(), fig8);
    }

    #[test]
    fn display_reads_as_laurent() {
        assert_eq!(alex(&[3, -1]).to_string(), "-t^-1 + 3 - t");
    }

    #[test]
    fn mod4_rule_vectors() {
        let x = Polynomial::from_i64s(&[0, 1]).reduce::<4>();
        assert_eq!(mod4_rule(&x), z4_laurent(-1, &[1, 2, 1]));
        let fig8 = Polynomial::from_i64s(&[1, -1]).reduce::<4>();
        assert_eq!(mod4_rule(&fig8), z4_laurent(-1, &[3, 3, 3]));
        assert_eq!(mod4_rule(&Polynomial::one()), LaurentPolynomial::one());
    }

    #[test]
    fn literal_rule_holds_only_at_small_powers_of_two() {
        let holds: Vec<usize> = (0..=16)
            .filter(|&n| {
                let xn = Polynomial::monomial(Z4::new(1), n);
                let literal = LaurentPolynomial::from_terms([(n as i64, Z4::new(1)), (-(n as i64), Z4::new(1)), (0, Z4::new(2))]);
                mod4_rule(&xn) == literal
            })
            .collect();
        assert_eq!(holds, vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn determinant_is_value_at_minus_one() {
        let a = conway_to_alexander(&conway(&[1, -76]));
        assert_eq!(a.eval_minus_one(), BigInt::from(305));
    }

    #[test]
    fn conjecture_form_vectors() {
        let fig8 = alexander_conjecture_form(&alex(&[3, -1])).unwrap();
        assert!(fig8.verdict().is_square());
        assert!(fig8.witness.is_some());

        let nine_47 = conway_to_alexander(&conway(&[1, -1, 2, 1]));
        let report = alexander_conjecture_form(&nine_47).unwrap();
        assert_eq!(report.verdict(), &SquareVerdict::NotSquare { failure_exponent: 24 });
        assert_eq!(report.witness, None);

        let unknot = alexander_conjecture_form(&alex(&[1])).unwrap();
        assert_eq!(unknot.witness, Some(LaurentPolynomial::one()));
    }
}
