//! Decision procedures for the two headline obstructions:
//!
//! * whether `C(z) C(iz) C(z^2)` is a square in `Z/4[z]`, and
//! * whether `C(z) = φ(z) φ(-z)` for an integer polynomial `φ`.

mod factor;
mod gf;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use factor::{canonical_cmp, factor_integer_poly, Factorization};

use crate::error::{Error, Result};
use crate::formal_log::{all_nonnegative, ExponentSequence};
use crate::invariants::{parity, pc, ConwayPolynomial};
use crate::ring::{IntegerSqrt, Polynomial, TruncatedSeries, Z4};

/// Outcome of a squareness test over Z/4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquareVerdict {
    /// `witness^2` equals the tested polynomial mod 4.
    Square { witness: Polynomial<Z4> },
    /// Smallest `e` such that the polynomial is not a square modulo `(4, x^(e+1))`.
    NotSquare { failure_exponent: usize },
}

impl SquareVerdict {
    pub fn is_square(&self) -> bool {
        matches!(self, SquareVerdict::Square { .. })
    }
}

/// `f(x) f(-x) f(x^2)`.
pub fn triple_product_of(f: &Polynomial<BigInt>) -> Polynomial<BigInt> {
    &(f * &f.substitute_neg()) * &f.substitute_square()
}

/// `C(z) C(iz) C(z^2)` as an integer polynomial in `z`.
///
/// With `f` the coefficient sequence of `C` in `x = z^2`, `C(iz)` is
/// `f(-x)` and `C(z^2)` is `f(x^2)`.
pub fn triple_product(c: &ConwayPolynomial) -> Polynomial<BigInt> {
    triple_product_of(&c.x_polynomial()).substitute_square()
}

/// Decides whether `p` is the square of a polynomial over Z/4.
///
/// Any square root `F` reduces mod 2 to the unique `H` with `H(x)^2 = H(x^2) ≡ p`,
/// and `(H + 2E)^2 ≡ H^2 (mod 4)`, so lifting `H` with 0/1 coefficients and
/// squaring settles the question.
pub fn square_test_z4(p: &Polynomial<Z4>) -> Result<SquareVerdict> {
    let c0 = p.coeff(0).value();
    if c0 % 2 == 0 {
        return Err(Error::NonUnitConstant { found: c0.to_string() });
    }
    if c0 == 3 {
        return Ok(SquareVerdict::NotSquare { failure_exponent: 0 });
    }
    let odd_failure = p
        .terms()
        .find(|(i, c)| i % 2 == 1 && c.value() % 2 == 1)
        .map(|(i, _)| i);

    let deg = p.degree().expect("constant term is nonzero");
    let root = Polynomial::new(
        (0..=deg / 2)
            .map(|k| Z4::new(p.coeff(2 * k).value() % 2))
            .collect(),
    );
    let square = &root * &root;
    let top = deg.max(square.degree().unwrap_or(0));
    // a mismatch at j only becomes visible once x^(2j) pins down h_j
    let lift_failure = (0..=top).find(|&j| square.coeff(j) != p.coeff(j)).map(|j| 2 * j);

    Ok(match (odd_failure, lift_failure) {
        (None, None) => SquareVerdict::Square { witness: root },
        (a, b) => SquareVerdict::NotSquare {
            failure_exponent: a.into_iter().chain(b).min().expect("one failure"),
        },
    })
}

/// `pc_{4i} mod 2`, listed by the degree `4i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcParity {
    pub degree: usize,
    pub parity: u8,
}

/// Result of testing `C(z) C(iz) C(z^2)` for squareness over Z/4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    /// The exact triple product, in `z`.
    pub product: Polynomial<BigInt>,
    pub verdict: SquareVerdict,
    /// For `4i` up to half the product's degree, and at least up to the
    /// failure exponent's half when not a square.
    pub pc_parities: Vec<PcParity>,
    /// Parities agree with the verdict: all even when square; otherwise the
    /// first odd `pc_{4i}` sits at `z^(8i)`, the failure exponent.
    pub consistent: bool,
}

pub fn conjecture_test(c: &ConwayPolynomial) -> ConjectureReport {
    let product = triple_product(c);
    let verdict = square_test_z4(&product.reduce::<4>()).expect("triple product has constant term 1");
    if let SquareVerdict::Square { witness } = &verdict {
        assert!(witness.is_even(), "root of an even square lies in Z/4[z^2]");
    }

    let deg = product.degree().unwrap_or(0);
    let reach = match &verdict {
        SquareVerdict::Square { .. } => deg / 2,
        SquareVerdict::NotSquare { failure_exponent } => (deg / 2).max(failure_exponent / 2),
    };
    let count = reach / 4;
    let seq = pc(c, 2 * count);
    let pc_parities: Vec<PcParity> = (1..=count)
        .map(|i| PcParity {
            degree: 4 * i,
            parity: parity(seq.get(2 * i).expect("within horizon")),
        })
        .collect();

    let first_odd = pc_parities.iter().find(|p| p.parity == 1).map(|p| p.degree);
    let consistent = match &verdict {
        SquareVerdict::Square { .. } => first_odd.is_none(),
        SquareVerdict::NotSquare { failure_exponent } => first_odd.map(|d| 2 * d) == Some(*failure_exponent),
    };

    ConjectureReport {
        product,
        verdict,
        pc_parities,
        consistent,
    }
}

/// `Π (1 + (-x)^i)^{a_i}` for nonnegative exponents.
pub fn build_from_exponents(a: &ExponentSequence) -> Result<Polynomial<BigInt>> {
    if !all_nonnegative(a) {
        let (index, value) = a.iter().find(|(_, v)| v.is_negative()).expect("negative entry");
        return Err(Error::NegativeExponent {
            index,
            value: value.to_string(),
        });
    }
    let mut out = Polynomial::one();
    for (i, ai) in a.iter().filter(|(_, v)| !v.is_zero()) {
        let sign = if i % 2 == 1 { -1 } else { 1 };
        let factor = &Polynomial::one() + &Polynomial::monomial(BigInt::from(sign), i);
        let power: u32 = ai.try_into().expect("exponent fits in u32");
        out = &out * &factor.pow(power);
    }
    Ok(out)
}

/// Outcome of the search for `C(z) = φ(z) φ(-z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HkVerdict {
    Factored {
        /// `φ(0) = 1`.
        phi: Polynomial<BigInt>,
        /// `ψ` in `x = z^2` with `C(z) = ψ(z^2)^2`, when that stronger form holds.
        psi: Option<Polynomial<BigInt>>,
    },
    NotFactorable,
}

impl HkVerdict {
    pub fn is_factored(&self) -> bool {
        matches!(self, HkVerdict::Factored { .. })
    }

    pub fn strongly_positive(&self) -> bool {
        matches!(self, HkVerdict::Factored { psi: Some(_), .. })
    }
}

/// Searches for `C(z) = φ(z) φ(-z)` by factoring `C` and stripping each
/// irreducible `α(z)` together with `α(-z)`.
///
/// Unique factorization makes the pairing forced: `α` and `α(-z)` must occur
/// with equal multiplicity, and an `α` with `α(-z) = α` must occur an even
/// number of times. `φ` takes, from each pair, the member that is larger in
/// canonical order.
pub fn hk_factorization(c: &ConwayPolynomial) -> HkVerdict {
    let zpoly = c.z_polynomial();
    let fac = factor_integer_poly(&zpoly).expect("Conway polynomials are nonzero");
    debug_assert!(fac.content.abs().is_one());

    let mut pool: Vec<Polynomial<BigInt>> = fac.factors.iter().map(unit_constant).collect();
    pool.sort_by(canonical_cmp);

    let mut phi = Polynomial::one();
    while !pool.is_empty() {
        let alpha = pool.remove(0);
        let mirror = unit_constant(&alpha.substitute_neg());
        let Some(pos) = pool.iter().position(|g| *g == mirror) else {
            return HkVerdict::NotFactorable;
        };
        pool.remove(pos);
        let chosen = if canonical_cmp(&alpha, &mirror).is_ge() { alpha } else { mirror };
        phi = &phi * &chosen;
    }
    assert_eq!(&phi * &phi.substitute_neg(), zpoly, "φ(z)φ(-z) must reproduce C");

    HkVerdict::Factored {
        phi,
        psi: square_of_even(&zpoly),
    }
}

/// Scales a factor with `α(0) = ±1` to `α(0) = 1`.
fn unit_constant(alpha: &Polynomial<BigInt>) -> Polynomial<BigInt> {
    if alpha.coeff(0).is_negative() {
        -alpha
    } else {
        alpha.clone()
    }
}

/// `ψ` (in `x = z^2`) with `C(z) = ψ(z^2)^2`, via the integer series square root.
fn square_of_even(zpoly: &Polynomial<BigInt>) -> Option<Polynomial<BigInt>> {
    let deg = zpoly.degree().unwrap_or(0);
    let IntegerSqrt::Integer(root) = TruncatedSeries::from_polynomial(zpoly, deg).sqrt_integer().ok()? else {
        return None;
    };
    let root = root.to_polynomial();
    let is_poly = root.degree().unwrap_or(0) <= deg / 2;
    (is_poly && root.is_even() && &root * &root == *zpoly).then(|| root.compress(2).expect("even"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conway(c: &[i64]) -> ConwayPolynomial {
        ConwayPolynomial::from_i64s(c).unwrap()
    }

    fn p(c: &[i64]) -> Polynomial<BigInt> {
        Polynomial::from_i64s(c)
    }

    fn z4(c: &[i64]) -> Polynomial<Z4> {
        p(c).reduce::<4>()
    }

    fn sparse(terms: &[(usize, i64)]) -> Vec<i64> {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut c = vec![0; deg + 1];
        for &(e, v) in terms {
            c[e] += v;
        }
        c
    }

    #[test]
    fn triple_product_of_nine_47() {
        let prod = triple_product(&conway(&[1, -1, 2, 1]));
        assert_eq!(prod, p(&sparse(&[(0, 1), (4, 2), (8, 5), (16, 16), (20, 4), (24, -1)])));
        assert_eq!(prod.reduce::<4>(), z4(&sparse(&[(0, 1), (4, 2), (8, 1), (24, 3)])));
    }

    #[test]
    fn triple_product_small_cases() {
        assert_eq!(triple_product(&ConwayPolynomial::unknot()), p(&[1]));
        let fig8 = triple_product(&conway(&[1, -1]));
        assert_eq!(fig8, p(&[1, 0, 0, 0, -1]).pow(2));
    }

    #[test]
    fn square_test_vectors() {
        let nine_47 = z4(&sparse(&[(0, 1), (4, 2), (8, 1), (24, -1)]));
        assert_eq!(square_test_z4(&nine_47), Ok(SquareVerdict::NotSquare { failure_exponent: 24 }));

        let fig8 = p(&[1, 0, 0, 0, -1]).pow(2).reduce::<4>();
        assert_eq!(square_test_z4(&fig8), Ok(SquareVerdict::Square { witness: z4(&[1, 0, 0, 0, 1]) }));

        assert_eq!(square_test_z4(&z4(&[1])), Ok(SquareVerdict::Square { witness: z4(&[1]) }));
    }

    #[test]
    fn square_test_edge_cases() {
        assert!(matches!(square_test_z4(&z4(&[2, 1])), Err(Error::NonUnitConstant { .. })));
        assert!(matches!(square_test_z4(&Polynomial::zero()), Err(Error::NonUnitConstant { .. })));
        assert_eq!(square_test_z4(&z4(&[3])), Ok(SquareVerdict::NotSquare { failure_exponent: 0 }));
        assert_eq!(square_test_z4(&z4(&[1, 1])), Ok(SquareVerdict::NotSquare { failure_exponent: 1 }));
        // 1 + 2x is a square mod (4, x^2) but not mod (4, x^3): h_1 must be odd then
        assert_eq!(square_test_z4(&z4(&[1, 2])), Ok(SquareVerdict::NotSquare { failure_exponent: 2 }));
        // 1 + 2x + x^2 = (1 + x)^2
        assert_eq!(square_test_z4(&z4(&[1, 2, 1])), Ok(SquareVerdict::Square { witness: z4(&[1, 1]) }));
    }

    #[test]
    fn conjecture_on_paper_knots() {
        let report = conjecture_test(&conway(&[1, -1, 2, 1]));
        assert_eq!(report.verdict, SquareVerdict::NotSquare { failure_exponent: 24 });
        assert_eq!(report.pc_parities.iter().map(|p| p.parity).collect::<Vec<_>>(), vec![0, 0, 1]);
        assert!(report.consistent);

        assert!(conjecture_test(&conway(&[1, -76])).verdict.is_square());
        let fig8 = conjecture_test(&conway(&[1, -1]));
        assert!(fig8.verdict.is_square());
        assert!(fig8.consistent);
    }

    #[test]
    fn build_from_exponent_sequences() {
        let seq = |c: &[i64]| ExponentSequence::from_i64s(c);
        assert_eq!(build_from_exponents(&seq(&[1])), Ok(p(&[1, -1])));
        assert_eq!(build_from_exponents(&seq(&[0, 2])), Ok(p(&[1, 0, 1]).pow(2)));
        assert_eq!(build_from_exponents(&seq(&[1, 0, 1])), Ok(&p(&[1, -1]) * &p(&[1, 0, 0, -1])));
        assert!(matches!(build_from_exponents(&seq(&[1, -1])), Err(Error::NegativeExponent { index: 2, .. })));
    }

    #[test]
    fn hk_vectors() {
        assert_eq!(hk_factorization(&conway(&[1, -1])), HkVerdict::Factored { phi: p(&[1, 1]), psi: None });
        assert_eq!(hk_factorization(&conway(&[1, -4])), HkVerdict::Factored { phi: p(&[1, 2]), psi: None });
        assert_eq!(hk_factorization(&conway(&[1, -76])), HkVerdict::NotFactorable);
        assert_eq!(hk_factorization(&conway(&[1, -1, 2, 1])), HkVerdict::NotFactorable);
    }

    #[test]
    fn hk_strongly_positive_form() {
        // C = (1 + z^2)^2 = ψ(z^2)^2 with ψ = 1 + x
        let verdict = hk_factorization(&conway(&[1, 2, 1]));
        assert_eq!(verdict, HkVerdict::Factored { phi: p(&[1, 0, 1]), psi: Some(p(&[1, 1])) });
        assert!(verdict.strongly_positive());
        let unknot = hk_factorization(&ConwayPolynomial::unknot());
        assert_eq!(unknot, HkVerdict::Factored { phi: p(&[1]), psi: Some(p(&[1])) });
    }
}
