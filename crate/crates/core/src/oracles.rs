//! Slow, independent reference implementations for cross-checking the fast
//! paths. They work on plain vectors and share no arithmetic with the ring
//! types beyond `BigInt`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::formal_log::ExponentSequence;
use crate::obstructions::SquareVerdict;
use crate::ring::{Polynomial, TruncatedSeries, Z4};

/// Candidate root coefficients explored by [`brute_square_z4`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Coefficients in `{0, 1}`. Complete because `(H + 2E)^2 ≡ H^2 (mod 4)`.
    Binary,
    /// Coefficients in `{0, 1, 2, 3}`, every candidate squared in full.
    /// Only for `max_deg <= 8`.
    Paranoid,
}

/// Node budget for the binary search.
pub const SEARCH_BUDGET: u64 = 1 << 22;

const PARANOID_MAX_DEG: usize = 8;

/// Searches for `H` of degree at most `max_deg` with `H^2 = P` over Z/4.
///
/// In binary mode the coefficients of `H` are fixed one at a time and a
/// branch is abandoned as soon as the coefficient of `x^k` in `H^2`, which
/// depends only on `h_0..h_k`, disagrees with `P`. The reported failure
/// exponent is the first `k` that no branch gets past.
pub fn brute_square_z4(p: &Polynomial<Z4>, max_deg: usize, mode: SearchMode) -> Result<SquareVerdict> {
    let target: Vec<u8> = p.coeffs().iter().map(|c| c.value()).collect();
    if target.len() > 2 * max_deg + 1 {
        return Err(Error::BudgetExceeded(format!(
            "degree {} exceeds twice the root bound {max_deg}",
            target.len() - 1
        )));
    }
    let found = match mode {
        SearchMode::Binary => {
            let mut search = Dfs {
                target: &target,
                max_deg,
                root: Vec::with_capacity(2 * max_deg + 1),
                deepest: 0,
                nodes: 0,
            };
            let found = search.descend()?;
            if !found {
                return Ok(SquareVerdict::NotSquare {
                    failure_exponent: search.deepest,
                });
            }
            search.root
        }
        SearchMode::Paranoid => match enumerate_all(&target, max_deg)? {
            Some(root) => root,
            None => {
                let failure_exponent = deepest_prefix(&target, max_deg);
                return Ok(SquareVerdict::NotSquare { failure_exponent });
            }
        },
    };
    let witness = Polynomial::new(found.into_iter().map(Z4::new).collect());
    Ok(SquareVerdict::Square { witness })
}

struct Dfs<'a> {
    target: &'a [u8],
    max_deg: usize,
    root: Vec<u8>,
    deepest: usize,
    nodes: u64,
}

impl Dfs<'_> {
    fn coeff_of_square(&self, k: usize) -> u8 {
        let mut total = 0u32;
        for i in 0..=k {
            let (a, b) = (self.root.get(i), self.root.get(k - i));
            if let (Some(&a), Some(&b)) = (a, b) {
                total += a as u32 * b as u32;
            }
        }
        (total % 4) as u8
    }

    /// Extends `root` by one coefficient; true once every coefficient of
    /// `H^2` through `x^{2 max_deg}` matches.
    fn descend(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > SEARCH_BUDGET {
            return Err(Error::BudgetExceeded(format!("{SEARCH_BUDGET} search nodes")));
        }
        let k = self.root.len();
        if k > 2 * self.max_deg {
            while self.root.last() == Some(&0) {
                self.root.pop();
            }
            return Ok(true);
        }
        let choices: &[u8] = if k > self.max_deg { &[0] } else { &[0, 1] };
        for &h in choices {
            self.root.push(h);
            let want = self.target.get(k).copied().unwrap_or(0);
            if self.coeff_of_square(k) == want {
                self.deepest = self.deepest.max(k + 1);
                if self.descend()? {
                    return Ok(true);
                }
            }
            self.root.pop();
        }
        Ok(false)
    }
}

fn square_mod4(h: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; 2 * h.len() - 1];
    for (i, &a) in h.iter().enumerate() {
        for (j, &b) in h.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % 4;
        }
    }
    out
}

fn matches_through(square: &[u8], target: &[u8], upto: usize) -> bool {
    (0..=upto).all(|k| square.get(k).copied().unwrap_or(0) == target.get(k).copied().unwrap_or(0))
}

fn enumerate_all(target: &[u8], max_deg: usize) -> Result<Option<Vec<u8>>> {
    if max_deg > PARANOID_MAX_DEG {
        return Err(Error::BudgetExceeded(format!(
            "paranoid search is limited to degree {PARANOID_MAX_DEG}"
        )));
    }
    let len = max_deg + 1;
    let mut h = vec![0u8; len];
    for code in 0..4u64.pow(len as u32) {
        let mut rest = code;
        for slot in h.iter_mut() {
            *slot = (rest % 4) as u8;
            rest /= 4;
        }
        if matches_through(&square_mod4(&h), target, 2 * max_deg) {
            let mut root = h.clone();
            while root.last() == Some(&0) {
                root.pop();
            }
            return Ok(Some(root));
        }
    }
    Ok(None)
}

/// Largest `e` such that some candidate's square agrees with `target` below `x^e`.
fn deepest_prefix(target: &[u8], max_deg: usize) -> usize {
    let len = max_deg + 1;
    let mut best = 0;
    let mut h = vec![0u8; len];
    for code in 0..4u64.pow(len as u32) {
        let mut rest = code;
        for slot in h.iter_mut() {
            *slot = (rest % 4) as u8;
            rest /= 4;
        }
        let sq = square_mod4(&h);
        let agree = (0..=2 * max_deg)
            .take_while(|&k| sq[k] == target.get(k).copied().unwrap_or(0))
            .count();
        best = best.max(agree);
    }
    best
}

/// Largest order accepted by [`brute_exp_z`].
pub const BRUTE_EXP_MAX_ORDER: usize = 32;

/// `Π (1 + (-x)^i)^{a_i}` through `x^order` by literal repeated
/// multiplication; negative powers use the geometric series of the inverse.
pub fn brute_exp_z(a: &ExponentSequence, order: usize) -> Result<TruncatedSeries<BigInt>> {
    if order > BRUTE_EXP_MAX_ORDER {
        return Err(Error::BudgetExceeded(format!("order {order} > {BRUTE_EXP_MAX_ORDER}")));
    }
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); order + 1];
    acc[0] = BigInt::from(1);
    for (i, ai) in a.iter().filter(|(i, _)| *i <= order) {
        // (-x)^i = sign x^i
        let sign: i64 = if i % 2 == 1 { -1 } else { 1 };
        let mut factor = vec![BigInt::zero(); order + 1];
        factor[0] = BigInt::from(1);
        if ai.is_negative() {
            // 1 / (1 + s x^i) = Σ (-s)^k x^{ik}
            let mut k = 1;
            while i * k <= order {
                factor[i * k] = BigInt::from((-sign).pow(k as u32));
                k += 1;
            }
        } else {
            factor[i] = BigInt::from(sign);
        }
        let times = ai.abs().to_u64().expect("oracle exponents are small");
        for _ in 0..times {
            let mut next = vec![BigInt::zero(); order + 1];
            for (p, x) in acc.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (q, y) in factor.iter().enumerate().take(order + 1 - p) {
                    next[p + q] += x * y;
                }
            }
            acc = next;
        }
    }
    Ok(TruncatedSeries::new(acc))
}

/// Largest input accepted by [`brute_two_squares`].
pub const BRUTE_TWO_SQUARES_MAX: u64 = 1_000_000;

/// `Some((a, b))` with `a <= b`, `a^2 + b^2 = n` and `a` minimal, or `None`.
pub fn brute_two_squares(n: &BigInt) -> Result<Option<(u64, u64)>> {
    let n = n
        .to_u64()
        .filter(|&v| v <= BRUTE_TWO_SQUARES_MAX)
        .ok_or_else(|| Error::BudgetExceeded(format!("{n} outside 0..={BRUTE_TWO_SQUARES_MAX}")))?;
    let mut a = 0u64;
    while 2 * a * a <= n {
        let mut b = a;
        while a * a + b * b <= n {
            if a * a + b * b == n {
                return Ok(Some((a, b)));
            }
            b += 1;
        }
        a += 1;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4(c: &[i64]) -> Polynomial<Z4> {
        Polynomial::from_i64s(c).reduce::<4>()
    }

    fn sparse(terms: &[(usize, i64)]) -> Vec<i64> {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut c = vec![0; deg + 1];
        for &(e, v) in terms {
            c[e] = v;
        }
        c
    }

    #[test]
    fn square_of_one_plus_z4() {
        let p = z4(&sparse(&[(0, 1), (4, 2), (8, 1)]));
        let expected = SquareVerdict::Square { witness: z4(&[1, 0, 0, 0, 1]) };
        assert_eq!(brute_square_z4(&p, 4, SearchMode::Binary), Ok(expected.clone()));
        assert_eq!(brute_square_z4(&p, 4, SearchMode::Paranoid), Ok(expected));
    }

    #[test]
    fn nine_47_product_is_not_a_square() {
        let p = z4(&sparse(&[(0, 1), (4, 2), (8, 1), (24, 3)]));
        assert_eq!(
            brute_square_z4(&p, 12, SearchMode::Binary),
            Ok(SquareVerdict::NotSquare { failure_exponent: 24 })
        );
    }

    #[test]
    fn odd_support_is_not_a_square() {
        let p = z4(&[1, 1]);
        assert_eq!(brute_square_z4(&p, 1, SearchMode::Binary), Ok(SquareVerdict::NotSquare { failure_exponent: 1 }));
        assert_eq!(brute_square_z4(&p, 1, SearchMode::Paranoid), Ok(SquareVerdict::NotSquare { failure_exponent: 1 }));
    }

    #[test]
    fn paranoid_finds_non_binary_roots_first_by_enumeration_order() {
        // (1 + 2x)^2 = 1 + 4x + 4x^2 ≡ 1, so the binary root 1 is found first
        let verdict = brute_square_z4(&z4(&[1]), 2, SearchMode::Paranoid).unwrap();
        assert_eq!(verdict, SquareVerdict::Square { witness: z4(&[1]) });
    }

    #[test]
    fn budget_limits() {
        assert!(matches!(brute_square_z4(&z4(&[1, 0, 0, 0, 1]), 1, SearchMode::Binary), Err(Error::BudgetExceeded(_))));
        assert!(matches!(brute_square_z4(&z4(&[1]), 9, SearchMode::Paranoid), Err(Error::BudgetExceeded(_))));
        assert!(brute_exp_z(&ExponentSequence::zeros(40), 33).is_err());
        assert!(brute_two_squares(&BigInt::from(1_000_001)).is_err());
        assert!(brute_two_squares(&BigInt::from(-1)).is_err());
    }

    #[test]
    fn exp_vectors() {
        let one = |c: &[i64]| TruncatedSeries::new(c.iter().map(|&v| BigInt::from(v)).collect());
        assert_eq!(brute_exp_z(&ExponentSequence::from_i64s(&[1]), 1).unwrap(), one(&[1, -1]));
        assert_eq!(brute_exp_z(&ExponentSequence::from_i64s(&[-1]), 3).unwrap(), one(&[1, 1, 1, 1]));
        assert_eq!(brute_exp_z(&ExponentSequence::from_i64s(&[0, -1]), 4).unwrap(), one(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn two_squares_vectors() {
        assert_eq!(brute_two_squares(&BigInt::from(305)), Ok(Some((4, 17))));
        assert_eq!(brute_two_squares(&BigInt::from(27)), Ok(None));
        assert_eq!(brute_two_squares(&BigInt::from(2)), Ok(Some((1, 1))));
        assert_eq!(brute_two_squares(&BigInt::from(0)), Ok(Some((0, 0))));
    }
}
