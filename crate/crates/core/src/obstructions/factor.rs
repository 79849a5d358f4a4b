//! Factorization in Z[x]: content and squarefree splitting, factoring
//! modulo a small prime, Hensel lifting past the Mignotte bound, and
//! subset recombination with trial division.

use std::cmp::Ordering;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::gf::{degree, FpPoly, PrimeField};
use crate::error::{Error, Result};
use crate::ring::Polynomial;

type ZPoly = Polynomial<BigInt>;

/// `content * Π factors`, every factor primitive, irreducible over Z and
/// with positive leading coefficient. Repeated factors appear repeatedly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<ZPoly>,
}

impl Factorization {
    pub fn product(&self) -> ZPoly {
        self.factors
            .iter()
            .fold(Polynomial::constant(self.content.clone()), |acc, f| &acc * f)
    }
}

/// Degree first, then coefficients from the constant term up.
pub fn canonical_cmp(a: &ZPoly, b: &ZPoly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

pub fn factor_integer_poly(p: &ZPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut content = p.content();
    if p.leading().is_some_and(Signed::is_negative) {
        content = -content;
    }
    let mut rest = p.primitive_part();
    let mut factors = Vec::new();

    let x = Polynomial::from_i64s(&[0, 1]);
    while rest.degree().is_some_and(|d| d > 0) && rest.coeff(0).is_zero() {
        rest = rest.checked_div(&x)?;
        factors.push(x.clone());
    }

    if rest.degree().is_some_and(|d| d > 0) {
        let squarefree = rest
            .checked_div(&gcd_primitive(&rest, &rest.derivative()))?
            .primitive_part();
        for g in factor_squarefree(&squarefree) {
            while let Ok(q) = rest.checked_div(&g) {
                rest = q;
                factors.push(g.clone());
            }
        }
    }
    debug_assert!(rest.is_one(), "leftover cofactor {rest:?}");
    factors.sort_by(canonical_cmp);
    Ok(Factorization { content, factors })
}

/// Primitive gcd (positive leading coefficient) via the primitive remainder sequence.
pub(crate) fn gcd_primitive(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).primitive_part();
        a = b;
        b = r;
    }
    a
}

fn pseudo_rem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = b.degree().expect("nonzero divisor");
    let lb = b.leading().expect("nonzero divisor").clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree().filter(|&d| d >= db) {
        let lr = r.leading().expect("nonzero").clone();
        let shifted = &Polynomial::monomial(lr, dr - db) * b;
        r = &r.scale(&lb) - &shifted;
    }
    r
}

const PRIME_CANDIDATES: usize = 5;

/// Irreducible factors of a primitive squarefree polynomial of positive degree.
fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.degree().expect("nonzero");
    if n == 1 {
        return vec![f.clone()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (field, modular) = choose_prime(f, &mut rng);
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    let p = BigInt::from(field.p);
    let lc = f.leading().expect("nonzero").abs();
    let bound = mignotte_bound(f) * &lc * 2;
    let mut modulus = p.clone();
    let mut k = 1u32;
    while modulus <= bound {
        modulus *= &p;
        k += 1;
    }

    let lc_inv = mod_inverse(f.leading().expect("nonzero"), &modulus);
    let target = reduce(&f.scale(&lc_inv), &modulus);
    let lifted = lift_all(&target, &modular, field, k);
    recombine(f, lifted, &modulus)
}

/// Picks the prime (among a few good ones) with the fewest modular factors.
fn choose_prime(f: &ZPoly, rng: &mut ChaCha8Rng) -> (PrimeField, Vec<FpPoly>) {
    let mut best: Option<(PrimeField, Vec<FpPoly>)> = None;
    let mut good = 0;
    let mut p = 3u64;
    while good < PRIME_CANDIDATES {
        if is_prime(p) {
            let field = PrimeField::new(p);
            let fp = to_fp(f, field);
            let lead_ok = degree(&fp) == f.degree();
            if lead_ok && degree(&field.gcd(&fp, &field.derivative(&fp))) == Some(0) {
                good += 1;
                let parts = field.factor_squarefree(&field.monic(&fp), rng);
                if best.as_ref().map_or(true, |(_, b)| parts.len() < b.len()) {
                    best = Some((field, parts));
                }
            }
        }
        p += 2;
    }
    best.expect("some prime is good for a squarefree polynomial")
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn to_fp(f: &ZPoly, field: PrimeField) -> FpPoly {
    let p = BigInt::from(field.p);
    let mut out: FpPoly = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&p).to_u64().expect("residue fits"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn from_fp(a: &FpPoly) -> ZPoly {
    Polynomial::new(a.iter().map(|&c| BigInt::from(c)).collect())
}

/// `2^n ||f||_2`, a bound on the coefficients of any factor of `f`.
fn mignotte_bound(f: &ZPoly) -> BigInt {
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    norm << f.degree().expect("nonzero")
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient must be a unit mod p^k");
    e.x.mod_floor(m)
}

fn reduce(a: &ZPoly, m: &BigInt) -> ZPoly {
    a.map(|c| c.mod_floor(m))
}

fn symmetric(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half: BigInt = m / 2;
    a.map(|c| {
        let r = c.mod_floor(m);
        if r > half {
            r - m
        } else {
            r
        }
    })
}

/// Lifts the monic modular factorization of `target` (monic mod `p^k`) to mod `p^k`.
fn lift_all(target: &ZPoly, factors: &[FpPoly], field: PrimeField, k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![target.clone()];
    }
    let mid = factors.len() / 2;
    let product = |fs: &[FpPoly]| fs.iter().fold(vec![1u64], |acc, g| field.mul(&acc, g));
    let (g, h) = lift_pair(target, &product(&factors[..mid]), &product(&factors[mid..]), field, k);
    let mut out = lift_all(&g, &factors[..mid], field, k);
    out.extend(lift_all(&h, &factors[mid..], field, k));
    out
}

/// Linear Hensel lifting of `target ≡ g0 h0 (mod p)` to `target ≡ g h (mod p^k)`.
fn lift_pair(target: &ZPoly, g0: &FpPoly, h0: &FpPoly, field: PrimeField, k: u32) -> (ZPoly, ZPoly) {
    let (one, s, t) = field.ext_gcd(g0, h0);
    assert_eq!(one, vec![1], "modular factors must be coprime");
    let p = BigInt::from(field.p);
    let modulus = p.pow(k);
    let (mut g, mut h) = (from_fp(g0), from_fp(h0));
    let mut pj = p.clone();
    for _ in 1..k {
        let diff = target - &(&g * &h);
        let e: FpPoly = to_fp(&diff.map(|c| c.div_floor(&pj)), field);
        let (q, dg) = field.div_rem(&field.mul(&t, &e), g0);
        let dh = field.add(&field.mul(&s, &e), &field.mul(&q, h0));
        g = reduce(&(&g + &from_fp(&dg).scale(&pj)), &modulus);
        h = reduce(&(&h + &from_fp(&dh).scale(&pj)), &modulus);
        pj *= &p;
    }
    (g, h)
}

/// Zassenhaus recombination: try products of lifted factors, smallest subsets first.
fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'search: while 2 * size <= lifted.len() {
        for subset in (0..lifted.len()).combinations(size) {
            let lc = rest.leading().expect("nonzero").clone();
            let candidate = subset
                .iter()
                .fold(Polynomial::constant(lc), |acc, &i| &acc * &lifted[i]);
            let g = symmetric(&reduce(&candidate, modulus), modulus).primitive_part();
            let constant = rest.coeff(0);
            if !g.coeff(0).is_zero() && !(&constant % g.coeff(0)).is_zero() {
                continue;
            }
            if let Ok(q) = rest.checked_div(&g) {
                rest = q;
                found.push(g);
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'search;
            }
        }
        size += 1;
    }
    if rest.degree().is_some_and(|d| d > 0) {
        found.push(rest.primitive_part());
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> ZPoly {
        Polynomial::from_i64s(c)
    }

    fn assert_factors(input: &[i64], expected: &[&[i64]], content: i64) {
        let fac = factor_integer_poly(&p(input)).unwrap();
        let mut want: Vec<ZPoly> = expected.iter().map(|c| p(c)).collect();
        want.sort_by(canonical_cmp);
        assert_eq!(fac.factors, want, "factors of {:?}", p(input));
        assert_eq!(fac.content, BigInt::from(content));
        assert_eq!(fac.product(), p(input));
    }

    #[test]
    fn one_minus_z4() {
        assert_factors(&[1, 0, 0, 0, -1], &[&[-1, 1], &[1, 1], &[1, 0, 1]], -1);
    }

    #[test]
    fn one_minus_4z2() {
        assert_factors(&[1, 0, -4], &[&[-1, 2], &[1, 2]], -1);
    }

    #[test]
    fn repeated_and_content() {
        // 6 (x + 1)^2 (x^2 + x + 1)
        let f = &(&p(&[1, 1]).pow(2) * &p(&[1, 1, 1])).scale(&BigInt::from(6));
        let fac = factor_integer_poly(f).unwrap();
        assert_eq!(fac.content, BigInt::from(6));
        assert_eq!(fac.factors, vec![p(&[1, 1]), p(&[1, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn powers_of_x() {
        assert_factors(&[0, 0, 3, 3], &[&[0, 1], &[0, 1], &[1, 1]], 3);
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // x^4 - 10x^2 + 1 is irreducible over Z but splits mod every prime
        assert_factors(&[1, 0, -10, 0, 1], &[&[1, 0, -10, 0, 1]], 1);
    }

    #[test]
    fn non_monic_factors() {
        // (3x^2 - 2)(5x^3 + x - 7)
        let f = &p(&[-2, 0, 3]) * &p(&[-7, 1, 0, 5]);
        let fac = factor_integer_poly(&f).unwrap();
        assert_eq!(fac.factors, vec![p(&[-2, 0, 3]), p(&[-7, 1, 0, 5])]);
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn constants_and_zero() {
        assert_eq!(factor_integer_poly(&Polynomial::zero()), Err(Error::ZeroPolynomial));
        let fac = factor_integer_poly(&p(&[-3])).unwrap();
        assert_eq!(fac.content, BigInt::from(-3));
        assert!(fac.factors.is_empty());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &p(&[1, 1]) * &p(&[2, 0, 1]);
        let b = &p(&[1, 1]) * &p(&[3, 1]);
        assert_eq!(gcd_primitive(&a, &b), p(&[1, 1]));
    }
}
