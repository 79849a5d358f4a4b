//! Dense polynomials over a small prime field, enough for distinct-degree
//! and Cantor–Zassenhaus equal-degree factorization.

use num_bigint::BigUint;
use rand::Rng;

/// Coefficients in `0..p`, ascending exponent, no trailing zeros.
pub(crate) type FpPoly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeField {
    pub p: u64,
}

fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn degree(a: &FpPoly) -> Option<usize> {
    a.len().checked_sub(1)
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        PrimeField { p }
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mulm(acc, base);
            }
            base = self.mulm(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + self.mulm(x, y)) % self.p;
            }
        }
        trim(out)
    }

    pub fn scale(&self, a: &FpPoly, c: u64) -> FpPoly {
        trim(a.iter().map(|&x| self.mulm(x, c)).collect())
    }

    pub fn monic(&self, a: &FpPoly) -> FpPoly {
        match a.last() {
            Some(&lead) => self.scale(a, self.inv(lead)),
            None => Vec::new(),
        }
    }

    pub fn div_rem(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        let db = degree(b).expect("division by zero polynomial");
        let lead_inv = self.inv(b[db]);
        let mut rem = a.clone();
        if rem.len() <= db {
            return (Vec::new(), trim(rem));
        }
        let mut quot = vec![0u64; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let q = self.mulm(rem[k + db], lead_inv);
            if q == 0 {
                continue;
            }
            for (j, &d) in b.iter().enumerate() {
                rem[k + j] = (rem[k + j] + self.p - self.mulm(q, d)) % self.p;
            }
            quot[k] = q;
        }
        (trim(quot), trim(rem))
    }

    pub fn rem(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        self.div_rem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], Vec::new());
        let (mut t0, mut t1): (FpPoly, FpPoly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lead_inv = self.inv(*r0.last().expect("gcd of nonzero inputs"));
        (self.scale(&r0, lead_inv), self.scale(&s0, lead_inv), self.scale(&t0, lead_inv))
    }

    pub fn derivative(&self, a: &FpPoly) -> FpPoly {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mulm(c, i as u64 % self.p))
                .collect(),
        )
    }

    /// `base^exp mod modulus`.
    pub fn pow_mod(&self, base: &FpPoly, exp: &BigUint, modulus: &FpPoly) -> FpPoly {
        let mut acc: FpPoly = self.rem(&vec![1], modulus);
        let base = self.rem(base, modulus);
        for bit in (0..exp.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), modulus);
            if exp.bit(bit) {
                acc = self.rem(&self.mul(&acc, &base), modulus);
            }
        }
        acc
    }

    /// Distinct-degree split of a monic squarefree polynomial: products of
    /// all irreducible factors of each degree.
    pub fn distinct_degree(&self, f: &FpPoly) -> Vec<(FpPoly, usize)> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        let x: FpPoly = vec![0, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 0;
        while degree(&rest).is_some_and(|n| n >= 2 * (d + 1)) {
            d += 1;
            h = self.pow_mod(&h, &p, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if degree(&g).is_some_and(|n| n > 0) {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        if let Some(n) = degree(&rest).filter(|&n| n > 0) {
            out.push((rest, n));
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a monic product of degree-`d` irreducibles.
    pub fn equal_degree<R: Rng>(&self, f: &FpPoly, d: usize, rng: &mut R) -> Vec<FpPoly> {
        let n = degree(f).expect("nonzero");
        if n == d {
            return vec![f.clone()];
        }
        assert!(self.p % 2 == 1, "Cantor–Zassenhaus needs an odd characteristic");
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: FpPoly = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if degree(&a).map_or(true, |k| k == 0) {
                continue;
            }
            let mut g = self.gcd(&a, f);
            if degree(&g) == Some(0) {
                let b = self.sub(&self.pow_mod(&a, &exp, f), &vec![1]);
                g = self.gcd(&b, f);
            }
            if degree(&g).is_some_and(|k| k > 0 && k < n) {
                let other = self.div_rem(f, &g).0;
                let mut parts = self.equal_degree(&g, d, rng);
                parts.extend(self.equal_degree(&other, d, rng));
                return parts;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    pub fn factor_squarefree<R: Rng>(&self, f: &FpPoly, rng: &mut R) -> Vec<FpPoly> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out.sort();
        out
    }
}
