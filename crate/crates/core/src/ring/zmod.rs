use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Residue class modulo `M`, stored as its representative in `0..M`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Zmod<const M: u8>(u8);

pub type Z2 = Zmod<2>;
pub type Z4 = Zmod<4>;

impl<const M: u8> Zmod<M> {
    pub const fn new(value: u8) -> Self {
        Zmod(value % M)
    }

    pub fn from_bigint(value: &BigInt) -> Self {
        let r = value.mod_floor(&BigInt::from(M));
        Zmod(r.to_u8().expect("residue fits in u8"))
    }

    pub fn from_i64(value: i64) -> Self {
        Zmod(value.rem_euclid(M as i64) as u8)
    }

    /// Representative in `0..M`.
    pub const fn value(self) -> u8 {
        self.0
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }

    pub fn inverse(self) -> Option<Self> {
        (1..M).map(Zmod).find(|x| (*x * self).0 == 1 % M)
    }
}

impl<const M: u8> fmt::Debug for Zmod<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const M: u8> fmt::Display for Zmod<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const M: u8> Add for Zmod<M> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Zmod(((self.0 as u16 + rhs.0 as u16) % M as u16) as u8)
    }
}

impl<const M: u8> Sub for Zmod<M> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Zmod(((self.0 as u16 + M as u16 - rhs.0 as u16) % M as u16) as u8)
    }
}

impl<const M: u8> Mul for Zmod<M> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Zmod(((self.0 as u16 * rhs.0 as u16) % M as u16) as u8)
    }
}

impl<const M: u8> Neg for Zmod<M> {
    type Output = Self;
    fn neg(self) -> Self {
        Zmod((M - self.0) % M)
    }
}

impl<const M: u8> Zero for Zmod<M> {
    fn zero() -> Self {
        Zmod(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const M: u8> One for Zmod<M> {
    fn one() -> Self {
        Zmod(1 % M)
    }
}
