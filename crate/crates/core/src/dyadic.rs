//! Exact numbers of the form `a / 2^b`.
//!
//! Every coefficient the expansion produces has a power-of-two denominator,
//! so a big-integer numerator plus a binary exponent is enough to keep all
//! arithmetic exact. Values are kept normalized: the numerator is odd, or
//! the value is zero with exponent zero. Two equal values therefore always
//! have identical representations, and derived `Eq`/`Hash` are sound.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    numerator: BigInt,
    exponent: u32,
}

impl DyadicRational {
    /// `numerator / 2^exponent`, normalized.
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Self {
        let mut d = DyadicRational {
            numerator: numerator.into(),
            exponent,
        };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        DyadicRational {
            numerator: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self::new(value, 0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.exponent == 0
    }

    pub fn abs(&self) -> Self {
        DyadicRational {
            numerator: self.numerator.abs(),
            exponent: self.exponent,
        }
    }

    /// Divide by `2^k`.
    pub fn div_pow2(&self, k: u32) -> Self {
        Self::new(self.numerator.clone(), self.exponent + k)
    }

    /// Numerator rescaled to the denominator `2^exponent`; `exponent` must be
    /// at least `self.exponent()`.
    pub fn scaled_numerator(&self, exponent: u32) -> BigInt {
        assert!(
            exponent >= self.exponent,
            "cannot rescale 2^{} to the smaller denominator 2^{exponent}",
            self.exponent
        );
        &self.numerator << (exponent - self.exponent)
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.numerator.trailing_zeros().unwrap_or(0);
        let shift = tz.min(u64::from(self.exponent)) as u32;
        if shift > 0 {
            self.numerator >>= shift;
            self.exponent -= shift;
        }
    }

    fn aligned(a: &Self, b: &Self) -> (BigInt, BigInt, u32) {
        let e = a.exponent.max(b.exponent);
        (a.scaled_numerator(e), b.scaled_numerator(e), e)
    }
}

impl Default for DyadicRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for DyadicRational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<BigInt> for DyadicRational {
    fn from(v: BigInt) -> Self {
        Self::from_integer(v)
    }
}

impl Add<&DyadicRational> for &DyadicRational {
    type Output = DyadicRational;
    fn add(self, rhs: &DyadicRational) -> DyadicRational {
        let (a, b, e) = DyadicRational::aligned(self, rhs);
        DyadicRational::new(a + b, e)
    }
}

impl Add for DyadicRational {
    type Output = DyadicRational;
    fn add(self, rhs: DyadicRational) -> DyadicRational {
        &self + &rhs
    }
}

impl AddAssign<&DyadicRational> for DyadicRational {
    fn add_assign(&mut self, rhs: &DyadicRational) {
        *self = &*self + rhs;
    }
}

impl AddAssign for DyadicRational {
    fn add_assign(&mut self, rhs: DyadicRational) {
        *self = &*self + &rhs;
    }
}

impl Sub<&DyadicRational> for &DyadicRational {
    type Output = DyadicRational;
    fn sub(self, rhs: &DyadicRational) -> DyadicRational {
        let (a, b, e) = DyadicRational::aligned(self, rhs);
        DyadicRational::new(a - b, e)
    }
}

impl Sub for DyadicRational {
    type Output = DyadicRational;
    fn sub(self, rhs: DyadicRational) -> DyadicRational {
        &self - &rhs
    }
}

impl SubAssign<&DyadicRational> for DyadicRational {
    fn sub_assign(&mut self, rhs: &DyadicRational) {
        *self = &*self - rhs;
    }
}

impl Neg for DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        DyadicRational {
            numerator: -self.numerator,
            exponent: self.exponent,
        }
    }
}

impl Neg for &DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        -self.clone()
    }
}

impl Mul<&DyadicRational> for &DyadicRational {
    type Output = DyadicRational;
    fn mul(self, rhs: &DyadicRational) -> DyadicRational {
        // Product of two odd numerators is odd, so no renormalization is needed
        // unless one side is zero; `new` handles both.
        DyadicRational::new(&self.numerator * &rhs.numerator, self.exponent + rhs.exponent)
    }
}

impl Mul for DyadicRational {
    type Output = DyadicRational;
    fn mul(self, rhs: DyadicRational) -> DyadicRational {
        &self * &rhs
    }
}

impl Mul<&BigInt> for &DyadicRational {
    type Output = DyadicRational;
    fn mul(self, rhs: &BigInt) -> DyadicRational {
        DyadicRational::new(&self.numerator * rhs, self.exponent)
    }
}

impl Mul<i64> for &DyadicRational {
    type Output = DyadicRational;
    fn mul(self, rhs: i64) -> DyadicRational {
        DyadicRational::new(&self.numerator * rhs, self.exponent)
    }
}

impl Sum for DyadicRational {
    fn sum<I: Iterator<Item = DyadicRational>>(iter: I) -> Self {
        iter.fold(DyadicRational::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> Sum<&'a DyadicRational> for DyadicRational {
    fn sum<I: Iterator<Item = &'a DyadicRational>>(iter: I) -> Self {
        iter.fold(DyadicRational::zero(), |acc, x| &acc + x)
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = Self::aligned(self, other);
        a.cmp(&b)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders `p/2^q`, or a bare integer when the exponent is zero (`"0"` for zero).
impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.exponent)
        }
    }
}

impl FromStr for DyadicRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::ParseDyadic(s.to_string());
        let (num, exp) = match s.split_once('/') {
            None => (s, 0),
            Some((num, den)) => {
                let exp = den.strip_prefix("2^").ok_or_else(bad)?;
                if exp.is_empty() || !exp.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                (num, exp.parse::<u32>().map_err(|_| bad())?)
            }
        };
        let digits = num.strip_prefix('-').unwrap_or(num);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let numerator: BigInt = num.parse().map_err(|_| bad())?;
        Ok(DyadicRational::new(numerator, exp))
    }
}

impl Serialize for DyadicRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyadicRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl One for DyadicRational {
    fn one() -> Self {
        DyadicRational::one()
    }
}

impl Zero for DyadicRational {
    fn zero() -> Self {
        DyadicRational::zero()
    }
    fn is_zero(&self) -> bool {
        DyadicRational::is_zero(self)
    }
}
