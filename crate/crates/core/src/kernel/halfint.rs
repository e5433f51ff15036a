use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use super::{KernelError, Rational, Scalar};

/// A value in ½ℤ stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// `n + 1/2`.
    pub const fn plus_half(n: i64) -> Self {
        HalfInt { twice: 2 * n + 1 }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value; `None` for proper half-integers.
    pub fn as_int(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    /// Floor of the value.
    pub fn floor(self) -> i64 {
        self.twice.div_euclid(2)
    }

    pub fn abs(self) -> Self {
        HalfInt {
            twice: self.twice.abs(),
        }
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.twice, 2)
    }

    pub fn to_scalar(self) -> Scalar {
        Scalar::rational(self.to_rational())
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt::from_twice(self.twice + 2 * rhs)
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt::from_twice(self.twice - 2 * rhs)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = KernelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || KernelError::Parse(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInt::int).map_err(|_| err()),
            Some((n, "2")) => n.trim().parse::<i64>().map(HalfInt::from_twice).map_err(|_| err()),
            Some(_) => Err(err()),
        }
    }
}
