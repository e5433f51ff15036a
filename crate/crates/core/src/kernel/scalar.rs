use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{KernelError, Rational};

/// An element `a + b·√2` of the quadratic field ℚ(√2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: Rational,
    b: Rational,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar {
        a: Rational::ZERO,
        b: Rational::ZERO,
    };
    pub const ONE: Scalar = Scalar {
        a: Rational::ONE,
        b: Rational::ZERO,
    };

    pub fn new(a: Rational, b: Rational) -> Self {
        Scalar { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(Rational::from_int(n), Rational::ZERO)
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::new(Rational::new(num, den), Rational::ZERO)
    }

    pub fn rational(r: Rational) -> Self {
        Scalar::new(r, Rational::ZERO)
    }

    pub fn sqrt2() -> Self {
        Scalar::new(Rational::ZERO, Rational::ONE)
    }

    pub fn half() -> Self {
        Scalar::from_ratio(1, 2)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &Rational {
        &self.b
    }

    /// `Some(r)` when the √2 component vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Scalar::new(self.a.clone(), -&self.b)
    }

    /// Field norm `a² − 2b²`; nonzero for every nonzero element since √2 is irrational.
    pub fn norm(&self) -> Rational {
        let two = Rational::from_int(2);
        &(&self.a * &self.a) - &(&two * &(&self.b * &self.b))
    }

    pub fn inv(&self) -> Result<Self, KernelError> {
        if self.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Scalar::rational(self.a.recip()?));
        }
        let n = self.norm().recip()?;
        Ok(Scalar::new(&self.a * &n, -(&self.b * &n)))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, KernelError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: i32) -> Result<Self, KernelError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::ONE;
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Scalar::new(&self.a * r, &self.b * r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.b.is_zero() && rhs.b.is_zero() {
            return Scalar::rational(&self.a * &rhs.a);
        }
        let two = Rational::from_int(2);
        let a = &(&self.a * &rhs.a) + &(&two * &(&self.b * &rhs.b));
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Scalar::new(a, b)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.a, -&self.b)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a = &self.a + &rhs.a;
        if !rhs.b.is_zero() {
            self.b = &self.b + &rhs.b;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a = &self.a - &rhs.a;
        if !rhs.b.is_zero() {
            self.b = &self.b - &rhs.b;
        }
    }
}

/// Serialized form: `"a/b"` for rationals, `"a/b+c/d*r2"` (or `"c/d*r2"` when the
/// rational part vanishes) otherwise.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*r2", self.b),
            (false, false) => {
                if self.b.signum() < 0 {
                    write!(f, "{}-{}*r2", self.a, -&self.b)
                } else {
                    write!(f, "{}+{}*r2", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = KernelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = s.strip_suffix("*r2") else {
            return Ok(Scalar::rational(s.parse()?));
        };
        // Split at the last sign that is not in leading position.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            None => Ok(Scalar::new(Rational::ZERO, body.parse()?)),
            Some(i) => {
                let (ra, rb) = body.split_at(i);
                let rb = rb.strip_prefix('+').unwrap_or(rb);
                Ok(Scalar::new(ra.parse()?, rb.parse()?))
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
