use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::kernel::{LinComb, Scalar};

/// A Laurent polynomial in `y`, stored as exponent → coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct LaurentPoly(LinComb<i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Scalar::ONE, 0)
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·y^n`.
    pub fn monomial(c: Scalar, n: i64) -> Self {
        LaurentPoly(LinComb::term(n, c))
    }

    pub fn y_pow(n: i64) -> Self {
        Self::monomial(Scalar::ONE, n)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Scalar)>) -> Self {
        LaurentPoly(LinComb::from_terms(terms))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn coeff(&self, n: i64) -> Scalar {
        self.0.coeff(&n)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.0.iter().map(|(n, c)| (*n, c))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        LaurentPoly(self.0.scale(c))
    }

    /// `d/dy`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(n, _)| *n != 0)
                .map(|(n, c)| (n - 1, c * &Scalar::from_int(n))),
        )
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        LaurentPoly(&self.0 + &rhs.0)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        LaurentPoly(&self.0 - &rhs.0)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly(-&self.0)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        let mut out = LinComb::zero();
        for (a, x) in &self.0 {
            for (b, y) in &rhs.0 {
                out.add_term(a + b, &(x * y));
            }
        }
        LaurentPoly(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Highest power first.
        let terms: Vec<_> = self.terms().collect();
        for (i, (n, c)) in terms.iter().rev().enumerate() {
            let neg = c.as_rational().is_some_and(|r| r.signum() < 0);
            let mag = if neg { -(*c).clone() } else { (*c).clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = match n {
                0 => String::new(),
                1 => "y".to_string(),
                n => format!("y^{n}"),
            };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = &LaurentPoly::y_pow(-1) + &LaurentPoly::y_pow(2);
        let sq = &p * &p;
        assert_eq!(sq.coeff(1), Scalar::from_int(2));
        assert_eq!(sq.coeff(-2), Scalar::ONE);
        assert_eq!(p.derivative(), &LaurentPoly::monomial(-Scalar::ONE, -2) + &LaurentPoly::monomial(Scalar::from_int(2), 1));
        assert!(LaurentPoly::one().derivative().is_zero());
        assert_eq!(p.to_string(), "y^2 + y^-1");
    }
}
