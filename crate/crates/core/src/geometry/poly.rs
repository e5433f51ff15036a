use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::kernel::{KernelError, Scalar};

/// Dense univariate polynomial over ℚ(√2), coefficients from degree 0 upward.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::ONE)
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·z^n`.
    pub fn monomial(c: Scalar, n: usize) -> Self {
        let mut coeffs = vec![Scalar::ZERO; n + 1];
        coeffs[n] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn z() -> Self {
        Self::monomial(Scalar::ONE, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> Scalar {
        self.coeffs.get(n).cloned().unwrap_or(Scalar::ZERO)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// `Some(n)` when the polynomial is `c·z^n`.
    pub fn as_monomial(&self) -> Option<(usize, &Scalar)> {
        let d = self.degree()?;
        self.coeffs[..d]
            .iter()
            .all(Scalar::is_zero)
            .then(|| (d, &self.coeffs[d]))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * &Scalar::from_int(n as i64))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn monic(&self) -> Result<Self, KernelError> {
        let lead = self.leading().ok_or(KernelError::DivisionByZero)?;
        Ok(self.scale(&lead.inv()?))
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), KernelError> {
        let dd = d.degree().ok_or(KernelError::DivisionByZero)?;
        let inv = d.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if sd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Scalar::ZERO; sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().expect("nonzero")
        }
    }

    /// Substitutes the polynomial `q` for the variable.
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Scalar::ONE)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.as_rational().is_some_and(|r| r.signum() < 0);
            let c = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let cs = if c.as_rational().is_some() {
                c.to_string()
            } else {
                format!("({c})")
            };
            match (n, c.is_one()) {
                (0, _) => write!(f, "{cs}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{cs}*z")?,
                (_, true) => write!(f, "z^{n}")?,
                (_, false) => write!(f, "{cs}*z^{n}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        // (z^2 - 1) = (z - 1)(z + 1)
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, Poly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let c = Poly::from_ints(&[2, 3, 1]); // (z+1)(z+2)
        assert_eq!(Poly::gcd(&a, &c), b);
    }

    #[test]
    fn derivative_and_compose() {
        let p = Poly::from_ints(&[1, 2, 3]);
        assert_eq!(p.derivative(), Poly::from_ints(&[2, 6]));
        let shifted = p.compose(&Poly::from_ints(&[1, 1]));
        assert_eq!(shifted.eval(&Scalar::ZERO), p.eval(&Scalar::ONE));
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[-1, 0, 2]).to_string(), "2*z^2 - 1");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
