use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Poly;
use crate::kernel::{KernelError, Scalar};

/// A rational function `num/den` in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self, KernelError> {
        if den.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading().expect("nonzero").inv()?;
        Ok(RatFn {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn zero() -> Self {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn poly(p: Poly) -> Self {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn build(num: Poly, den: Poly) -> Self {
        Self::new(num, den).expect("denominator is a product of nonzero polynomials")
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::build(self.num.scale(c), self.den.clone())
    }

    pub fn derivative(&self) -> Self {
        // (n/d)' = (n'd − nd')/d²
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::build(top, &self.den * &self.den)
    }

    pub fn inv(&self) -> Result<Self, KernelError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents need a nonzero function.
    pub fn powi(&self, n: i64) -> Result<Self, KernelError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let k = n.unsigned_abs() as u32;
        Ok(Self::build(base.num.pow(k), base.den.pow(k)))
    }

    /// Substitutes `w = (a·z + b)/(c·z + d)` into a function of `w`.
    pub fn compose_mobius(&self, a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Result<Self, KernelError> {
        let top = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        let bottom = Poly::from_coeffs(vec![d.clone(), c.clone()]);
        // p(w) = P(z)/(cz+d)^deg p with P = Σ p_k (az+b)^k (cz+d)^(deg−k)
        let homog = |p: &Poly| -> (Poly, usize) {
            let deg = p.degree().unwrap_or(0);
            let mut acc = Poly::zero();
            for (k, pk) in p.coeffs().iter().enumerate() {
                if pk.is_zero() {
                    continue;
                }
                let term = &top.pow(k as u32) * &bottom.pow((deg - k) as u32);
                acc = &acc + &term.scale(pk);
            }
            (acc, deg)
        };
        let (n, dn) = homog(&self.num);
        let (m, dm) = homog(&self.den);
        let num = &n * &bottom.pow(dm as u32);
        let den = &m * &bottom.pow(dn as u32);
        Self::new(num, den)
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.den == rhs.den {
            return RatFn::build(&self.num + &rhs.num, self.den.clone());
        }
        RatFn::build(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::build(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<Poly> for RatFn {
    fn from(p: Poly) -> Self {
        RatFn::poly(p)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
