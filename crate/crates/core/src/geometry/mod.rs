//! Tensor densities on the punctured sphere and the Krichever-Novikov bases.
//!
//! A density `f(z)(dz)^λ` is a rational function with a half-integer weight.
//! The sphere is punctured either at `{0, ∞}` or at `{α, −α, ∞}` with `α = s²`.

mod poly;
mod ratfn;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use poly::Poly;
pub use ratfn::RatFn;

use crate::kernel::{BasisKey, Family, HalfInt, KernelError, Rational, Scalar, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("basis key {key} does not belong to the {config} configuration")]
    FamilyMismatch { key: BasisKey, config: String },
    #[error("weights {0} and {1} are not allowed for this product")]
    WrongWeight(HalfInt, HalfInt),
    #[error("weight {0} has no Krichever-Novikov basis")]
    NoBasis(HalfInt),
    #[error("{0} has poles outside the puncture set")]
    NotInAlgebra(String),
    #[error("the three-puncture configuration needs a nonzero square root of alpha")]
    ZeroAlpha,
    #[error("the Möbius pullback needs the three-puncture configuration")]
    NeedsThreePunctures,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

pub const WEIGHT_FUNCTION: HalfInt = HalfInt::ZERO;
pub const WEIGHT_VECTOR_FIELD: HalfInt = HalfInt::from_twice(-2);
pub const WEIGHT_HALF: HalfInt = HalfInt::from_twice(-1);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Punctures {
    /// `{0, ∞}`.
    Two,
    /// `{α, −α, ∞}` with `α = s²`.
    Three { s: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeometryConfig {
    pub punctures: Punctures,
}

impl GeometryConfig {
    pub fn two() -> Self {
        GeometryConfig {
            punctures: Punctures::Two,
        }
    }

    pub fn three(s: Rational) -> Result<Self, GeometryError> {
        if s.is_zero() {
            return Err(GeometryError::ZeroAlpha);
        }
        Ok(GeometryConfig {
            punctures: Punctures::Three { s },
        })
    }

    pub fn sqrt_alpha(&self) -> Option<&Rational> {
        match &self.punctures {
            Punctures::Two => None,
            Punctures::Three { s } => Some(s),
        }
    }

    pub fn alpha(&self) -> Option<Scalar> {
        self.sqrt_alpha().map(|s| Scalar::rational(s * s))
    }

    fn label(&self) -> String {
        match &self.punctures {
            Punctures::Two => "two-puncture".into(),
            Punctures::Three { s } => format!("three-puncture (s = {s})"),
        }
    }
}

/// `f(z)(dz)^weight`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Density {
    pub weight: HalfInt,
    pub func: RatFn,
}

impl Density {
    pub fn new(func: RatFn, weight: HalfInt) -> Self {
        Density { weight, func }
    }

    pub fn poly(p: Poly, weight: HalfInt) -> Self {
        Density::new(RatFn::poly(p), weight)
    }

    pub fn is_zero(&self) -> bool {
        self.func.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Density::new(self.func.scale(c), self.weight)
    }

    /// Sum of two densities of equal weight.
    pub fn add(&self, other: &Density) -> Result<Density, GeometryError> {
        if self.weight != other.weight {
            return Err(GeometryError::WrongWeight(self.weight, other.weight));
        }
        Ok(Density::new(&self.func + &other.func, self.weight))
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dz)^{}", self.func, self.weight)
    }
}

/// `f•g`: product of functions, weights add.
pub fn density_mul(u: &Density, v: &Density) -> Density {
    Density::new(&u.func * &v.func, u.weight + v.weight)
}

/// `{u, v} = (μ f′g − λ f g′)(dz)^{λ+μ+1}`.
pub fn density_bracket(u: &Density, v: &Density) -> Density {
    let lambda = u.weight.to_scalar();
    let mu = v.weight.to_scalar();
    let left = (&u.func.derivative() * &v.func).scale(&mu);
    let right = (&u.func * &v.func.derivative()).scale(&lambda);
    Density::new(&left - &right, u.weight + v.weight + 1)
}

/// The Jordan product on functions ⊕ half-densities.
///
/// With `unital` the function/half-density factor ½ becomes 1.
pub fn jkn_product(u: &Density, v: &Density, unital: bool) -> Result<Density, GeometryError> {
    let (f, h) = (WEIGHT_FUNCTION, WEIGHT_HALF);
    match (u.weight, v.weight) {
        (a, b) if a == f && b == f => Ok(density_mul(u, v)),
        (a, b) if (a == f && b == h) || (a == h && b == f) => {
            let c = if unital { Scalar::ONE } else { Scalar::half() };
            Ok(density_mul(u, v).scale(&c))
        }
        (a, b) if a == h && b == h => Ok(density_bracket(u, v)),
        (a, b) => Err(GeometryError::WrongWeight(a, b)),
    }
}

/// The Lie bracket on vector fields ⊕ half-densities.
pub fn lkn_bracket(u: &Density, v: &Density) -> Result<Density, GeometryError> {
    let (w, h) = (WEIGHT_VECTOR_FIELD, WEIGHT_HALF);
    match (u.weight, v.weight) {
        (a, b) if a == h && b == h => Ok(density_mul(u, v).scale(&Scalar::half())),
        (a, b) if (a == w || a == h) && (b == w || b == h) => Ok(density_bracket(u, v)),
        (a, b) => Err(GeometryError::WrongWeight(a, b)),
    }
}

/// `z^r (z² − α²)^k` for `n = 2k + r`.
fn g_function(alpha: &Scalar, n: i64) -> RatFn {
    let k = n.div_euclid(2);
    let quad = Poly::from_coeffs(vec![-(alpha * alpha), Scalar::ZERO, Scalar::ONE]);
    let base = RatFn::poly(quad).powi(k).expect("z² − α² is nonzero");
    if n.rem_euclid(2) == 1 {
        &base * &RatFn::poly(Poly::z())
    } else {
        base
    }
}

fn z_power(n: i64) -> RatFn {
    RatFn::poly(Poly::z()).powi(n).expect("z is nonzero")
}

/// The density attached to a basis symbol.
///
/// Three punctures: `G_n` (weight 0), `V_n = G_{n+1}` (weight −1) and
/// `phi_i = √2·G_{i+1/2}` (weight −1/2). Two punctures: `eps_n = z^n`,
/// `L_n = z^{n+1}` (weight −1) and `phi_i = z^{i+1/2}` (weight −1/2).
pub fn make_kn_basis(cfg: &GeometryConfig, key: &BasisKey) -> Result<Density, GeometryError> {
    let mismatch = || GeometryError::FamilyMismatch {
        key: *key,
        config: cfg.label(),
    };
    let idx = key.index;
    match (&cfg.punctures, key.family) {
        (Punctures::Three { .. }, fam) => {
            let alpha = cfg.alpha().expect("three punctures");
            match fam {
                Family::G => Ok(Density::new(g_function(&alpha, int(idx)), WEIGHT_FUNCTION)),
                Family::V => Ok(Density::new(g_function(&alpha, int(idx) + 1), WEIGHT_VECTOR_FIELD)),
                Family::Phi => {
                    let f = g_function(&alpha, int(idx + HalfInt::plus_half(0)));
                    Ok(Density::new(f.scale(&Scalar::sqrt2()), WEIGHT_HALF))
                }
                _ => Err(mismatch()),
            }
        }
        (Punctures::Two, Family::Eps) => Ok(Density::new(z_power(int(idx)), WEIGHT_FUNCTION)),
        (Punctures::Two, Family::L) => Ok(Density::new(z_power(int(idx) + 1), WEIGHT_VECTOR_FIELD)),
        (Punctures::Two, Family::Phi) => Ok(Density::new(
            z_power(int(idx + HalfInt::plus_half(0))),
            WEIGHT_HALF,
        )),
        _ => Err(mismatch()),
    }
}

fn int(h: HalfInt) -> i64 {
    h.as_int().expect("index parity is enforced by BasisKey")
}

/// The `n`-th function of the standard basis: `G_n` for three punctures, `z^n` for two.
pub fn basis_function(cfg: &GeometryConfig, n: i64) -> RatFn {
    match cfg.alpha() {
        Some(alpha) => g_function(&alpha, n),
        None => z_power(n),
    }
}

/// Coordinates `(n, c)` of a function in the basis of [`basis_function`].
pub fn expand_function(cfg: &GeometryConfig, f: &RatFn) -> Result<Vec<(i64, Scalar)>, GeometryError> {
    match cfg.alpha() {
        Some(alpha) => expand_three(&alpha, f),
        None => expand_two(f),
    }
}

/// Coordinates of a density in the basis of [`make_kn_basis`].
pub fn expand_in_basis(cfg: &GeometryConfig, d: &Density) -> Result<Vector, GeometryError> {
    // Coefficients on the weight-independent functions (G_m or z^m).
    let coords: Vec<(i64, Scalar)> = match &cfg.punctures {
        Punctures::Three { .. } => expand_three(&cfg.alpha().expect("three punctures"), &d.func)?,
        Punctures::Two => expand_two(&d.func)?,
    };
    let three = matches!(cfg.punctures, Punctures::Three { .. });
    let inv_sqrt2 = Scalar::sqrt2().inv().expect("nonzero");
    let mut out = Vector::zero();
    for (m, c) in coords {
        let (key, c) = match d.weight {
            w if w == WEIGHT_FUNCTION => {
                let fam = if three { Family::G } else { Family::Eps };
                (BasisKey::int(fam, m), c)
            }
            w if w == WEIGHT_VECTOR_FIELD => {
                let fam = if three { Family::V } else { Family::L };
                (BasisKey::int(fam, m - 1), c)
            }
            w if w == WEIGHT_HALF => {
                let c = if three { &c * &inv_sqrt2 } else { c };
                (BasisKey::twice(Family::Phi, 2 * m - 1), c)
            }
            w => return Err(GeometryError::NoBasis(w)),
        };
        out.add_term(key, &c);
    }
    Ok(out)
}

fn expand_three(alpha: &Scalar, f: &RatFn) -> Result<Vec<(i64, Scalar)>, GeometryError> {
    let m = f.den().degree().unwrap_or(0);
    let quad = Poly::from_coeffs(vec![-(alpha * alpha), Scalar::ZERO, Scalar::ONE]);
    let (q, r) = quad.pow(m as u32).div_rem(f.den())?;
    if !r.is_zero() {
        return Err(GeometryError::NotInAlgebra(f.to_string()));
    }
    let mut p = f.num() * &q;
    let shift = 2 * m as i64;
    let mut out = Vec::new();
    while let Some(deg) = p.degree() {
        let c = p.leading().expect("nonzero").clone();
        let g = g_function(alpha, deg as i64);
        p = &p - &g.num().scale(&c);
        out.push((deg as i64 - shift, c));
    }
    Ok(out)
}

fn expand_two(f: &RatFn) -> Result<Vec<(i64, Scalar)>, GeometryError> {
    let Some((k, _)) = f.den().as_monomial() else {
        return Err(GeometryError::NotInAlgebra(f.to_string()));
    };
    Ok(f.num()
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j as i64 - k as i64, c.clone()))
        .collect())
}

/// Pulls a density in the coordinate `w = (z − α)/(z + α)` back to `z`.
///
/// The factor `(dw/dz)^λ = (2α)^λ (z + α)^{−2λ}` is exact because
/// `√(2α) = s√2`.
pub fn mobius_pullback(cfg: &GeometryConfig, d: &Density) -> Result<Density, GeometryError> {
    let s = cfg.sqrt_alpha().ok_or(GeometryError::NeedsThreePunctures)?;
    let alpha = Scalar::rational(s * s);
    let one = Scalar::ONE;
    let f = d.func.compose_mobius(&one, &-&alpha, &one, &alpha)?;
    let t = d.weight.twice();
    let c = (&Scalar::rational(s.clone()) * &Scalar::sqrt2()).pow(t as i32)?;
    let z_plus = RatFn::poly(Poly::from_coeffs(vec![alpha, one]));
    let factor = z_plus.powi(-t)?.scale(&c);
    Ok(Density::new(&f * &factor, d.weight))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three(s: i64) -> GeometryConfig {
        GeometryConfig::three(Rational::from_int(s)).unwrap()
    }

    fn key(s: &str) -> BasisKey {
        s.parse().unwrap()
    }

    fn poly(cs: &[i64], w: HalfInt) -> Density {
        Density::poly(Poly::from_ints(cs), w)
    }

    #[test]
    fn density_operations() {
        let z = poly(&[0, 1], WEIGHT_FUNCTION);
        let zf = poly(&[0, 1], WEIGHT_VECTOR_FIELD);
        assert_eq!(density_mul(&z, &zf), poly(&[0, 0, 1], WEIGHT_VECTOR_FIELD));
        let one = poly(&[1], WEIGHT_HALF);
        assert_eq!(density_mul(&one, &one), poly(&[1], WEIGHT_VECTOR_FIELD));
        // {L_0, L_1} = L_1
        let l1 = poly(&[0, 0, 1], WEIGHT_VECTOR_FIELD);
        assert_eq!(density_bracket(&zf, &l1), l1);
        assert!(density_bracket(&l1, &l1).is_zero());
    }

    #[test]
    fn three_puncture_products() {
        let cfg = three(1);
        let b = |s: &str| make_kn_basis(&cfg, &key(s)).unwrap();
        // √2(z²−1) • √2 z(z²−1) = 2z(z²−1)²
        let prod = density_mul(&b("phi_3/2"), &b("phi_5/2"));
        let want = &Poly::from_ints(&[0, 2]) * &Poly::from_ints(&[-1, 0, 1]).pow(2);
        assert_eq!(prod, Density::poly(want, WEIGHT_VECTOR_FIELD));
        let br = density_bracket(&b("phi_3/2"), &b("phi_5/2"));
        assert_eq!(expand_in_basis(&cfg, &br).unwrap(), Vector::basis(key("G_4")));
        let v = lkn_bracket(&b("V_1"), &b("V_3")).unwrap();
        assert_eq!(
            expand_in_basis(&cfg, &v).unwrap(),
            Vector::term(key("V_4"), Scalar::from_int(2))
        );
        let j = jkn_product(&b("G_2"), &b("phi_1/2"), false).unwrap();
        assert_eq!(
            expand_in_basis(&cfg, &j).unwrap(),
            Vector::term(key("phi_5/2"), Scalar::half())
        );
    }

    #[test]
    fn basis_examples() {
        let cfg = three(3);
        assert_eq!(
            make_kn_basis(&cfg, &key("G_2")).unwrap(),
            poly(&[-81, 0, 1], WEIGHT_FUNCTION)
        );
        assert_eq!(make_kn_basis(&cfg, &key("G_0")).unwrap(), poly(&[1], WEIGHT_FUNCTION));
        assert_eq!(
            make_kn_basis(&cfg, &key("phi_-1/2")).unwrap(),
            Density::poly(Poly::constant(Scalar::sqrt2()), WEIGHT_HALF)
        );
        assert!(make_kn_basis(&cfg, &key("eps_1")).is_err());
    }

    #[test]
    fn expansion_roundtrip_and_errors() {
        for s in [1, 2, 3] {
            let cfg = three(s);
            for fam in ["G", "V"] {
                for n in -6..=6 {
                    let k = key(&format!("{fam}_{n}"));
                    let d = make_kn_basis(&cfg, &k).unwrap();
                    assert_eq!(expand_in_basis(&cfg, &d).unwrap(), Vector::basis(k));
                }
            }
            for t in (-13..=13).step_by(2) {
                let k = BasisKey::twice(Family::Phi, t);
                let d = make_kn_basis(&cfg, &k).unwrap();
                assert_eq!(expand_in_basis(&cfg, &d).unwrap(), Vector::basis(k));
            }
        }
        let cfg = three(1);
        let z2 = poly(&[0, 0, 1], WEIGHT_FUNCTION);
        assert_eq!(
            expand_in_basis(&cfg, &z2).unwrap(),
            &Vector::basis(key("G_2")) + &Vector::basis(key("G_0"))
        );
        let bad = Density::new(
            RatFn::new(Poly::one(), Poly::from_ints(&[-1, 1])).unwrap(),
            WEIGHT_FUNCTION,
        );
        assert!(matches!(
            expand_in_basis(&three(2), &bad),
            Err(GeometryError::NotInAlgebra(_))
        ));
    }

    #[test]
    fn pullback_examples() {
        let cfg = three(2);
        let w = Density::poly(Poly::z(), WEIGHT_FUNCTION);
        let got = mobius_pullback(&cfg, &w).unwrap();
        let want = RatFn::new(Poly::from_ints(&[-4, 1]), Poly::from_ints(&[4, 1])).unwrap();
        assert_eq!(got.func, want);
        let one = Density::poly(Poly::one(), WEIGHT_VECTOR_FIELD);
        let got = mobius_pullback(&cfg, &one).unwrap();
        let zp = Poly::from_ints(&[4, 1]);
        assert_eq!(got.func, RatFn::poly(&zp * &zp).scale(&Scalar::from_ratio(1, 8)));
        let half = Density::poly(Poly::one(), WEIGHT_HALF);
        let got = mobius_pullback(&cfg, &half).unwrap();
        let c = (&Scalar::from_int(2) * &Scalar::sqrt2()).inv().unwrap();
        assert_eq!(got.func, RatFn::poly(zp.clone()).scale(&c));
    }
}
