//! Commutative rings with a derivation and the two doubling constructions
//! that turn them into Jordan and Lie superalgebras.
//!
//! Ring elements have the canonical form `f(y) + x·g(y)` with `x² = r(y)`,
//! and the derivation is `D = x∂_y + (r'/2)∂_x`.

mod laurent;

use std::fmt;

use serde::Serialize;

pub use laurent::LaurentPoly;

use crate::algebra::{Kind, SuperAlgebra};
use crate::crosscheck::{compare_products, CrossCheckReport};
use crate::error::{Error, Result};
use crate::kernel::{BasisKey, Family, HalfInt, Parity, Rational, Scalar, Vector};
use crate::presentations::AlgebraHandle;

/// The defining relation of the ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RingSpec {
    /// Laurent polynomials in `y` with `D = ∂_y`; there is no `x`.
    Laurent,
    /// `x² = 1 + θ y^{2p}`.
    Hyperelliptic { theta: Rational, p: i64 },
    /// `x² = 1 − θ₁ y² − θ₂ y⁴`.
    Torus { theta1: Rational, theta2: Rational },
}

impl RingSpec {
    pub fn hyperelliptic(theta: Rational, p: i64) -> Result<Self> {
        if theta.is_zero() || p == 0 {
            return Err(Error::InvalidParameter(format!(
                "theta and p must be nonzero, got theta = {theta}, p = {p}"
            )));
        }
        Ok(RingSpec::Hyperelliptic { theta, p })
    }

    pub fn torus(theta1: Rational, theta2: Rational) -> Self {
        RingSpec::Torus { theta1, theta2 }
    }

    /// `r(y)` with `x² = r(y)`, or `None` for the Laurent ring.
    pub fn relation(&self) -> Option<LaurentPoly> {
        match self {
            RingSpec::Laurent => None,
            RingSpec::Hyperelliptic { theta, p } => Some(&LaurentPoly::one() + &LaurentPoly::monomial(theta.clone().into(), 2 * p)),
            RingSpec::Torus { theta1, theta2 } => Some(LaurentPoly::from_terms([
                (0, Scalar::ONE),
                (2, -Scalar::rational(theta1.clone())),
                (4, -Scalar::rational(theta2.clone())),
            ])),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Laurent => f.write_str("Laurent"),
            RingSpec::Hyperelliptic { theta, p } => write!(f, "x^2 = 1 + {theta}*y^{}", 2 * p),
            RingSpec::Torus { theta1, theta2 } => write!(f, "x^2 = 1 - {theta1}*y^2 - {theta2}*y^4"),
        }
    }
}

/// `f(y) + x·g(y)` in the ring given by `spec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElem {
    pub spec: RingSpec,
    pub f: LaurentPoly,
    pub g: LaurentPoly,
}

impl RingElem {
    pub fn new(spec: &RingSpec, f: LaurentPoly, g: LaurentPoly) -> Result<Self> {
        if *spec == RingSpec::Laurent && !g.is_zero() {
            return Err(Error::Unsupported("the Laurent ring has no x".into()));
        }
        Ok(RingElem { spec: spec.clone(), f, g })
    }

    pub fn zero(spec: &RingSpec) -> Self {
        RingElem { spec: spec.clone(), f: LaurentPoly::zero(), g: LaurentPoly::zero() }
    }

    pub fn one(spec: &RingSpec) -> Self {
        Self::y_pow(spec, 0)
    }

    /// `y^n`.
    pub fn y_pow(spec: &RingSpec, n: i64) -> Self {
        RingElem { spec: spec.clone(), f: LaurentPoly::y_pow(n), g: LaurentPoly::zero() }
    }

    /// `x·y^n`.
    pub fn x_y_pow(spec: &RingSpec, n: i64) -> Result<Self> {
        Self::new(spec, LaurentPoly::zero(), LaurentPoly::y_pow(n))
    }

    pub fn x(spec: &RingSpec) -> Result<Self> {
        Self::x_y_pow(spec, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        RingElem { spec: self.spec.clone(), f: self.f.scale(c), g: self.g.scale(c) }
    }

    pub fn add(&self, other: &RingElem) -> Result<Self> {
        same_spec(self, other)?;
        Ok(RingElem { spec: self.spec.clone(), f: &self.f + &other.f, g: &self.g + &other.g })
    }

    pub fn sub(&self, other: &RingElem) -> Result<Self> {
        self.add(&other.scale(&-Scalar::ONE))
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.f.is_zero(), self.g.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.f),
            (true, false) => write!(f, "{}", XPart(&self.g)),
            (false, false) => write!(f, "{} + {}", self.f, XPart(&self.g)),
        }
    }
}

/// `x·g`, without parentheses when `g` is a bare power of `y`.
struct XPart<'a>(&'a LaurentPoly);

impl fmt::Display for XPart<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = self.0.terms();
        match (terms.next(), terms.next()) {
            (Some((0, c)), None) if c.is_one() => f.write_str("x"),
            (Some((n, c)), None) if c.is_one() => write!(f, "x*y^{n}"),
            _ => write!(f, "x*({})", self.0),
        }
    }
}

fn same_spec(u: &RingElem, v: &RingElem) -> Result<()> {
    if u.spec == v.spec {
        Ok(())
    } else {
        Err(Error::SpecMismatch)
    }
}

/// Product in the ring, reduced by `x² = r(y)`.
pub fn ring_mul(u: &RingElem, v: &RingElem) -> Result<RingElem> {
    same_spec(u, v)?;
    let mut f = &u.f * &v.f;
    let g = &(&u.f * &v.g) + &(&u.g * &v.f);
    if let Some(r) = u.spec.relation() {
        f = &f + &(&r * &(&u.g * &v.g));
    }
    Ok(RingElem { spec: u.spec.clone(), f, g })
}

/// `D(f + x g) = r g' + (r'/2) g + x f'`; plain `∂_y` on the Laurent ring.
pub fn ring_derive(u: &RingElem) -> RingElem {
    let df = u.f.derivative();
    match u.spec.relation() {
        None => RingElem { spec: u.spec.clone(), f: df, g: LaurentPoly::zero() },
        Some(r) => {
            let half_dr = r.derivative().scale(&Scalar::half());
            let f = &(&r * &u.g.derivative()) + &(&half_dr * &u.g);
            RingElem { spec: u.spec.clone(), f, g: df }
        }
    }
}

/// Number of monomial pairs `m₁, m₂ ∈ {y^k, x y^k : |k| ≤ n}` violating
/// `D(m₁m₂) = D(m₁)m₂ + m₁D(m₂)`.
pub fn leibniz_violations(spec: &RingSpec, n: i64) -> Result<u64> {
    let mut monos = Vec::new();
    for k in -n..=n {
        monos.push(RingElem::y_pow(spec, k));
        if *spec != RingSpec::Laurent {
            monos.push(RingElem::x_y_pow(spec, k)?);
        }
    }
    let mut bad = 0;
    for a in &monos {
        for b in &monos {
            let lhs = ring_derive(&ring_mul(a, b)?);
            let rhs = ring_mul(&ring_derive(a), b)?.add(&ring_mul(a, &ring_derive(b))?)?;
            if lhs != rhs {
                bad += 1;
            }
        }
    }
    Ok(bad)
}

/// `even + η·odd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledElem {
    pub even: RingElem,
    pub odd: RingElem,
}

impl DoubledElem {
    pub fn even(a: RingElem) -> Self {
        let odd = RingElem::zero(&a.spec);
        DoubledElem { even: a, odd }
    }

    /// `η a`.
    pub fn odd(a: RingElem) -> Self {
        let even = RingElem::zero(&a.spec);
        DoubledElem { even, odd: a }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }
}

impl fmt::Display for DoubledElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => write!(f, "{}", self.even),
            (true, false) => write!(f, "eta*({})", self.odd),
            (false, false) => write!(f, "{} + eta*({})", self.even, self.odd),
        }
    }
}

/// The Jordan doubling parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sigma {
    /// Vector type: `1` is a unit.
    One,
    /// Full derivation type: `1` is a half-unit and the result is a Lie antialgebra.
    Half,
}

impl Sigma {
    pub fn scalar(self) -> Scalar {
        match self {
            Sigma::One => Scalar::ONE,
            Sigma::Half => Scalar::half(),
        }
    }

    pub fn from_rational(r: &Rational) -> Result<Self> {
        if *r == Rational::ONE {
            Ok(Sigma::One)
        } else if *r == Rational::new(1, 2) {
            Ok(Sigma::Half)
        } else {
            Err(Error::InvalidParameter(format!("sigma must be 1 or 1/2, got {r}")))
        }
    }
}

/// `a D(b) − D(a) b`.
fn wronskian(a: &RingElem, b: &RingElem) -> Result<RingElem> {
    ring_mul(a, &ring_derive(b))?.sub(&ring_mul(&ring_derive(a), b)?)
}

/// The Jordan doubling: `a∘b = ab`, `a∘ηb = σ η(ab)`, `ηa∘ηb = aD(b) − D(a)b`.
pub fn jad_product(sigma: Sigma, u: &DoubledElem, v: &DoubledElem) -> Result<DoubledElem> {
    let s = sigma.scalar();
    let even = ring_mul(&u.even, &v.even)?.add(&wronskian(&u.odd, &v.odd)?)?;
    let odd = ring_mul(&u.even, &v.odd)?.add(&ring_mul(&u.odd, &v.even)?)?.scale(&s);
    Ok(DoubledElem { even, odd })
}

/// The Lie doubling: `[a,b] = aD(b) − D(a)b`, `[a,ηb] = η(aD(b) − ½D(a)b)`, `[ηa,ηb] = ab`.
pub fn lad_bracket(u: &DoubledElem, v: &DoubledElem) -> Result<DoubledElem> {
    let even = wronskian(&u.even, &v.even)?.add(&ring_mul(&u.odd, &v.odd)?)?;
    let half_action = |a: &RingElem, b: &RingElem| -> Result<RingElem> {
        ring_mul(a, &ring_derive(b))?.sub(&ring_mul(&ring_derive(a), b)?.scale(&Scalar::half()))
    };
    let odd = half_action(&u.even, &v.odd)?.sub(&half_action(&v.even, &u.odd)?)?;
    Ok(DoubledElem { even, odd })
}

/// Which naming scheme to use for the doubled basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Flavor {
    /// `x_n = yⁿ`, `y_n = xyⁿ`, `a_{n−½} = ηyⁿ`, `b_{n−½} = ηxyⁿ`.
    Jordan,
    /// `L_n = y^{n+1}`, `H_n = xy^{n+1}`, `A_{n−½} = ηyⁿ`, `B_{n−½} = ηxyⁿ`.
    Lie,
    /// `eps_n = yⁿ`, `a_{n−½} = (1/√2)·ηyⁿ`, matching the two-puncture antialgebra.
    Laurent,
}

impl Flavor {
    /// Families for `(f, g, ηf, ηg)`.
    fn families(self) -> [Family; 4] {
        match self {
            Flavor::Jordan => [Family::SmallX, Family::SmallY, Family::SmallA, Family::SmallB],
            Flavor::Lie => [Family::L, Family::H, Family::A, Family::B],
            Flavor::Laurent => [Family::Eps, Family::SmallY, Family::SmallA, Family::SmallB],
        }
    }

    fn even_shift(self) -> i64 {
        match self {
            Flavor::Lie => 1,
            _ => 0,
        }
    }

    fn odd_scale(self) -> Scalar {
        match self {
            Flavor::Laurent => Scalar::sqrt2(),
            _ => Scalar::ONE,
        }
    }
}

/// Coordinates of a doubled element in the named basis.
pub fn doubled_to_keys(u: &DoubledElem, flavor: Flavor) -> Vector {
    let [ff, fg, fa, fb] = flavor.families();
    let shift = flavor.even_shift();
    let odd_c = flavor.odd_scale();
    let mut out = Vector::zero();
    for (n, c) in u.even.f.terms() {
        out.add_term(BasisKey::int(ff, n - shift), c);
    }
    for (n, c) in u.even.g.terms() {
        out.add_term(BasisKey::int(fg, n - shift), c);
    }
    for (n, c) in u.odd.f.terms() {
        out.add_term(BasisKey::twice(fa, 2 * n - 1), &(c * &odd_c));
    }
    for (n, c) in u.odd.g.terms() {
        out.add_term(BasisKey::twice(fb, 2 * n - 1), &(c * &odd_c));
    }
    out
}

/// Inverse of [`doubled_to_keys`] on a single basis symbol.
pub fn key_to_doubled(spec: &RingSpec, key: &BasisKey, flavor: Flavor) -> Result<DoubledElem> {
    let [ff, fg, fa, fb] = flavor.families();
    let odd_exp = |i: HalfInt| (i + HalfInt::plus_half(0)).as_int().expect("half-integer index");
    let unknown = || Error::UnknownFamily {
        key: key.to_string(),
        algebra: format!("doubling of {spec}"),
    };
    let inv = flavor.odd_scale().inv()?;
    let fam = key.family;
    if fam == ff {
        let n = key.index.as_int().ok_or_else(unknown)?;
        Ok(DoubledElem::even(RingElem::y_pow(spec, n + flavor.even_shift())))
    } else if fam == fg && flavor != Flavor::Laurent {
        let n = key.index.as_int().ok_or_else(unknown)?;
        Ok(DoubledElem::even(RingElem::x_y_pow(spec, n + flavor.even_shift())?))
    } else if fam == fa {
        Ok(DoubledElem::odd(RingElem::y_pow(spec, odd_exp(key.index)).scale(&inv)))
    } else if fam == fb && flavor != Flavor::Laurent {
        Ok(DoubledElem::odd(RingElem::x_y_pow(spec, odd_exp(key.index))?.scale(&inv)))
    } else {
        Err(unknown())
    }
}

/// Which doubling product to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DoublingOp {
    Jordan(Sigma),
    Lie,
}

/// A doubled ring viewed as a superalgebra on named basis symbols.
#[derive(Clone, Debug)]
pub struct DoubledAlgebra {
    pub spec: RingSpec,
    pub op: DoublingOp,
    pub flavor: Flavor,
}

impl DoubledAlgebra {
    pub fn new(spec: RingSpec, op: DoublingOp) -> Self {
        let flavor = match (&spec, op) {
            (RingSpec::Laurent, DoublingOp::Jordan(_)) => Flavor::Laurent,
            (_, DoublingOp::Jordan(_)) => Flavor::Jordan,
            (_, DoublingOp::Lie) => Flavor::Lie,
        };
        DoubledAlgebra { spec, op, flavor }
    }

    pub fn product(&self, u: &DoubledElem, v: &DoubledElem) -> Result<DoubledElem> {
        match self.op {
            DoublingOp::Jordan(s) => jad_product(s, u, v),
            DoublingOp::Lie => lad_bracket(u, v),
        }
    }

    /// Basis symbols with `|index| ≤ window`.
    pub fn basis(&self, window: i64) -> Vec<BasisKey> {
        let fams = self.flavor.families();
        let used: &[Family] = if self.spec == RingSpec::Laurent { &[fams[0], fams[2]] } else { &fams };
        let mut out = Vec::new();
        for &fam in used {
            for t in -2 * window..=2 * window {
                if fam.half_integer_index() != (t % 2 == 0) {
                    out.push(BasisKey::twice(fam, t));
                }
            }
        }
        out
    }
}

impl SuperAlgebra for DoubledAlgebra {
    type Key = BasisKey;

    fn kind(&self) -> Kind {
        match self.op {
            DoublingOp::Jordan(Sigma::One) => Kind::Jordan,
            DoublingOp::Jordan(Sigma::Half) => Kind::Antialgebra,
            DoublingOp::Lie => Kind::Lie,
        }
    }

    fn parity(&self, key: &BasisKey) -> Parity {
        key.parity()
    }

    fn mul_basis(&self, a: &BasisKey, b: &BasisKey) -> Result<Vector> {
        let u = key_to_doubled(&self.spec, a, self.flavor)?;
        let v = key_to_doubled(&self.spec, b, self.flavor)?;
        Ok(doubled_to_keys(&self.product(&u, &v)?, self.flavor))
    }
}

fn rational_param(h: &AlgebraHandle, name: &str) -> Result<Rational> {
    Ok(h.param(name)
        .ok_or_else(|| Error::InvalidParameter(format!("{} has no parameter {name}", h.name())))?
        .parse()?)
}

/// The doubled ring that realizes a presentation instance.
pub fn doubling_for(h: &AlgebraHandle) -> Result<DoubledAlgebra> {
    let sigma = || Sigma::from_rational(&rational_param(h, "sigma")?);
    let hyper = || -> Result<RingSpec> {
        let p: i64 = h
            .param("p")
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| Error::InvalidParameter("missing p".into()))?;
        RingSpec::hyperelliptic(rational_param(h, "theta")?, p)
    };
    let torus = || -> Result<RingSpec> { Ok(RingSpec::torus(rational_param(h, "theta1")?, rational_param(h, "theta2")?)) };
    Ok(match h.name() {
        "Jsigma" => DoubledAlgebra::new(hyper()?, DoublingOp::Jordan(sigma()?)),
        "Lthetap" => DoubledAlgebra::new(hyper()?, DoublingOp::Lie),
        "JTorus" => DoubledAlgebra::new(torus()?, DoublingOp::Jordan(sigma()?)),
        "LTorus" => DoubledAlgebra::new(torus()?, DoublingOp::Lie),
        "AK1" => DoubledAlgebra::new(RingSpec::Laurent, DoublingOp::Jordan(Sigma::Half)),
        other => return Err(Error::Unsupported(format!("{other} is not given by a doubling"))),
    })
}

/// Compares a presentation table with the doubling products on the window.
pub fn cross_check_doubling(h: &AlgebraHandle, window: i64) -> Result<CrossCheckReport> {
    let d = doubling_for(h)?;
    compare_products(
        h.name(),
        &format!("doubling({})", d.spec),
        window,
        &h.basis(window),
        |a, b| h.mul_basis(a, b),
        |a, b| d.mul_basis(a, b),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyper(theta: i64, p: i64) -> RingSpec {
        RingSpec::hyperelliptic(Rational::from_int(theta), p).unwrap()
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(n, c)| (n, Scalar::from_int(c))))
    }

    #[test]
    fn ring_examples() {
        let spec = hyper(3, 2);
        let x = RingElem::x(&spec).unwrap();
        let y = RingElem::y_pow(&spec, 1);
        assert_eq!(ring_mul(&x, &x).unwrap().f, lp(&[(0, 1), (4, 3)]));
        assert_eq!(ring_mul(&y, &RingElem::y_pow(&spec, -1)).unwrap(), RingElem::one(&spec));
        let prod = ring_mul(&y.add(&x).unwrap(), &y.sub(&x).unwrap()).unwrap();
        assert_eq!(prod.f, lp(&[(2, 1), (0, -1), (4, -3)]));
        assert!(prod.g.is_zero());
    }

    #[test]
    fn derivation_examples() {
        let (theta, p) = (3, 2);
        let spec = hyper(theta, p);
        let y = RingElem::y_pow(&spec, 1);
        let x = RingElem::x(&spec).unwrap();
        assert_eq!(ring_derive(&y), x);
        let xy = ring_mul(&x, &y).unwrap();
        assert_eq!(ring_derive(&xy).f, lp(&[(0, 1), (2 * p, (1 + p) * theta)]));
        // y D(x^m) = p m x^{m+1} − p m x^{m−1} for θ = 1
        let spec = hyper(1, p);
        let x = RingElem::x(&spec).unwrap();
        let y = RingElem::y_pow(&spec, 1);
        let mut xm = RingElem::one(&spec);
        for m in 1..5i64 {
            let prev = xm.clone();
            xm = ring_mul(&xm, &x).unwrap();
            let lhs = ring_mul(&y, &ring_derive(&xm)).unwrap();
            let pm = Scalar::from_int(p * m);
            let rhs = ring_mul(&xm, &x).unwrap().sub(&prev).unwrap().scale(&pm);
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    #[test]
    fn leibniz_holds() {
        for spec in [hyper(2, -1), hyper(1, 3), RingSpec::torus(Rational::ONE, Rational::new(-1, 2)), RingSpec::Laurent] {
            assert_eq!(leibniz_violations(&spec, 8).unwrap(), 0, "{spec}");
        }
    }

    #[test]
    fn jordan_doubling_examples() {
        let (theta, p) = (5, 2);
        let spec = hyper(theta, p);
        let one = DoubledElem::odd(RingElem::one(&spec));
        assert!(jad_product(Sigma::Half, &one, &one).unwrap().is_zero());
        let eb = DoubledElem::odd(RingElem::y_pow(&spec, 3));
        let unit = DoubledElem::even(RingElem::one(&spec));
        assert_eq!(jad_product(Sigma::Half, &unit, &eb).unwrap(), DoubledElem::odd(RingElem::y_pow(&spec, 3).scale(&Scalar::half())));
        assert_eq!(jad_product(Sigma::One, &unit, &eb).unwrap(), eb);
        let ey = DoubledElem::odd(RingElem::y_pow(&spec, 1));
        let exy = DoubledElem::odd(RingElem::x_y_pow(&spec, 1).unwrap());
        let got = jad_product(Sigma::Half, &ey, &exy).unwrap();
        assert_eq!(got, DoubledElem::even(RingElem::y_pow(&spec, 2 * p + 1).scale(&Scalar::from_int(p * theta))));
    }

    #[test]
    fn lie_doubling_examples() {
        let (theta, p) = (2, 3);
        let spec = hyper(theta, p);
        let x = RingElem::x(&spec).unwrap();
        let y = RingElem::y_pow(&spec, 1);
        let got = lad_bracket(&DoubledElem::odd(y.clone()), &DoubledElem::odd(x.clone())).unwrap();
        assert_eq!(got, DoubledElem::even(ring_mul(&x, &y).unwrap()));
        let got = lad_bracket(&DoubledElem::even(y.clone()), &DoubledElem::even(x.clone())).unwrap();
        assert_eq!(got.even.f, lp(&[(2 * p, (p - 1) * theta), (0, -1)]));
        assert!(lad_bracket(&DoubledElem::even(x.clone()), &DoubledElem::even(x)).unwrap().is_zero());
    }

    #[test]
    fn key_translation() {
        let spec = hyper(1, 1);
        let y3 = DoubledElem::even(RingElem::y_pow(&spec, 3));
        assert_eq!(doubled_to_keys(&y3, Flavor::Jordan), Vector::basis("x_3".parse().unwrap()));
        let exy = DoubledElem::odd(RingElem::x_y_pow(&spec, 1).unwrap());
        assert_eq!(doubled_to_keys(&exy, Flavor::Jordan), Vector::basis("b_1/2".parse().unwrap()));
        let sum = DoubledElem::even(RingElem::x(&spec).unwrap().add(&RingElem::y_pow(&spec, 1)).unwrap());
        let expect: Vector = [("y_0", 1), ("x_1", 1)].iter().map(|(k, c)| (k.parse().unwrap(), Scalar::from_int(*c))).collect();
        assert_eq!(doubled_to_keys(&sum, Flavor::Jordan), expect);
        for flavor in [Flavor::Jordan, Flavor::Lie] {
            let alg = DoubledAlgebra { spec: spec.clone(), op: DoublingOp::Lie, flavor };
            for k in alg.basis(3) {
                let d = key_to_doubled(&spec, &k, flavor).unwrap();
                assert_eq!(doubled_to_keys(&d, flavor), Vector::basis(k));
            }
        }
    }

    #[test]
    fn spec_mismatch_is_an_error() {
        let a = RingElem::y_pow(&hyper(1, 1), 1);
        let b = RingElem::y_pow(&hyper(1, 2), 1);
        assert_eq!(ring_mul(&a, &b), Err(Error::SpecMismatch));
    }

    #[test]
    fn presentations_match_doubling() {
        let p = crate::presentations::Params::default();
        for name in ["Jsigma", "Lthetap", "JTorus", "LTorus", "AK1"] {
            let h = AlgebraHandle::by_name(name, &p).unwrap();
            let r = cross_check_doubling(&h, 3).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
