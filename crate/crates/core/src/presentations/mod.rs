//! Named algebra instances given by explicit structure-constant tables.

mod tables;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Kind, SuperAlgebra};
use crate::error::{Error, Result};
use crate::kernel::{BasisKey, Family, HalfInt, Parity, Rational, Scalar, Vector};

#[derive(Clone, Debug, PartialEq)]
enum Rule {
    A03 { alpha2: Scalar },
    G03 { alpha2: Scalar },
    L03 { alpha2: Scalar },
    J03 { alpha2: Scalar, unital: bool },
    Ak1,
    K1,
    Witt,
    Jsigma { theta: Scalar, p: i64, sigma: Scalar },
    Lthetap { theta: Scalar, p: i64 },
    JTorus { t1: Scalar, t2: Scalar, sigma: Scalar },
    LTorus { t1: Scalar, t2: Scalar },
}

/// A predicate selecting basis keys, with a human-readable description.
#[derive(Clone)]
pub struct KeyFilter {
    description: String,
    pred: Arc<dyn Fn(&BasisKey) -> bool + Send + Sync>,
}

impl KeyFilter {
    pub fn new(description: impl Into<String>, pred: impl Fn(&BasisKey) -> bool + Send + Sync + 'static) -> Self {
        KeyFilter {
            description: description.into(),
            pred: Arc::new(pred),
        }
    }

    pub fn accepts(&self, k: &BasisKey) -> bool {
        (self.pred)(k)
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// Keeps `fam_i` with `i ≡ residue (mod modulus)` per listed family; other families pass.
    pub fn sublattice(description: impl Into<String>, rules: Vec<(Family, HalfInt, i64)>) -> Self {
        KeyFilter::new(description, move |k| {
            rules
                .iter()
                .filter(|(f, _, _)| *f == k.family)
                .all(|(_, r, m)| (k.index - *r).twice().rem_euclid(2 * m) == 0)
        })
    }

    /// Keeps `fam_i` with `i ≤ bound` per listed family; other families pass.
    pub fn upper_bounds(description: impl Into<String>, rules: Vec<(Family, HalfInt)>) -> Self {
        KeyFilter::new(description, move |k| {
            rules
                .iter()
                .filter(|(f, _)| *f == k.family)
                .all(|(_, b)| k.index <= *b)
        })
    }
}

impl fmt::Debug for KeyFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KeyFilter({})", self.description)
    }
}

/// A named algebra: product table, kind tag and parameter bindings.
#[derive(Clone, Debug)]
pub struct AlgebraHandle {
    name: String,
    kind: Kind,
    params: Vec<(String, String)>,
    families: Vec<Family>,
    rule: Rule,
    filter: Option<KeyFilter>,
}

/// One row of a product table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableEntry {
    pub left: BasisKey,
    pub right: BasisKey,
    pub result: Vector,
}

pub const ALGEBRA_NAMES: [&str; 12] = [
    "A03", "g03", "L03", "J03", "J03u", "AK1", "K1", "Witt", "Jsigma", "Lthetap", "JTorus", "LTorus",
];

/// Parameter bindings used when constructing algebras by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub s: Rational,
    pub theta: Rational,
    pub p: i64,
    pub sigma: Rational,
    pub theta1: Rational,
    pub theta2: Rational,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            s: Rational::ONE,
            theta: Rational::ONE,
            p: -1,
            sigma: Rational::new(1, 2),
            theta1: Rational::ONE,
            theta2: Rational::ONE,
        }
    }
}

impl Params {
    /// Sets one binding from text, e.g. `("theta", "3/2")`.
    pub fn set(&mut self, name: &str, value: &str) -> Result<()> {
        let bad = || Error::InvalidParameter(format!("cannot parse {name}={value}"));
        let r = || value.parse::<Rational>().map_err(|_| bad());
        match name {
            "s" => self.s = r()?,
            "theta" => self.theta = r()?,
            "sigma" => self.sigma = r()?,
            "theta1" => self.theta1 = r()?,
            "theta2" => self.theta2 = r()?,
            "p" => self.p = value.parse().map_err(|_| bad())?,
            _ => return Err(Error::InvalidParameter(format!("unknown parameter {name}"))),
        }
        Ok(())
    }
}

fn check_sigma(sigma: &Rational) -> Result<Scalar> {
    if *sigma == Rational::ONE || *sigma == Rational::new(1, 2) {
        Ok(Scalar::rational(sigma.clone()))
    } else {
        Err(Error::InvalidParameter(format!("sigma must be 1 or 1/2, got {sigma}")))
    }
}

/// `s` is the square root of the puncture parameter, so `alpha^2 = s^4`.
fn alpha_squared(s: &Rational) -> Result<Scalar> {
    if s.is_zero() {
        return Err(Error::InvalidParameter("sqrt(alpha) must be nonzero".into()));
    }
    let alpha = s * s;
    Ok(Scalar::rational(&alpha * &alpha))
}

fn check_theta_p(theta: &Rational, p: i64) -> Result<Scalar> {
    if theta.is_zero() || p == 0 {
        return Err(Error::InvalidParameter(format!(
            "theta and p must be nonzero, got theta = {theta}, p = {p}"
        )));
    }
    Ok(Scalar::rational(theta.clone()))
}

impl AlgebraHandle {
    fn build(name: &str, kind: Kind, params: Vec<(&str, String)>, families: &[Family], rule: Rule) -> Self {
        AlgebraHandle {
            name: name.to_string(),
            kind,
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            families: families.to_vec(),
            rule,
            filter: None,
        }
    }

    /// Functions on the three-punctured sphere.
    pub fn a03(s: &Rational) -> Result<Self> {
        let alpha2 = alpha_squared(s)?;
        Ok(Self::build("A03", Kind::Associative, vec![("s", s.to_string())], &[Family::G], Rule::A03 { alpha2 }))
    }

    /// Vector fields on the three-punctured sphere.
    pub fn g03(s: &Rational) -> Result<Self> {
        let alpha2 = alpha_squared(s)?;
        Ok(Self::build("g03", Kind::Lie, vec![("s", s.to_string())], &[Family::V], Rule::G03 { alpha2 }))
    }

    /// The Lie superalgebra of vector fields and half-densities, three punctures.
    pub fn l03(s: &Rational) -> Result<Self> {
        let alpha2 = alpha_squared(s)?;
        Ok(Self::build(
            "L03",
            Kind::Lie,
            vec![("s", s.to_string())],
            &[Family::V, Family::Phi],
            Rule::L03 { alpha2 },
        ))
    }

    /// The Jordan superalgebra (Lie antialgebra) of functions and half-densities.
    pub fn j03(s: &Rational) -> Result<Self> {
        let alpha2 = alpha_squared(s)?;
        Ok(Self::build(
            "J03",
            Kind::Antialgebra,
            vec![("s", s.to_string())],
            &[Family::G, Family::Phi],
            Rule::J03 { alpha2, unital: false },
        ))
    }

    /// Unital variant of [`AlgebraHandle::j03`]; a Jordan superalgebra but not an antialgebra.
    pub fn j03_unital(s: &Rational) -> Result<Self> {
        let alpha2 = alpha_squared(s)?;
        Ok(Self::build(
            "J03u",
            Kind::Jordan,
            vec![("s", s.to_string())],
            &[Family::G, Family::Phi],
            Rule::J03 { alpha2, unital: true },
        ))
    }

    pub fn ak1() -> Self {
        Self::build("AK1", Kind::Antialgebra, vec![], &[Family::Eps, Family::SmallA], Rule::Ak1)
    }

    /// The Neveu-Schwarz superalgebra.
    pub fn k1() -> Self {
        Self::build("K1", Kind::Lie, vec![], &[Family::L, Family::A], Rule::K1)
    }

    pub fn witt() -> Self {
        Self::build("Witt", Kind::Lie, vec![], &[Family::L], Rule::Witt)
    }

    pub fn jsigma(theta: &Rational, p: i64, sigma: &Rational) -> Result<Self> {
        let th = check_theta_p(theta, p)?;
        let sg = check_sigma(sigma)?;
        let kind = if sg.is_one() { Kind::Jordan } else { Kind::Antialgebra };
        Ok(Self::build(
            "Jsigma",
            kind,
            vec![("theta", theta.to_string()), ("p", p.to_string()), ("sigma", sigma.to_string())],
            &[Family::SmallX, Family::SmallY, Family::SmallA, Family::SmallB],
            Rule::Jsigma { theta: th, p, sigma: sg },
        ))
    }

    pub fn lthetap(theta: &Rational, p: i64) -> Result<Self> {
        let th = check_theta_p(theta, p)?;
        Ok(Self::build(
            "Lthetap",
            Kind::Lie,
            vec![("theta", theta.to_string()), ("p", p.to_string())],
            &[Family::L, Family::H, Family::A, Family::B],
            Rule::Lthetap { theta: th, p },
        ))
    }

    pub fn jtorus(theta1: &Rational, theta2: &Rational, sigma: &Rational) -> Result<Self> {
        let sg = check_sigma(sigma)?;
        let kind = if sg.is_one() { Kind::Jordan } else { Kind::Antialgebra };
        Ok(Self::build(
            "JTorus",
            kind,
            vec![
                ("theta1", theta1.to_string()),
                ("theta2", theta2.to_string()),
                ("sigma", sigma.to_string()),
            ],
            &[Family::SmallX, Family::SmallY, Family::SmallA, Family::SmallB],
            Rule::JTorus {
                t1: Scalar::rational(theta1.clone()),
                t2: Scalar::rational(theta2.clone()),
                sigma: sg,
            },
        ))
    }

    pub fn ltorus(theta1: &Rational, theta2: &Rational) -> Self {
        Self::build(
            "LTorus",
            Kind::Lie,
            vec![("theta1", theta1.to_string()), ("theta2", theta2.to_string())],
            &[Family::L, Family::H, Family::A, Family::B],
            Rule::LTorus {
                t1: Scalar::rational(theta1.clone()),
                t2: Scalar::rational(theta2.clone()),
            },
        )
    }

    /// Builds an instance from one of [`ALGEBRA_NAMES`].
    pub fn by_name(name: &str, p: &Params) -> Result<Self> {
        match name {
            "A03" => Self::a03(&p.s),
            "g03" => Self::g03(&p.s),
            "L03" => Self::l03(&p.s),
            "J03" => Self::j03(&p.s),
            "J03u" => Self::j03_unital(&p.s),
            "AK1" => Ok(Self::ak1()),
            "K1" => Ok(Self::k1()),
            "Witt" => Ok(Self::witt()),
            "Jsigma" => Self::jsigma(&p.theta, p.p, &p.sigma),
            "Lthetap" => Self::lthetap(&p.theta, p.p),
            "JTorus" => Self::jtorus(&p.theta1, &p.theta2, &p.sigma),
            "LTorus" => Ok(Self::ltorus(&p.theta1, &p.theta2)),
            other => Err(Error::UnknownAlgebra(other.to_string())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &[(String, String)] {
        &self.params
    }

    /// The value bound to a parameter name, as written at construction.
    pub fn param(&self, name: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| v.as_str())
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn filter(&self) -> Option<&KeyFilter> {
        self.filter.as_ref()
    }

    /// Largest distance (in index units) between `i + j` and any index of the product.
    pub fn shift_bound(&self) -> i64 {
        match &self.rule {
            Rule::A03 { .. } | Rule::G03 { .. } | Rule::L03 { .. } | Rule::J03 { .. } => 2,
            Rule::Ak1 | Rule::K1 | Rule::Witt => 0,
            Rule::Jsigma { p, .. } | Rule::Lthetap { p, .. } => 2 * p.abs(),
            Rule::JTorus { .. } | Rule::LTorus { .. } => 4,
        }
    }

    /// Whether `key` is a basis element of this (possibly restricted) algebra.
    pub fn contains(&self, key: &BasisKey) -> bool {
        self.families.contains(&key.family) && self.filter.as_ref().is_none_or(|f| f.accepts(key))
    }

    /// All basis keys with `|index| ≤ window`, ordered by family then index.
    pub fn basis(&self, window: i64) -> Vec<BasisKey> {
        let mut out = Vec::new();
        for &fam in &self.families {
            for t in -2 * window..=2 * window {
                if fam.half_integer_index() == (t % 2 == 0) {
                    continue;
                }
                let k = BasisKey::twice(fam, t);
                if self.contains(&k) {
                    out.push(k);
                }
            }
        }
        out
    }

    /// Every product of basis elements in the window.
    pub fn table(&self, window: i64) -> Result<Vec<TableEntry>> {
        let basis = self.basis(window);
        let mut out = Vec::with_capacity(basis.len() * basis.len());
        for a in &basis {
            for b in &basis {
                out.push(TableEntry {
                    left: *a,
                    right: *b,
                    result: self.mul_basis(a, b)?,
                });
            }
        }
        Ok(out)
    }

    /// Restricts to the keys accepted by `filter`, after checking closure on the window.
    pub fn subalgebra_select(&self, filter: KeyFilter, window: i64) -> Result<AlgebraHandle> {
        let mut sub = self.clone();
        sub.name = format!("{}|{}", self.name, filter.description());
        sub.filter = Some(filter);
        let basis = sub.basis(window);
        for a in &basis {
            for b in &basis {
                let prod = self.mul_basis(a, b)?;
                let outside = prod.keys().find(|k| !sub.contains(k)).copied();
                if let Some(outside) = outside {
                    return Err(Error::ClosureViolation {
                        left: *a,
                        right: *b,
                        outside,
                    });
                }
            }
        }
        Ok(sub)
    }

    fn raw_product(&self, a: &BasisKey, b: &BasisKey) -> Vector {
        let (ta, tb) = (a.index.twice(), b.index.twice());
        let out = match &self.rule {
            Rule::A03 { alpha2 } => tables::a03(alpha2, ta, tb),
            Rule::G03 { alpha2 } => tables::g03(alpha2, ta, tb),
            Rule::L03 { alpha2 } => tables::l03(alpha2, a, b),
            Rule::J03 { alpha2, unital } => tables::j03(alpha2, *unital, a, b),
            Rule::Ak1 => tables::ak1(a, b),
            Rule::K1 => tables::k1(a, b),
            Rule::Witt => tables::witt(a, b),
            Rule::Jsigma { theta, p, sigma } => tables::jsigma(theta, *p, sigma, a, b),
            Rule::Lthetap { theta, p } => tables::lthetap(theta, *p, a, b),
            Rule::JTorus { t1, t2, sigma } => tables::jtorus(t1, t2, sigma, a, b),
            Rule::LTorus { t1, t2 } => tables::ltorus(t1, t2, a, b),
        };
        out.done()
    }
}

impl SuperAlgebra for AlgebraHandle {
    type Key = BasisKey;

    fn kind(&self) -> Kind {
        self.kind
    }

    fn parity(&self, key: &BasisKey) -> Parity {
        key.parity()
    }

    fn mul_basis(&self, a: &BasisKey, b: &BasisKey) -> Result<Vector> {
        for k in [a, b] {
            if !self.families.contains(&k.family) {
                return Err(Error::UnknownFamily {
                    key: k.to_string(),
                    algebra: self.name.clone(),
                });
            }
            if self.filter.as_ref().is_some_and(|f| !f.accepts(k)) {
                return Err(Error::NotInSubalgebra(format!("{k} in {}", self.name)));
            }
        }
        Ok(self.raw_product(a, b))
    }
}

#[cfg(test)]
mod tests;
