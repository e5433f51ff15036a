use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{BasisKey, Scalar};

/// A finite formal linear combination `Σ c_k·k` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

/// Linear combinations of basis symbols: the universal element type.
pub type Vector = LinComb<BasisKey>;

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Scalar::ONE)
    }

    pub fn term(k: K, c: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(k, &c);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Scalar)>>(it: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in it {
            v.add_term(k, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Scalar {
        self.terms.get(k).cloned().unwrap_or(Scalar::ZERO)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Largest key in the support.
    pub fn leading(&self) -> Option<(&K, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, k: K, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), &(x * c));
        }
    }

    /// `u + c·v`.
    pub fn linear(u: &Self, v: &Self, c: &Scalar) -> Self {
        let mut out = u.clone();
        out.add_scaled(v, c);
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    pub fn map_keys<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> J) -> LinComb<J> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Bilinear extension of a rule defined on basis pairs.
    pub fn bilinear<J: Ord + Clone, E>(
        &self,
        other: &Self,
        mut rule: impl FnMut(&K, &K) -> Result<LinComb<J>, E>,
    ) -> Result<LinComb<J>, E> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_scaled(&rule(a, b)?, &(x * y));
            }
        }
        Ok(out)
    }

    /// Linear extension of a rule defined on basis elements.
    pub fn linear_map<J: Ord + Clone, E>(
        &self,
        mut rule: impl FnMut(&K) -> Result<LinComb<J>, E>,
    ) -> Result<LinComb<J>, E> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            out.add_scaled(&rule(a)?, x);
        }
        Ok(out)
    }

    pub(crate) fn range_below(&self, bound: Option<&K>) -> Option<&K> {
        match bound {
            None => self.terms.keys().next_back(),
            Some(b) => self.terms.range(..b.clone()).next_back().map(|(k, _)| k),
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<'a, K: Ord + Clone> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: Self) -> LinComb<K> {
        LinComb::linear(self, rhs, &Scalar::ONE)
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: Self) -> LinComb<K> {
        LinComb::linear(self, rhs, &-Scalar::ONE)
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&-Scalar::ONE)
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{k}")?;
            } else if c.as_rational().is_some() {
                write!(f, "{c}*{k}")?;
            } else {
                write!(f, "({c})*{k}")?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{k:?}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<K> {
    key: K,
    coeff: Scalar,
}

impl<K: Ord + Clone + Serialize> Serialize for LinComb<K> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr<K>> = self
            .terms
            .iter()
            .map(|(k, c)| TermRepr {
                key: k.clone(),
                coeff: c.clone(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de, K: Ord + Clone + Deserialize<'de>> Deserialize<'de> for LinComb<K> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr<K>>::deserialize(deserializer)?;
        Ok(terms.into_iter().map(|t| (t.key, t.coeff)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Family;

    fn g(n: i64) -> Vector {
        Vector::basis(BasisKey::int(Family::G, n))
    }

    #[test]
    fn cancellation_prunes() {
        let v = Vector::linear(&g(2), &(-&g(2)), &Scalar::ONE);
        assert!(v.is_zero());
        let phi = |t| Vector::basis(BasisKey::twice(Family::Phi, t));
        assert_eq!(Vector::linear(&phi(1), &phi(3), &Scalar::ZERO), phi(1));
        assert_eq!(Vector::linear(&g(2), &g(0), &Scalar::ONE).len(), 2);
    }

    #[test]
    fn json_roundtrip() {
        let v = Vector::linear(&g(2), &g(-1), &Scalar::new(1.into(), (-3).into()));
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[{"key":"G_-1","coeff":"1-3*r2"},{"key":"G_2","coeff":"1"}]"#);
        assert_eq!(serde_json::from_str::<Vector>(&s).unwrap(), v);
    }
}
