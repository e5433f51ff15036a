use std::collections::BTreeMap;

use super::{LinComb, Scalar};

#[derive(Clone, Debug)]
struct Row<K: Ord> {
    vec: LinComb<K>,
    /// The row as a combination of the inserted vectors.
    combo: LinComb<usize>,
}

/// Incrementally built echelon basis of a subspace, one row per pivot.
///
/// The pivot of a row is its largest key, so reducing a vector by descending
/// keys yields a unique representative modulo the span.
#[derive(Clone, Debug)]
pub struct EchelonBasis<K: Ord> {
    rows: BTreeMap<K, Row<K>>,
    inserted: usize,
    track: bool,
}

impl<K: Ord> Default for EchelonBasis<K> {
    fn default() -> Self {
        EchelonBasis {
            rows: BTreeMap::new(),
            inserted: 0,
            track: true,
        }
    }
}

impl<K: Ord + Clone> EchelonBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// A basis that does not record how rows arise from inserted vectors.
    ///
    /// Much cheaper when many dependent vectors are inserted; [`EchelonBasis::solve`]
    /// then always returns `None`.
    pub fn untracked() -> Self {
        EchelonBasis {
            track: false,
            ..Self::default()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    fn reduce_tracked(&self, v: &mut LinComb<K>, mut combo: Option<&mut LinComb<usize>>) {
        let mut bound: Option<K> = None;
        while let Some(k) = v.range_below(bound.as_ref()).cloned() {
            if let Some(row) = self.rows.get(&k) {
                let c = v.coeff(&k);
                v.add_scaled(&row.vec, &-&c);
                if let Some(cb) = combo.as_deref_mut() {
                    cb.add_scaled(&row.combo, &c);
                }
            }
            bound = Some(k);
        }
    }

    /// Canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let mut out = v.clone();
        self.reduce_tracked(&mut out, None);
        out
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let tag = self.inserted;
        self.inserted += 1;
        let mut vec = v.clone();
        let mut combo = LinComb::zero();
        self.reduce_tracked(&mut vec, self.track.then_some(&mut combo));
        let Some((pivot, lead)) = vec.leading() else {
            return false;
        };
        let pivot = pivot.clone();
        let inv = lead.inv().expect("leading coefficient is nonzero");
        // vec = v − combo·rows, so the new row is (v − combo)/lead.
        let mut combo = -&combo;
        if self.track {
            combo.add_term(tag, &Scalar::ONE);
        }
        self.rows.insert(
            pivot,
            Row {
                vec: vec.scale(&inv),
                combo: combo.scale(&inv),
            },
        );
        true
    }

    /// Coefficients `c` with `Σ c_i·inserted_i = target`, if the target lies in the span.
    pub fn solve(&self, target: &LinComb<K>) -> Option<Vec<Scalar>> {
        if !self.track {
            return None;
        }
        let mut rest = target.clone();
        let mut combo = LinComb::zero();
        self.reduce_tracked(&mut rest, Some(&mut combo));
        if !rest.is_zero() {
            return None;
        }
        Some((0..self.inserted).map(|i| combo.coeff(&i)).collect())
    }
}

/// Expresses `target` in terms of `rows`; `None` when it is outside their span.
pub fn solve_exact<K: Ord + Clone>(rows: &[LinComb<K>], target: &LinComb<K>) -> Option<Vec<Scalar>> {
    let mut ech = EchelonBasis::new();
    for r in rows {
        ech.insert(r);
    }
    ech.solve(target)
}

pub fn rank<K: Ord + Clone>(rows: &[LinComb<K>]) -> usize {
    let mut ech = EchelonBasis::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}
