//! The adjoint Lie superalgebra of a Lie antialgebra.
//!
//! The odd part is the odd part `A₁` of the antialgebra and the even part is
//! `A₁ ⊗ A₁` modulo symmetry and `ax ⊗ b = a ⊗ bx`. On a finite window the
//! relations are row-reduced once, and every even element is kept in its
//! canonical form modulo their span.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::{Graded, Kind, SuperAlgebra};
use crate::doubling::{doubled_to_keys, key_to_doubled, ring_mul, DoubledAlgebra, DoubledElem, DoublingOp, Flavor, RingElem, RingSpec, Sigma};
use crate::error::{Error, Result};
use crate::kernel::{BasisKey, EchelonBasis, Family, LinComb, Parity, Rational, Scalar, Vector};
use crate::presentations::AlgebraHandle;

/// Order used when choosing canonical representatives: large indices are eliminated first.
fn key_rank(k: &BasisKey) -> (i64, i64, Family) {
    let t = k.index.twice();
    (t.abs(), t, k.family)
}

/// The symmetric product `a ⊙ b` of two odd basis elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct OddPair {
    pub left: BasisKey,
    pub right: BasisKey,
}

impl OddPair {
    pub fn new(a: BasisKey, b: BasisKey) -> Self {
        if key_rank(&a) <= key_rank(&b) {
            OddPair { left: a, right: b }
        } else {
            OddPair { left: b, right: a }
        }
    }

    fn max_index(&self) -> i64 {
        self.left.index.twice().abs().max(self.right.index.twice().abs())
    }
}

impl Ord for OddPair {
    fn cmp(&self, other: &Self) -> Ordering {
        (key_rank(&self.right), key_rank(&self.left)).cmp(&(key_rank(&other.right), key_rank(&other.left)))
    }
}

impl PartialOrd for OddPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OddPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊙{}", self.left, self.right)
    }
}

/// Basis symbol of the adjoint superalgebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum OvsKey {
    Odd(BasisKey),
    Pair(OddPair),
}

impl fmt::Display for OvsKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OvsKey::Odd(k) => write!(f, "{k}"),
            OvsKey::Pair(p) => write!(f, "({p})"),
        }
    }
}

impl Serialize for OvsKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Graded for OvsKey {
    fn parity(&self) -> Parity {
        match self {
            OvsKey::Odd(_) => Parity::Odd,
            OvsKey::Pair(_) => Parity::Even,
        }
    }
}

pub type OvsElem = LinComb<OvsKey>;

/// `Σ c d (a ⊙ b)` for `u = Σ c a`, `v = Σ d b`.
pub fn pair_product(u: &Vector, v: &Vector) -> LinComb<OddPair> {
    let mut out = LinComb::zero();
    for (a, c) in u {
        for (b, d) in v {
            out.add_term(OddPair::new(*a, *b), &(c * d));
        }
    }
    out
}

fn pairs_to_ovs(v: &LinComb<OddPair>) -> OvsElem {
    v.map_keys(|p| OvsKey::Pair(*p))
}

fn odd_to_ovs(v: &Vector) -> OvsElem {
    v.map_keys(|k| OvsKey::Odd(*k))
}

/// The defining bracket on representatives, before any reduction.
pub fn raw_bracket<A: SuperAlgebra<Key = BasisKey>>(alg: &A, u: &OvsKey, v: &OvsKey) -> Result<OvsElem> {
    let b = |k: &BasisKey| Vector::basis(*k);
    // a(bc) + b(ac)
    let act = |p: &OddPair, c: &BasisKey| -> Result<Vector> {
        let bc = alg.mul_basis(&p.right, c)?;
        let ac = alg.mul_basis(&p.left, c)?;
        Ok(&alg.mul(&b(&p.left), &bc)? + &alg.mul(&b(&p.right), &ac)?)
    };
    Ok(match (u, v) {
        (OvsKey::Odd(a), OvsKey::Odd(c)) => pairs_to_ovs(&LinComb::basis(OddPair::new(*a, *c))),
        (OvsKey::Pair(p), OvsKey::Odd(c)) => odd_to_ovs(&act(p, c)?),
        (OvsKey::Odd(c), OvsKey::Pair(p)) => -&odd_to_ovs(&act(p, c)?),
        (OvsKey::Pair(p), OvsKey::Pair(q)) => {
            // 2 a(bc) ⊙ d + 2 b(ad) ⊙ c
            let (a, bb, c, d) = (&p.left, &p.right, &q.left, &q.right);
            let abc = alg.mul(&b(a), &alg.mul_basis(bb, c)?)?;
            let bad = alg.mul(&b(bb), &alg.mul_basis(a, d)?)?;
            let two = Scalar::from_int(2);
            let s = &pair_product(&abc, &b(d)) + &pair_product(&bad, &b(c));
            pairs_to_ovs(&s.scale(&two))
        }
    })
}

/// The relation span on a window, with canonical forms for even elements.
pub struct QuotientWindow<'a, A> {
    alg: &'a A,
    window: i64,
    odd: Vec<BasisKey>,
    members: BTreeSet<BasisKey>,
    relations: EchelonBasis<OddPair>,
    generators: usize,
}

/// Builds the window quotient from all basis elements of `basis` with `|index| ≤ window`.
///
/// A relation `ax ⊙ b − a ⊙ bx` is used only when both products stay inside
/// the window, so representatives near the boundary may be under-reduced.
pub fn build_quotient<'a, A: SuperAlgebra<Key = BasisKey>>(
    alg: &'a A,
    basis: &[BasisKey],
    window: i64,
) -> Result<QuotientWindow<'a, A>> {
    if alg.kind() != Kind::Antialgebra {
        return Err(Error::ModeMismatch(format!("the adjoint construction needs an antialgebra, got {}", alg.kind())));
    }
    let members: BTreeSet<BasisKey> = basis.iter().copied().filter(|k| k.index.twice().abs() <= 2 * window).collect();
    let odd: Vec<BasisKey> = members.iter().copied().filter(|k| k.parity() == Parity::Odd).collect();
    let even: Vec<BasisKey> = members.iter().copied().filter(|k| k.parity() == Parity::Even).collect();
    let mut relations = EchelonBasis::untracked();
    let mut generators = 0;
    for x in &even {
        let mut acts = Vec::with_capacity(odd.len());
        for a in &odd {
            let ax = alg.mul_basis(a, x)?;
            let inside = ax.keys().all(|k| members.contains(k));
            acts.push(if inside { Some(ax) } else { None });
        }
        for i in 0..odd.len() {
            for j in i + 1..odd.len() {
                let (Some(ax), Some(bx)) = (&acts[i], &acts[j]) else {
                    continue;
                };
                let rel = &pair_product(ax, &Vector::basis(odd[j])) - &pair_product(&Vector::basis(odd[i]), bx);
                generators += 1;
                relations.insert(&rel);
            }
        }
    }
    Ok(QuotientWindow {
        alg,
        window,
        odd,
        members,
        relations,
        generators,
    })
}

/// [`build_quotient`] on the handle's own basis.
pub fn build_quotient_for(h: &AlgebraHandle, window: i64) -> Result<QuotientWindow<'_, AlgebraHandle>> {
    build_quotient(h, &h.basis(window), window)
}

impl<'a, A: SuperAlgebra<Key = BasisKey>> QuotientWindow<'a, A> {
    pub fn algebra(&self) -> &'a A {
        self.alg
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    pub fn relation_generators(&self) -> usize {
        self.generators
    }

    pub fn odd_basis(&self) -> &[BasisKey] {
        &self.odd
    }

    /// Number of symmetric pairs of odd window elements.
    pub fn pair_count(&self) -> usize {
        self.odd.len() * (self.odd.len() + 1) / 2
    }

    /// Dimension of the even part on the window.
    pub fn even_dimension(&self) -> usize {
        self.pair_count() - self.relation_rank()
    }

    /// Canonical representatives of the even part, one per non-pivot pair.
    pub fn even_basis(&self) -> Vec<OddPair> {
        let mut out = Vec::new();
        for (i, a) in self.odd.iter().enumerate() {
            for b in &self.odd[i..] {
                let p = OddPair::new(*a, *b);
                if !self.relations.is_pivot(&p) {
                    out.push(p);
                }
            }
        }
        out.sort();
        out
    }

    /// The canonical form of an element; fails if it involves pairs outside the window.
    pub fn canonical(&self, v: &OvsElem) -> Result<OvsElem> {
        let mut pairs = LinComb::zero();
        let mut odd = Vector::zero();
        for (k, c) in v {
            match k {
                OvsKey::Odd(b) => odd.add_term(*b, c),
                OvsKey::Pair(p) => {
                    if !self.members.contains(&p.left) || !self.members.contains(&p.right) {
                        return Err(Error::WindowExceeded(format!("{p} (window {})", self.window)));
                    }
                    pairs.add_term(*p, c);
                }
            }
        }
        Ok(&odd_to_ovs(&odd) + &pairs_to_ovs(&self.relations.reduce(&pairs)))
    }

    /// The canonical form of `a ⊙ b`.
    pub fn pair(&self, a: &Vector, b: &Vector) -> Result<OvsElem> {
        self.canonical(&pairs_to_ovs(&pair_product(a, b)))
    }

    pub fn bracket(&self, u: &OvsElem, v: &OvsElem) -> Result<OvsElem> {
        self.mul(u, v)
    }

    /// Every bracket of two basis elements of the window, in canonical form.
    pub fn table(&self) -> Result<Vec<(OvsKey, OvsKey, OvsElem)>> {
        let mut basis: Vec<OvsKey> = self.odd.iter().map(|k| OvsKey::Odd(*k)).collect();
        basis.extend(self.even_basis().into_iter().map(OvsKey::Pair));
        let mut out = Vec::new();
        for a in &basis {
            for b in &basis {
                out.push((*a, *b, self.mul_basis(a, b)?));
            }
        }
        Ok(out)
    }
}

impl<A: SuperAlgebra<Key = BasisKey>> SuperAlgebra for QuotientWindow<'_, A> {
    type Key = OvsKey;

    fn kind(&self) -> Kind {
        Kind::Lie
    }

    fn parity(&self, key: &OvsKey) -> Parity {
        match key {
            OvsKey::Odd(_) => Parity::Odd,
            OvsKey::Pair(_) => Parity::Even,
        }
    }

    fn mul_basis(&self, a: &OvsKey, b: &OvsKey) -> Result<OvsElem> {
        self.canonical(&raw_bracket(self.alg, a, b)?)
    }
}

/// `ηa ⊙ ηb ↦ ab` for a full-derivation doubling; the result is named in the Lie flavor.
pub fn unital_identify(spec: &RingSpec, p: &OddPair) -> Result<RingElem> {
    let a = key_to_doubled(spec, &p.left, Flavor::Jordan)?;
    let b = key_to_doubled(spec, &p.right, Flavor::Jordan)?;
    ring_mul(&a.odd, &b.odd)
}

/// Transports an adjoint element to the Lie doubling.
fn identify_elem(spec: &RingSpec, v: &OvsElem) -> Result<Vector> {
    let mut out = Vector::zero();
    for (k, c) in v {
        let d = match k {
            OvsKey::Odd(b) => key_to_doubled(spec, b, Flavor::Jordan)?,
            OvsKey::Pair(p) => DoubledElem::even(unital_identify(spec, p)?),
        };
        out.add_scaled(&doubled_to_keys(&d, Flavor::Lie), c);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentificationReport {
    pub ring: String,
    pub window: i64,
    pub brackets_checked: u64,
    pub mismatches: u64,
    pub relations_checked: u64,
    pub relations_not_killed: u64,
    pub first_mismatch: Option<String>,
}

impl IdentificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.relations_not_killed == 0
    }
}

/// Checks that `ηa ⊙ ηb ↦ ab` kills the relations and carries the adjoint
/// bracket to the Lie doubling bracket on window generators.
pub fn check_unital_identification(spec: &RingSpec, window: i64) -> Result<IdentificationReport> {
    let alg = DoubledAlgebra::new(spec.clone(), DoublingOp::Jordan(Sigma::Half));
    let lie = DoubledAlgebra::new(spec.clone(), DoublingOp::Lie);
    let basis = alg.basis(window);
    let odd: Vec<BasisKey> = basis.iter().copied().filter(|k| k.parity() == Parity::Odd).collect();
    let even: Vec<BasisKey> = basis.iter().copied().filter(|k| k.parity() == Parity::Even).collect();
    let mut report = IdentificationReport {
        ring: spec.to_string(),
        window,
        brackets_checked: 0,
        mismatches: 0,
        relations_checked: 0,
        relations_not_killed: 0,
        first_mismatch: None,
    };
    for x in &even {
        for (i, a) in odd.iter().enumerate() {
            for b in &odd[i + 1..] {
                let ax = alg.mul_basis(a, x)?;
                let bx = alg.mul_basis(b, x)?;
                let rel = &pair_product(&ax, &Vector::basis(*b)) - &pair_product(&Vector::basis(*a), &bx);
                report.relations_checked += 1;
                if !identify_elem(spec, &pairs_to_ovs(&rel))?.is_zero() {
                    report.relations_not_killed += 1;
                }
            }
        }
    }
    let mut keys: Vec<OvsKey> = odd.iter().map(|k| OvsKey::Odd(*k)).collect();
    for (i, a) in odd.iter().enumerate() {
        for b in &odd[i..] {
            keys.push(OvsKey::Pair(OddPair::new(*a, *b)));
        }
    }
    for u in &keys {
        for v in &keys {
            let via_ovs = identify_elem(spec, &raw_bracket(&alg, u, v)?)?;
            let iu = identify_elem(spec, &OvsElem::basis(*u))?;
            let iv = identify_elem(spec, &OvsElem::basis(*v))?;
            let via_lie = lie.mul(&iu, &iv)?;
            report.brackets_checked += 1;
            if via_ovs != via_lie {
                report.mismatches += 1;
                report
                    .first_mismatch
                    .get_or_insert_with(|| format!("[{u}, {v}]: {via_ovs} vs {via_lie}"));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsomorphismReport {
    pub sqrt_alpha: Rational,
    pub window: i64,
    pub quotient_window: i64,
    pub brackets_checked: u64,
    pub bracket_violations: u64,
    pub first_violation: Option<String>,
    pub image_rank: usize,
    pub even_dimension: usize,
    pub pairs_outside_image: u64,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.bracket_violations == 0 && self.image_rank == self.even_dimension && self.pairs_outside_image == 0
    }
}

/// `V_n ↦ 2 (dz)^{-1/2} ⊙ G_{n+1}(dz)^{-1/2} = phi_{-1/2} ⊙ phi_{n+1/2}` and `phi_i ↦ phi_i`.
pub fn vector_field_image(k: &BasisKey) -> OvsElem {
    match k.family {
        Family::V => {
            let n = k.index.as_int().expect("integer index");
            let p = OddPair::new(BasisKey::twice(Family::Phi, -1), BasisKey::twice(Family::Phi, 2 * n + 1));
            OvsElem::basis(OvsKey::Pair(p))
        }
        _ => OvsElem::basis(OvsKey::Odd(*k)),
    }
}

/// Checks that vector fields ⊕ half-densities on three punctures map
/// isomorphically onto the adjoint superalgebra of the Jordan superalgebra
/// of functions ⊕ half-densities, on `|index| ≤ window`.
pub fn check_three_point_isomorphism(s: &Rational, window: i64) -> Result<IsomorphismReport> {
    let lie = AlgebraHandle::l03(s)?;
    let jordan = AlgebraHandle::j03(s)?;
    let qw = 2 * window + 4;
    let q = build_quotient_for(&jordan, qw)?;
    let image = |v: &Vector| -> Result<OvsElem> {
        let mut out = OvsElem::zero();
        for (k, c) in v {
            out.add_scaled(&vector_field_image(k), c);
        }
        q.canonical(&out)
    };
    let mut report = IsomorphismReport {
        sqrt_alpha: s.clone(),
        window,
        quotient_window: qw,
        brackets_checked: 0,
        bracket_violations: 0,
        first_violation: None,
        image_rank: 0,
        even_dimension: 0,
        pairs_outside_image: 0,
    };
    let basis = lie.basis(window);
    for u in &basis {
        for v in &basis {
            let lhs = image(&lie.mul_basis(u, v)?)?;
            let rhs = q.bracket(&image(&Vector::basis(*u))?, &image(&Vector::basis(*v))?)?;
            report.brackets_checked += 1;
            if lhs != rhs {
                report.bracket_violations += 1;
                report
                    .first_violation
                    .get_or_insert_with(|| format!("[{u}, {v}]: {lhs} vs {rhs}"));
            }
        }
    }
    let to_pairs = |v: &OvsElem| -> LinComb<OddPair> {
        LinComb::from_terms(v.iter().filter_map(|(k, c)| match k {
            OvsKey::Pair(p) => Some((*p, c.clone())),
            OvsKey::Odd(_) => None,
        }))
    };
    // Rank of the image of the vector fields in the window.
    let mut span = EchelonBasis::untracked();
    for n in -window..=window {
        span.insert(&to_pairs(&image(&Vector::basis(BasisKey::int(Family::V, n)))?));
    }
    report.image_rank = span.rank();
    report.even_dimension = (2 * window + 1) as usize;
    // Every pair of window half-densities is hit by some vector field.
    let mut wide = EchelonBasis::untracked();
    for n in -2 * window - 2..=2 * window + 2 {
        wide.insert(&to_pairs(&image(&Vector::basis(BasisKey::int(Family::V, n)))?));
    }
    let phis: Vec<BasisKey> = jordan.basis(window).into_iter().filter(|k| k.family == Family::Phi).collect();
    for (i, a) in phis.iter().enumerate() {
        for b in &phis[i..] {
            let p = OddPair::new(*a, *b);
            debug_assert!(p.max_index() <= 2 * window);
            if !wide.contains(&to_pairs(&q.canonical(&pairs_to_ovs(&LinComb::basis(p)))?)) {
                report.pairs_outside_image += 1;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_identities, Coverage, Identity};

    fn k(s: &str) -> BasisKey {
        s.parse().unwrap()
    }

    #[test]
    fn pair_is_symmetric() {
        assert_eq!(OddPair::new(k("a_1/2"), k("a_-3/2")), OddPair::new(k("a_-3/2"), k("a_1/2")));
    }

    #[test]
    fn odd_bracket_is_the_pair() {
        let h = AlgebraHandle::ak1();
        let q = build_quotient_for(&h, 3).unwrap();
        let got = q.mul_basis(&OvsKey::Odd(k("a_-1/2")), &OvsKey::Odd(k("a_1/2"))).unwrap();
        let want = q.pair(&Vector::basis(k("a_-1/2")), &Vector::basis(k("a_1/2"))).unwrap();
        assert_eq!(got, want);
        assert!(!got.is_zero());
    }

    #[test]
    fn ak1_quotient_matches_k1() {
        // The even part is spanned by one class per total index.
        let h = AlgebraHandle::ak1();
        let q = build_quotient_for(&h, 4).unwrap();
        let shifted = q.pair(&Vector::basis(k("a_3/2")), &Vector::basis(k("a_-1/2"))).unwrap();
        let base = q.pair(&Vector::basis(k("a_1/2")), &Vector::basis(k("a_1/2"))).unwrap();
        assert!(!base.is_zero());
        // a_{3/2}⊙a_{-1/2} and a_{1/2}⊙a_{1/2} both sit at total index 1.
        let ratio = shifted.iter().next().unwrap().1.checked_div(base.iter().next().unwrap().1).unwrap();
        assert_eq!(shifted, base.scale(&ratio));
    }

    #[test]
    fn adjoint_is_lie_on_inner_window() {
        let h = AlgebraHandle::ak1();
        let q = build_quotient_for(&h, 9).unwrap();
        let mut keys: Vec<OvsKey> = h.basis(2).into_iter().filter(|k| k.parity() == Parity::Odd).map(OvsKey::Odd).collect();
        for p in q.even_basis() {
            if p.max_index() <= 4 {
                keys.push(OvsKey::Pair(p));
            }
        }
        let r = check_identities(&q, &keys, &[Identity::SL1, Identity::SL2], Coverage::Exhaustive).unwrap();
        assert!(r.passed(), "{:?}", r.outcomes);
    }

    #[test]
    fn window_exceeded_is_reported() {
        let h = AlgebraHandle::ak1();
        let q = build_quotient_for(&h, 2).unwrap();
        let far = q.pair(&Vector::basis(k("a_7/2")), &Vector::basis(k("a_1/2")));
        assert!(matches!(far, Err(Error::WindowExceeded(_))));
    }

    #[test]
    fn lie_input_rejected() {
        let h = AlgebraHandle::k1();
        assert!(matches!(build_quotient_for(&h, 2), Err(Error::ModeMismatch(_))));
    }

    #[test]
    fn unital_identification_examples() {
        let spec = RingSpec::hyperelliptic(Rational::from_int(2), 1).unwrap();
        // η1 ⊙ η1 ↦ 1 with η1 = a_{-1/2}
        let one = unital_identify(&spec, &OddPair::new(k("a_-1/2"), k("a_-1/2"))).unwrap();
        assert_eq!(one, RingElem::one(&spec));
        // ηy ⊙ η(xy) ↦ x y²
        let got = unital_identify(&spec, &OddPair::new(k("a_1/2"), k("b_1/2"))).unwrap();
        assert_eq!(got, RingElem::x_y_pow(&spec, 2).unwrap());
        let r = check_unital_identification(&spec, 2).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn three_point_isomorphism_small() {
        let r = check_three_point_isomorphism(&Rational::ONE, 2).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
