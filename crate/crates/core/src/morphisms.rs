//! Homomorphisms between presented algebras, the Möbius embedding of the
//! two-puncture algebras, derivations, and extension of representations to the
//! adjoint superalgebra.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Graded, SuperAlgebra};
use crate::error::{Error, Result};
use crate::geometry::{
    density_bracket, density_mul, expand_in_basis, make_kn_basis, mobius_pullback, Density, GeometryConfig,
    WEIGHT_FUNCTION, WEIGHT_HALF, WEIGHT_VECTOR_FIELD,
};
use crate::kernel::{BasisKey, EchelonBasis, Family, HalfInt, LinComb, Parity, Rational, Scalar, Vector};
use crate::ovs::{build_quotient, vector_field_image, OvsElem, OvsKey, QuotientWindow};
use crate::presentations::{AlgebraHandle, Params};
use crate::representations::{check_representation, BracketKind, RepReport, Representation};

/// A linear map given by the images of source basis elements.
#[derive(Clone, Debug)]
pub struct HomSpec<K: Ord> {
    pub source: AlgebraHandle,
    pub target: String,
    pub images: BTreeMap<BasisKey, LinComb<K>>,
}

impl<K: Ord + Clone> HomSpec<K> {
    /// Images of every source basis element on `|index| ≤ window`.
    pub fn from_fn(
        source: AlgebraHandle,
        target: impl Into<String>,
        window: i64,
        mut f: impl FnMut(&BasisKey) -> Result<LinComb<K>>,
    ) -> Result<Self> {
        let mut images = BTreeMap::new();
        for k in source.basis(window) {
            images.insert(k, f(&k)?);
        }
        Ok(HomSpec {
            source,
            target: target.into(),
            images,
        })
    }

    pub fn image(&self, v: &Vector) -> Result<LinComb<K>> {
        let mut out = LinComb::zero();
        for (k, c) in v {
            let img = self
                .images
                .get(k)
                .ok_or_else(|| Error::WindowExceeded(format!("no image declared for {k}")))?;
            out.add_scaled(img, c);
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        HomSpec {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(|(k, v)| (*k, v.scale(c))).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HomReport {
    pub source: String,
    pub target: String,
    pub window: i64,
    pub pairs_checked: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
    pub parity_violations: u64,
    pub image_rank: usize,
    pub domain_dimension: usize,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.parity_violations == 0 && self.injective()
    }

    pub fn injective(&self) -> bool {
        self.image_rank == self.domain_dimension
    }
}

/// Checks `φ(uv) = φ(u)φ(v)` on all basis pairs with `|index| ≤ window`, and
/// that `φ` is injective there.
///
/// Images are compared as given, so for quotient targets they must already be
/// in canonical form.
pub fn check_homomorphism<T>(h: &HomSpec<T::Key>, target: &T, window: i64) -> Result<HomReport>
where
    T: SuperAlgebra,
    T::Key: Graded,
{
    let basis = h.source.basis(window);
    let mut report = HomReport {
        source: h.source.name().to_string(),
        target: h.target.clone(),
        window,
        pairs_checked: 0,
        violations: 0,
        first_violation: None,
        parity_violations: 0,
        image_rank: 0,
        domain_dimension: basis.len(),
    };
    let mut span = EchelonBasis::untracked();
    for u in &basis {
        let iu = h.image(&Vector::basis(*u))?;
        if iu.keys().any(|k| k.parity() != u.parity()) {
            report.parity_violations += 1;
        }
        span.insert(&iu);
        for v in &basis {
            let iv = h.image(&Vector::basis(*v))?;
            let lhs = h.image(&h.source.mul_basis(u, v)?)?;
            let rhs = target.mul(&iu, &iv)?;
            report.pairs_checked += 1;
            if lhs != rhs {
                report.violations += 1;
                report
                    .first_violation
                    .get_or_insert_with(|| format!("({u}, {v}): {lhs} vs {rhs}"));
            }
        }
    }
    report.image_rank = span.rank();
    Ok(report)
}

/// `V_n ↦ φ_{-1/2} ⊙ φ_{n+1/2}`, `φ_i ↦ φ_i` into a quotient window of the
/// adjoint superalgebra of the three-puncture Jordan superalgebra.
pub fn ovs_map_spec<A: SuperAlgebra<Key = BasisKey>>(
    source: AlgebraHandle,
    quotient: &QuotientWindow<'_, A>,
    window: i64,
) -> Result<HomSpec<OvsKey>> {
    HomSpec::from_fn(source, "ovs(J03)", window, |k| quotient.canonical(&vector_field_image(k)))
}

/// Checks the adjoint-superalgebra map on `|index| ≤ window`, scaled by `scale`
/// (1 for the genuine map).
pub fn check_ovs_map(s: &Rational, window: i64, scale: &Scalar) -> Result<HomReport> {
    let lie = AlgebraHandle::l03(s)?;
    let jordan = AlgebraHandle::j03(s)?;
    let q = build_quotient(&jordan, &jordan.basis(2 * window + 4), 2 * window + 4)?;
    let spec = ovs_map_spec(lie.clone(), &q, 2 * window + lie.shift_bound())?.scaled(scale);
    check_homomorphism(&spec, &q, window)
}

/// Sends a three-puncture basis key to the parity sublattice of the
/// hyperelliptic doubling at `θ = α²`, `p = -1`.
///
/// Even functions `G_n` go to `x_n` or `y_n` by the parity of `n`; vector
/// fields `V_n` go to `L_n` or `H_n` by the parity of `n + 1`; half-densities
/// `φ_i` go to `a_i` or `b_i` (`A_i` or `B_i`) by the parity of `i + 1/2`.
pub fn sublattice_image(k: &BasisKey) -> Result<Vector> {
    let even = |n: i64| n.rem_euclid(2) == 0;
    let family = match k.family {
        Family::G => {
            let n = k.index.as_int().expect("integer index");
            if even(n) { Family::SmallX } else { Family::SmallY }
        }
        Family::V => {
            let n = k.index.as_int().expect("integer index");
            if even(n + 1) { Family::L } else { Family::H }
        }
        Family::Phi => {
            let n = (k.index + HalfInt::plus_half(0)).as_int().expect("half-integer index");
            if even(n) { Family::SmallA } else { Family::SmallB }
        }
        _ => {
            return Err(Error::UnknownFamily {
                key: k.to_string(),
                algebra: "three-puncture sublattice map".into(),
            })
        }
    };
    Ok(Vector::basis(BasisKey { family, index: k.index }))
}

fn to_lie_families(v: &Vector) -> Vector {
    v.map_keys(|k| {
        let family = match k.family {
            Family::SmallA => Family::A,
            Family::SmallB => Family::B,
            f => f,
        };
        BasisKey { family, index: k.index }
    })
}

/// Checks the three-puncture algebras against the parity sublattice of the
/// hyperelliptic doublings with `θ = α²`, `p = -1`, `σ = 1/2`.
pub fn check_sublattice_correspondence(s: &Rational, window: i64) -> Result<(HomReport, HomReport)> {
    let alpha = s * s;
    let theta = &alpha * &alpha;
    let j03 = AlgebraHandle::j03(s)?;
    let jsig = AlgebraHandle::jsigma(&theta, -1, &Rational::new(1, 2))?;
    let span = 2 * window + j03.shift_bound() + 2;
    let spec = HomSpec::from_fn(j03, jsig.name(), span, sublattice_image)?;
    let jordan = check_homomorphism(&spec, &jsig, window)?;
    let l03 = AlgebraHandle::l03(s)?;
    let lth = AlgebraHandle::lthetap(&theta, -1)?;
    let spec = HomSpec::from_fn(l03, lth.name(), span, |k| Ok(to_lie_families(&sublattice_image(k)?)))?;
    let lie = check_homomorphism(&spec, &lth, window)?;
    Ok((jordan, lie))
}

/// One printed generator image and whether the pullback reproduced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrintedImage {
    pub source: String,
    pub expected: String,
    pub computed: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmbeddingReport {
    pub sqrt_alpha: Rational,
    pub source: String,
    pub target: String,
    pub window: i64,
    pub outside_subalgebra: u64,
    pub first_outside: Option<String>,
    pub relations: HomReport,
    pub printed: Vec<PrintedImage>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.outside_subalgebra == 0 && self.relations.passed() && self.printed.iter().all(|p| p.matches)
    }
}

/// The image of a two-puncture basis element under `w = (z − α)/(z + α)`,
/// written in the three-puncture basis.
pub fn pullback_image(cfg: &GeometryConfig, k: &BasisKey) -> Result<Vector> {
    let two = GeometryConfig::two();
    let (geo_key, scale) = match k.family {
        Family::Eps => (*k, Scalar::ONE),
        Family::SmallA | Family::A => (BasisKey { family: Family::Phi, ..*k }, Scalar::ONE),
        // The Neveu-Schwarz L_n is half the geometric vector field.
        Family::L => (*k, Scalar::half()),
        _ => {
            return Err(Error::UnknownFamily {
                key: k.to_string(),
                algebra: "two-puncture algebra".into(),
            })
        }
    };
    let d = make_kn_basis(&two, &geo_key)?;
    Ok(expand_in_basis(cfg, &mobius_pullback(cfg, &d)?)?.scale(&scale))
}

/// Largest index of each family in the image subalgebra.
fn image_bound(family: Family) -> HalfInt {
    match family {
        Family::G => HalfInt::int(0),
        Family::V => HalfInt::int(1),
        _ => HalfInt::plus_half(0),
    }
}

/// Pulls the two-puncture antialgebra (or, with `lie`, the Neveu-Schwarz
/// superalgebra) back to three punctures and checks that it lands in the
/// subalgebra bounded at infinity, preserves all products on `|index| ≤
/// window`, and reproduces the printed generator images.
pub fn check_embedding_iso_witt(s: &Rational, window: i64, lie: bool) -> Result<EmbeddingReport> {
    let cfg = GeometryConfig::three(s.clone())?;
    let (source, target) = if lie {
        (AlgebraHandle::k1(), AlgebraHandle::l03(s)?)
    } else {
        (AlgebraHandle::ak1(), AlgebraHandle::j03(s)?)
    };
    let spec = HomSpec::from_fn(source.clone(), target.name(), 2 * window + 2, |k| pullback_image(&cfg, k))?;
    let mut report = EmbeddingReport {
        sqrt_alpha: s.clone(),
        source: source.name().to_string(),
        target: target.name().to_string(),
        window,
        outside_subalgebra: 0,
        first_outside: None,
        relations: check_homomorphism(&spec, &target, window)?,
        printed: Vec::new(),
    };
    for (k, img) in &spec.images {
        if let Some(bad) = img.keys().find(|t| t.index > image_bound(t.family)) {
            report.outside_subalgebra += 1;
            report
                .first_outside
                .get_or_insert_with(|| format!("{k} ↦ {img} involves {bad}"));
        }
    }
    if !lie {
        let alpha = Scalar::rational(s * s);
        let a2 = &alpha * &alpha;
        let g = |n: i64| BasisKey::int(Family::G, n);
        let phi = |t: i64| BasisKey::twice(Family::Phi, t);
        let inv2s = Scalar::rational(Rational::from_int(2) * s.clone()).inv()?;
        let expected = [
            (
                BasisKey::int(Family::Eps, -1),
                "G_0 + 2αG_{-1} + 2α²G_{-2}",
                Vector::from_terms([(g(0), Scalar::ONE), (g(-1), &alpha * &Scalar::from_int(2)), (g(-2), &a2 * &Scalar::from_int(2))]),
            ),
            (BasisKey::int(Family::Eps, 0), "G_0", Vector::basis(g(0))),
            (
                BasisKey::twice(Family::SmallA, -1),
                "(φ_{1/2} + αφ_{-1/2})/(2√α)",
                Vector::from_terms([(phi(1), inv2s.clone()), (phi(-1), &alpha * &inv2s)]),
            ),
        ];
        for (k, label, want) in expected {
            let got = spec.image(&Vector::basis(k))?;
            report.printed.push(PrintedImage {
                source: k.to_string(),
                expected: label.to_string(),
                computed: got.to_string(),
                matches: got == want,
            });
        }
    }
    Ok(report)
}

/// A parity-homogeneous linear map on an algebra, defined on basis elements.
pub struct LinearMap<'a> {
    pub name: String,
    pub parity: Parity,
    rule: Rule<'a>,
}

type Rule<'a> = Box<dyn Fn(&BasisKey) -> Result<Vector> + 'a>;

impl<'a> LinearMap<'a> {
    pub fn new(name: impl Into<String>, parity: Parity, rule: impl Fn(&BasisKey) -> Result<Vector> + 'a) -> Self {
        LinearMap {
            name: name.into(),
            parity,
            rule: Box::new(rule),
        }
    }

    pub fn apply_basis(&self, k: &BasisKey) -> Result<Vector> {
        (self.rule)(k)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        v.linear_map(|k| self.apply_basis(k))
    }
}

impl fmt::Debug for LinearMap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearMap").field("name", &self.name).field("parity", &self.parity).finish()
    }
}

fn geometric_map<'a>(
    cfg: &'a GeometryConfig,
    name: String,
    parity: Parity,
    op: impl Fn(&Density) -> Density + 'a,
) -> LinearMap<'a> {
    LinearMap::new(name, parity, move |k| {
        let d = make_kn_basis(cfg, k)?;
        Ok(expand_in_basis(cfg, &op(&d))?)
    })
}

/// `R_f(a) = {a, f}` for a vector field `f`.
pub fn r_vector_field<'a>(cfg: &'a GeometryConfig, f: &BasisKey) -> Result<LinearMap<'a>> {
    let fd = make_kn_basis(cfg, f)?;
    if fd.weight != WEIGHT_VECTOR_FIELD {
        return Err(Error::InvalidParameter(format!("{f} is not a vector field")));
    }
    Ok(geometric_map(cfg, format!("R_{f}"), Parity::Even, move |a| density_bracket(a, &fd)))
}

/// The odd derivation attached to a half-density `φ`:
/// `a ↦ ½ a•φ` on functions and `ψ ↦ {ψ, φ}` on half-densities.
pub fn r_half_density<'a>(cfg: &'a GeometryConfig, phi: &BasisKey) -> Result<LinearMap<'a>> {
    let pd = make_kn_basis(cfg, phi)?;
    if pd.weight != WEIGHT_HALF {
        return Err(Error::InvalidParameter(format!("{phi} is not a half-density")));
    }
    Ok(geometric_map(cfg, format!("R_{phi}"), Parity::Odd, move |a| {
        if a.weight == WEIGHT_FUNCTION {
            density_mul(a, &pd).scale(&Scalar::half())
        } else {
            density_bracket(a, &pd)
        }
    }))
}

/// Left multiplication by a basis element; not a derivation in general.
pub fn left_multiplication<'a>(h: &'a AlgebraHandle, g: &BasisKey) -> LinearMap<'a> {
    let g = *g;
    LinearMap::new(format!("{g}∘-"), g.parity(), move |k| h.mul_basis(&g, k))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivationReport {
    pub map: String,
    pub algebra: String,
    pub window: i64,
    pub pairs_checked: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
}

impl DerivationReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Checks `d(ab) = d(a)b + (−1)^{|d||a|} a d(b)` on all basis pairs with `|index| ≤ window`.
pub fn check_derivation(h: &AlgebraHandle, d: &LinearMap<'_>, window: i64) -> Result<DerivationReport> {
    let basis = h.basis(window);
    let mut report = DerivationReport {
        map: d.name.clone(),
        algebra: h.name().to_string(),
        window,
        pairs_checked: 0,
        violations: 0,
        first_violation: None,
    };
    for a in &basis {
        let da = d.apply_basis(a)?;
        if da.keys().any(|k| k.parity() != d.parity.plus(a.parity())) {
            return Err(Error::InvalidParameter(format!("{} is not homogeneous on {a}", d.name)));
        }
        let sign = Scalar::from_int(Parity::koszul(d.parity, a.parity()));
        for b in &basis {
            let lhs = d.apply(&h.mul_basis(a, b)?)?;
            let first = h.mul(&da, &Vector::basis(*b))?;
            let second = h.mul(&Vector::basis(*a), &d.apply_basis(b)?)?;
            let rhs = LinComb::linear(&first, &second, &sign);
            report.pairs_checked += 1;
            if lhs != rhs {
                report.violations += 1;
                report
                    .first_violation
                    .get_or_insert_with(|| format!("({a}, {b}): {lhs} vs {rhs}"));
            }
        }
    }
    Ok(report)
}

/// Every `R_f`, `R_φ` with `|index| ≤ window` checked on the algebra window.
pub fn check_all_r_maps(s: &Rational, window: i64) -> Result<Vec<DerivationReport>> {
    let cfg = GeometryConfig::three(s.clone())?;
    let j = AlgebraHandle::j03(s)?;
    let l = AlgebraHandle::l03(s)?;
    let mut out = Vec::new();
    for k in l.basis(window) {
        let d = if k.family == Family::V {
            r_vector_field(&cfg, &k)?
        } else {
            r_half_density(&cfg, &k)?
        };
        out.push(check_derivation(&j, &d, window)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivationSpace {
    pub window: i64,
    pub margin: i64,
    pub even_dimension: usize,
    pub odd_dimension: usize,
    /// Rank of the `R_f`, `R_φ` that map the domain into the codomain.
    pub r_span_rank: usize,
    /// The vector fields and half-densities whose `R` maps fit the window.
    pub fitting: Vec<String>,
}

impl DerivationSpace {
    pub fn dimension(&self) -> usize {
        self.even_dimension + self.odd_dimension
    }

    pub fn lie_window_dimension(&self) -> usize {
        self.fitting.len()
    }

    /// Every window solution is some `R_f + R_φ`.
    pub fn matches(&self) -> bool {
        self.dimension() == self.lie_window_dimension() && self.r_span_rank == self.lie_window_dimension()
    }
}

/// Solves the Leibniz constraints for maps `d` defined on `|index| ≤ window`
/// with `d(e_n)` supported on `|index| ≤ window + margin`, and compares the
/// solution space with the `R` maps that respect the same bounds.
pub fn window_derivations(s: &Rational, window: i64, margin: i64) -> Result<DerivationSpace> {
    let j = AlgebraHandle::j03(s)?;
    let domain = j.basis(window);
    let codomain = j.basis(window + margin);
    let in_domain = |k: &BasisKey| k.index.abs() <= HalfInt::int(window);
    let mut dims = [0usize; 2];
    for (slot, parity) in [Parity::Even, Parity::Odd].into_iter().enumerate() {
        // Unknown (a, t): the coefficient of t in d(a).
        let mut unknowns = 0usize;
        let mut span: EchelonBasis<(BasisKey, BasisKey)> = EchelonBasis::untracked();
        let targets = |a: &BasisKey| -> Vec<BasisKey> {
            codomain.iter().copied().filter(|t| t.parity() == parity.plus(a.parity())).collect()
        };
        for a in &domain {
            unknowns += targets(a).len();
        }
        for a in &domain {
            for b in &domain {
                let ab = j.mul_basis(a, b)?;
                if !ab.keys().all(in_domain) {
                    continue;
                }
                // Output key → linear form in the unknowns.
                let mut rows: BTreeMap<BasisKey, LinComb<(BasisKey, BasisKey)>> = BTreeMap::new();
                for (c, coef) in &ab {
                    for t in targets(c) {
                        rows.entry(t).or_insert_with(LinComb::zero).add_term((*c, t), coef);
                    }
                }
                for t in targets(a) {
                    for (k, coef) in &j.mul_basis(&t, b)? {
                        rows.entry(*k).or_insert_with(LinComb::zero).add_term((*a, t), &-coef);
                    }
                }
                let sign = Scalar::from_int(-Parity::koszul(parity, a.parity()));
                for t in targets(b) {
                    for (k, coef) in &j.mul_basis(a, &t)? {
                        rows.entry(*k).or_insert_with(LinComb::zero).add_term((*b, t), &(&sign * coef));
                    }
                }
                for row in rows.values() {
                    span.insert(row);
                }
            }
        }
        dims[slot] = unknowns - span.rank();
    }
    let cfg = GeometryConfig::three(s.clone())?;
    let l = AlgebraHandle::l03(s)?;
    let in_codomain = |k: &BasisKey| k.index.abs() <= HalfInt::int(window + margin);
    let mut r_span = EchelonBasis::untracked();
    let mut fitting = Vec::new();
    for k in l.basis(margin + 1) {
        let d = if k.family == Family::V {
            r_vector_field(&cfg, &k)?
        } else {
            r_half_density(&cfg, &k)?
        };
        let mut entries: LinComb<(BasisKey, BasisKey)> = LinComb::zero();
        for a in &domain {
            for (t, c) in &d.apply_basis(a)? {
                entries.add_term((*a, *t), c);
            }
        }
        if entries.keys().all(|(_, t)| in_codomain(t)) {
            fitting.push(k.to_string());
            r_span.insert(&entries);
        }
    }
    Ok(DerivationSpace {
        window,
        margin,
        even_dimension: dims[0],
        odd_dimension: dims[1],
        r_span_rank: r_span.rank(),
        fitting,
    })
}

/// `π(a) = ρ(a)` on odd elements and `π(a ⊙ b) = ρ(a)ρ(b) + ρ(b)ρ(a)` on pairs.
pub struct ExtendedRep<R> {
    pub rep: R,
}

impl<R: Representation> Representation<OvsKey> for ExtendedRep<R> {
    fn act(&self, g: &OvsKey, m: &BasisKey) -> Result<Vector> {
        match g {
            OvsKey::Odd(a) => self.rep.act(a, m),
            OvsKey::Pair(p) => {
                let (a, b) = (Vector::basis(p.left), Vector::basis(p.right));
                let v = Vector::basis(*m);
                let ab = self.rep.act_vec(&a, &self.rep.act_vec(&b, &v)?)?;
                let ba = self.rep.act_vec(&b, &self.rep.act_vec(&a, &v)?)?;
                Ok(&ab + &ba)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtensionReport {
    pub jordan: RepReport,
    pub lie: RepReport,
}

impl ExtensionReport {
    pub fn passed(&self) -> bool {
        self.jordan.is_la_representation() && self.lie.passed()
    }
}

/// Extends a representation of an antialgebra to its adjoint superalgebra
/// and checks the result on a quotient window.
///
/// Fails with [`Error::NotLaRepresentation`] unless `rep` is a Jordan
/// representation whose even operators commute.
pub fn extend_la_rep<'r, R: Representation, A: SuperAlgebra<Key = BasisKey>>(
    rep: &'r R,
    quotient: &QuotientWindow<'_, A>,
    jordan_generators: &[BasisKey],
    lie_window: i64,
    module: &[BasisKey],
) -> Result<(ExtendedRep<&'r R>, ExtensionReport)> {
    let jordan = check_representation(rep, quotient.algebra(), BracketKind::Anticommutator, jordan_generators, module)?;
    if !jordan.is_la_representation() {
        return Err(Error::NotLaRepresentation(format!(
            "{} Jordan violations, {} non-commuting even pairs; first: {}",
            jordan.violations,
            jordan.even_noncommuting,
            jordan.first_violation.clone().unwrap_or_default()
        )));
    }
    let ext = ExtendedRep { rep };
    let mut gens: Vec<OvsKey> = quotient
        .odd_basis()
        .iter()
        .filter(|k| k.index.abs() <= HalfInt::int(lie_window))
        .map(|k| OvsKey::Odd(*k))
        .collect();
    gens.extend(
        quotient
            .even_basis()
            .into_iter()
            .filter(|p| p.left.index.abs().max(p.right.index.abs()) <= HalfInt::int(lie_window))
            .map(OvsKey::Pair),
    );
    let lie = check_representation(&ext, quotient, BracketKind::Commutator, &gens, module)?;
    Ok((ext, ExtensionReport { jordan, lie }))
}

/// Compares the extension with a Lie representation through a map into the quotient.
pub fn extension_agrees<R: Representation<OvsKey>, S: Representation>(
    ext: &R,
    other: &S,
    map: &HomSpec<OvsKey>,
    keys: &[BasisKey],
    module: &[BasisKey],
) -> Result<bool> {
    for k in keys {
        let img: OvsElem = map.image(&Vector::basis(*k))?;
        for m in module {
            if ext.act_vec(&img, &Vector::basis(*m))? != other.act(k, m)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// File format for `check-hom`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomSpecFile {
    pub source: AlgebraRef,
    pub target: AlgebraRef,
    pub images: Vec<ImageEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraRef {
    pub name: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ImageEntry {
    pub key: String,
    /// Target basis key → coefficient, e.g. `{"x_1": "1/2"}`.
    pub vector: BTreeMap<String, String>,
}

impl AlgebraRef {
    pub fn handle(&self) -> Result<AlgebraHandle> {
        let mut p = Params::default();
        for (k, v) in &self.params {
            p.set(k, v)?;
        }
        AlgebraHandle::by_name(&self.name, &p)
    }
}

impl HomSpecFile {
    /// Parses handles, keys and coefficients.
    pub fn resolve(&self) -> Result<(HomSpec<BasisKey>, AlgebraHandle)> {
        let source = self.source.handle()?;
        let target = self.target.handle()?;
        let mut images = BTreeMap::new();
        for e in &self.images {
            let k: BasisKey = e.key.parse()?;
            if !source.contains(&k) {
                return Err(Error::UnknownFamily {
                    key: k.to_string(),
                    algebra: source.name().to_string(),
                });
            }
            let mut v = Vector::zero();
            for (tk, c) in &e.vector {
                let t: BasisKey = tk.parse()?;
                if !target.contains(&t) {
                    return Err(Error::UnknownFamily {
                        key: t.to_string(),
                        algebra: target.name().to_string(),
                    });
                }
                v.add_term(t, &c.parse::<Scalar>()?);
            }
            images.insert(k, v);
        }
        Ok((
            HomSpec {
                source,
                target: target.name().to_string(),
                images,
            },
            target,
        ))
    }
}

#[cfg(test)]
mod tests;
