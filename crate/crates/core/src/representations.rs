//! Density modules `F_λ ⊕ F_{λ+½}`: the geometric actions of vector fields,
//! functions and half-densities, and the explicit operator families acting on
//! the basis `{f_m, g_m, φ_j, γ_j}`.

use std::cell::RefCell;
use std::collections::BTreeMap;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::algebra::{Graded, SuperAlgebra};
use crate::error::{Error, Result};
use crate::geometry::{
    basis_function, density_bracket, density_mul, expand_function, make_kn_basis, Density, GeometryConfig,
    WEIGHT_FUNCTION, WEIGHT_HALF, WEIGHT_VECTOR_FIELD,
};
use crate::kernel::{BasisKey, EchelonBasis, Family, HalfInt, LinComb, Parity, Rational, Scalar, Vector};
use crate::presentations::AlgebraHandle;

/// A linear action of algebra basis elements `G` on module basis elements.
pub trait Representation<G: Ord + Clone = BasisKey> {
    fn act(&self, g: &G, m: &BasisKey) -> Result<Vector>;

    /// `x · v` extended bilinearly.
    fn act_vec(&self, x: &LinComb<G>, v: &Vector) -> Result<Vector> {
        let mut out = Vector::zero();
        for (g, c) in x {
            for (m, d) in v {
                out.add_scaled(&self.act(g, m)?, &(c * d));
            }
        }
        Ok(out)
    }
}

impl<G: Ord + Clone, R: Representation<G> + ?Sized> Representation<G> for &R {
    fn act(&self, g: &G, m: &BasisKey) -> Result<Vector> {
        (**self).act(g, m)
    }
}

/// The representation sending everything to zero.
pub struct ZeroRep;

impl<G: Ord + Clone> Representation<G> for ZeroRep {
    fn act(&self, _: &G, _: &BasisKey) -> Result<Vector> {
        Ok(Vector::zero())
    }
}

/// Memoizes another representation.
pub struct Cached<R> {
    inner: R,
    memo: RefCell<FxHashMap<(BasisKey, BasisKey), Vector>>,
}

impl<R: Representation> Cached<R> {
    pub fn new(inner: R) -> Self {
        Cached {
            inner,
            memo: RefCell::default(),
        }
    }

    pub fn inner(&self) -> &R {
        &self.inner
    }
}

impl<R: Representation> Representation for Cached<R> {
    fn act(&self, g: &BasisKey, m: &BasisKey) -> Result<Vector> {
        if let Some(v) = self.memo.borrow().get(&(*g, *m)) {
            return Ok(v.clone());
        }
        let v = self.inner.act(g, m)?;
        self.memo.borrow_mut().insert((*g, *m), v.clone());
        Ok(v)
    }
}

/// An operator restricted to a finite set of module keys.
#[derive(Clone, Debug, PartialEq)]
pub struct LinOp {
    pub parity: Parity,
    pub action: BTreeMap<BasisKey, Vector>,
}

impl LinOp {
    /// Materializes `ρ(x)` on `domain`.
    pub fn of<G: Graded, R: Representation<G>>(rep: &R, x: &LinComb<G>, domain: &[BasisKey]) -> Result<Self> {
        let mut action = BTreeMap::new();
        for m in domain {
            action.insert(*m, rep.act_vec(x, &Vector::basis(*m))?);
        }
        Ok(LinOp {
            parity: parity_of(x),
            action,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.action.values().all(Vector::is_zero)
    }

    /// Matrix entries as one vector, for rank computations.
    pub fn entries(&self) -> LinComb<(BasisKey, BasisKey)> {
        let mut out = LinComb::zero();
        for (m, v) in &self.action {
            for (k, c) in v {
                out.add_term((*m, *k), c);
            }
        }
        out
    }
}

fn parity_of<G: Ord + Graded>(x: &LinComb<G>) -> Parity {
    x.keys().next().map_or(Parity::Even, Graded::parity)
}

/// Whether brackets of operators are commutators or anticommutators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

/// `[ρ(x), ρ(y)]` or `[ρ(x), ρ(y)]₊` applied to the module element `v`.
pub fn operator_bracket<G: Graded, R: Representation<G>>(
    rep: &R,
    kind: BracketKind,
    x: &LinComb<G>,
    y: &LinComb<G>,
    v: &Vector,
) -> Result<Vector> {
    let xy = rep.act_vec(x, &rep.act_vec(y, v)?)?;
    let yx = rep.act_vec(y, &rep.act_vec(x, v)?)?;
    let mut s = Scalar::from_int(Parity::koszul(parity_of(x), parity_of(y)));
    if kind == BracketKind::Commutator {
        s = -s;
    }
    Ok(LinComb::linear(&xy, &yx, &s))
}

/// The explicit operators on `{f_m, g_m, φ_j, γ_j}` for the hyperelliptic doubling.
///
/// Generators `L_n, H_n, A_i, B_i` act as the Lie superalgebra and `X_n, Y_n`
/// are the even operators that together with `A_i, B_i` may close under
/// anticommutators.
#[derive(Clone, Debug)]
pub struct AlgebraicRep {
    pub lambda: Scalar,
    pub theta: Scalar,
    pub p: i64,
}

impl AlgebraicRep {
    pub fn new(lambda: &Rational, theta: &Rational, p: i64) -> Result<Self> {
        if theta.is_zero() || p == 0 {
            return Err(Error::InvalidParameter("theta and p must be nonzero".into()));
        }
        Ok(AlgebraicRep {
            lambda: Scalar::rational(lambda.clone()),
            theta: Scalar::rational(theta.clone()),
            p,
        })
    }

    /// The module basis with `|index| ≤ window`.
    pub fn module_basis(window: i64) -> Vec<BasisKey> {
        window_keys(&[Family::ModF, Family::ModG, Family::ModPhi, Family::ModGamma], window)
    }
}

fn window_keys(families: &[Family], window: i64) -> Vec<BasisKey> {
    let mut out = Vec::new();
    for &fam in families {
        for t in -2 * window..=2 * window {
            if fam.half_integer_index() != (t % 2 == 0) {
                out.push(BasisKey::twice(fam, t));
            }
        }
    }
    out
}

fn hv(h: HalfInt) -> Scalar {
    h.to_scalar()
}

impl Representation for AlgebraicRep {
    fn act(&self, g: &BasisKey, m: &BasisKey) -> Result<Vector> {
        use Family::*;
        let lam = &self.lambda;
        let th = &self.theta;
        let p = Scalar::from_int(self.p);
        let half = Scalar::half();
        let two_p = 2 * self.p;
        let (i, j) = (g.index, m.index);
        let mut out = Vector::zero();
        let mut put = |fam: Family, idx: HalfInt, c: Scalar| out.add_term(BasisKey { family: fam, index: idx }, &c);
        // (1/2 + λ), (1/2 − λ)
        let hl = &half + lam;
        let hml = &half - lam;
        match (g.family, m.family) {
            (A, ModPhi) => put(ModF, i + j, Scalar::ONE),
            (A, ModGamma) => put(ModG, i + j, Scalar::ONE),
            (A, ModF) | (B, ModG) | (A, ModG) | (B, ModF) => {
                // m/2 + λ i
                let c = &(&hv(j) * &half) + &(lam * &hv(i));
                let (target, shift_extra) = match (g.family, m.family) {
                    (A, ModF) => (ModGamma, None),
                    (A, ModG) => (ModPhi, Some(&p * &half)),
                    (B, ModF) => (ModPhi, Some(lam * &p)),
                    _ => (ModGamma, Some(&hl * &p)),
                };
                put(target, i + j, c.clone());
                if let Some(e) = shift_extra {
                    put(target, i + j + two_p, th * &(&c + &e));
                }
            }
            (B, ModPhi) => put(ModG, i + j, Scalar::ONE),
            (B, ModGamma) => {
                put(ModF, i + j, Scalar::ONE);
                put(ModF, i + j + two_p, th.clone());
            }
            (L, ModPhi) | (L, ModGamma) | (H, ModPhi) | (H, ModGamma) => {
                // (1/2 + λ) n + j
                let c = &(&hl * &hv(i)) + &hv(j);
                match (g.family, m.family) {
                    (L, ModPhi) => put(ModGamma, i + j, c),
                    (L, _) => {
                        put(ModPhi, i + j, c.clone());
                        put(ModPhi, i + j + two_p, th * &(&c + &p));
                    }
                    (H, ModPhi) => {
                        put(ModPhi, i + j, c);
                        let c2 = &(&hl * &(&hv(i) + &p)) + &hv(j);
                        put(ModPhi, i + j + two_p, th * &c2);
                    }
                    _ => {
                        put(ModGamma, i + j, c.clone());
                        let extra = &(&Scalar::from_ratio(3, 2) + lam) * &p;
                        put(ModGamma, i + j + two_p, th * &(&c + &extra));
                    }
                }
            }
            (L, ModF) | (L, ModG) | (H, ModF) | (H, ModG) => {
                // m + λ n
                let c = &hv(j) + &(lam * &hv(i));
                match (g.family, m.family) {
                    (L, ModF) => put(ModG, i + j, c),
                    (L, _) => {
                        put(ModF, i + j, c.clone());
                        put(ModF, i + j + two_p, th * &(&c + &p));
                    }
                    (H, ModF) => {
                        put(ModF, i + j, c.clone());
                        put(ModF, i + j + two_p, th * &(&c + &(lam * &p)));
                    }
                    _ => {
                        put(ModG, i + j, c.clone());
                        let extra = &(lam + &Scalar::ONE) * &p;
                        put(ModG, i + j + two_p, th * &(&c + &extra));
                    }
                }
            }
            (OpX, fam @ (ModPhi | ModGamma)) => put(fam, i + j, hml),
            (OpX, fam @ (ModF | ModG)) => put(fam, i + j, lam.clone()),
            (OpY, ModPhi) => put(ModGamma, i + j, hml),
            (OpY, ModGamma) => {
                put(ModPhi, i + j, hml.clone());
                put(ModPhi, i + j + two_p, th * &hml);
            }
            (OpY, ModF) => put(ModG, i + j, lam.clone()),
            (OpY, ModG) => {
                put(ModF, i + j, lam.clone());
                put(ModF, i + j + two_p, th * lam);
            }
            _ => {
                return Err(Error::UnknownFamily {
                    key: format!("{g} on {m}"),
                    algebra: "operator module".into(),
                })
            }
        }
        Ok(out)
    }
}

/// Which geometric action to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GeometricAction {
    /// Vector fields and half-densities (the Lie superalgebra).
    Lie,
    /// Functions and half-densities (the Jordan superalgebra).
    Jordan,
}

/// `F_λ ⊕ F_{λ+½}` with basis `v_n = e_n (dz)^λ`, `w_n = e_n (dz)^{λ+½}`
/// where `e_n` runs over [`basis_function`].
#[derive(Clone, Debug)]
pub struct GeometricRep {
    pub cfg: GeometryConfig,
    pub lambda: HalfInt,
    pub action: GeometricAction,
}

impl GeometricRep {
    pub fn new(cfg: GeometryConfig, lambda: &Rational, action: GeometricAction) -> Result<Self> {
        let twice = lambda * &Rational::from_int(2);
        if !twice.is_integer() {
            return Err(Error::InvalidParameter(format!(
                "geometric densities need a half-integer weight, got {lambda}"
            )));
        }
        let (n, _) = twice.numer_denom();
        let t: i64 = n.try_into().map_err(|_| Error::InvalidParameter("weight too large".into()))?;
        Ok(GeometricRep {
            cfg,
            lambda: HalfInt::from_twice(t),
            action,
        })
    }

    pub fn module_basis(window: i64) -> Vec<BasisKey> {
        window_keys(&[Family::DensV, Family::DensW], window)
    }

    fn module_density(&self, m: &BasisKey) -> Result<Density> {
        let n = m.index.as_int().expect("integer module index");
        let w = match m.family {
            Family::DensV => self.lambda,
            Family::DensW => self.lambda + HalfInt::plus_half(0),
            _ => return Err(self.unknown(m)),
        };
        Ok(Density::new(basis_function(&self.cfg, n), w))
    }

    fn unknown(&self, k: &BasisKey) -> Error {
        Error::UnknownFamily {
            key: k.to_string(),
            algebra: "density module".into(),
        }
    }

    fn to_keys(&self, d: &Density) -> Result<Vector> {
        let fam = if d.weight == self.lambda {
            Family::DensV
        } else if d.weight == self.lambda + HalfInt::plus_half(0) {
            Family::DensW
        } else {
            return Err(Error::Unsupported(format!("density of weight {} in the module", d.weight)));
        };
        Ok(expand_function(&self.cfg, &d.func)?
            .into_iter()
            .map(|(n, c)| (BasisKey::int(fam, n), c))
            .collect())
    }
}

impl Representation for GeometricRep {
    fn act(&self, g: &BasisKey, m: &BasisKey) -> Result<Vector> {
        let u = make_kn_basis(&self.cfg, g)?;
        let v = self.module_density(m)?;
        let even_module = m.family == Family::DensV;
        let lam = self.lambda.to_scalar();
        let out = match (u.weight, self.action) {
            (w, GeometricAction::Jordan) if w == WEIGHT_FUNCTION => {
                let c = if even_module { lam } else { &Scalar::half() - &lam };
                density_mul(&u, &v).scale(&c)
            }
            (w, GeometricAction::Lie) if w == WEIGHT_VECTOR_FIELD => density_bracket(&u, &v),
            (w, _) if w == WEIGHT_HALF => {
                if even_module {
                    density_bracket(&u, &v)
                } else {
                    density_mul(&u, &v).scale(&Scalar::half())
                }
            }
            _ => return Err(self.unknown(g)),
        };
        self.to_keys(&out)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepReport {
    pub bracket: BracketKind,
    pub generators: usize,
    pub module_keys: usize,
    pub pairs_checked: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
    /// Rank of the generator-to-operator map restricted to the module window.
    pub operator_rank: usize,
    /// Pairs of even generators whose operators fail to commute.
    pub even_noncommuting: u64,
}

impl RepReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn faithful_on_window(&self) -> bool {
        self.operator_rank == self.generators
    }

    /// Jordan representation whose even operators commute.
    pub fn is_la_representation(&self) -> bool {
        self.passed() && self.even_noncommuting == 0
    }
}

/// Checks `ρ(xy) = [ρ(x), ρ(y)]` (or `[ρ(x), ρ(y)]₊`) for all generator pairs, on `module`.
pub fn check_representation<G: Graded + std::fmt::Display, R: Representation<G>, A: SuperAlgebra<Key = G>>(
    rep: &R,
    alg: &A,
    kind: BracketKind,
    generators: &[G],
    module: &[BasisKey],
) -> Result<RepReport> {
    let mut report = RepReport {
        bracket: kind,
        generators: generators.len(),
        module_keys: module.len(),
        pairs_checked: 0,
        violations: 0,
        first_violation: None,
        operator_rank: 0,
        even_noncommuting: 0,
    };
    for a in generators {
        for b in generators {
            let (va, vb) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
            let prod = alg.mul_basis(a, b)?;
            for m in module {
                let vm = Vector::basis(*m);
                let lhs = rep.act_vec(&prod, &vm)?;
                let rhs = operator_bracket(rep, kind, &va, &vb, &vm)?;
                if lhs != rhs {
                    report.violations += 1;
                    report
                        .first_violation
                        .get_or_insert_with(|| format!("({a}, {b}) on {m}: {lhs} vs {rhs}"));
                    break;
                }
            }
            if kind == BracketKind::Anticommutator && a.parity() == Parity::Even && b.parity() == Parity::Even && a < b {
                for m in module {
                    let vm = Vector::basis(*m);
                    if operator_bracket(rep, BracketKind::Commutator, &va, &vb, &vm)? != Vector::zero() {
                        report.even_noncommuting += 1;
                        break;
                    }
                }
            }
            report.pairs_checked += 1;
        }
    }
    let mut span = EchelonBasis::untracked();
    for g in generators {
        span.insert(&LinOp::of(rep, &LinComb::basis(g.clone()), module)?.entries());
    }
    report.operator_rank = span.rank();
    Ok(report)
}

/// How the module and algebra are realized.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum RepMode {
    Geometric(GeometryConfig),
    Algebraic { theta: Rational, p: i64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaVerdict {
    pub lambda: Rational,
    pub closed: bool,
    pub violations: u64,
    pub witness: Option<String>,
    /// The doubled Jordan algebra the operators reproduce, when closed.
    pub matches: Option<String>,
    pub la_representation: bool,
}

fn jordan_handle(cfg: &GeometryConfig) -> Result<AlgebraHandle> {
    match cfg.sqrt_alpha() {
        Some(s) => AlgebraHandle::j03(s),
        None => Ok(AlgebraHandle::ak1()),
    }
}

/// For each weight, decides whether the Jordan action closes.
///
/// Geometric mode checks `ρ(f∘g) = [ρ(f), ρ(g)]₊` on the window. Algebraic
/// mode checks that anticommutators of `X_n, Y_n, A_i, B_i` stay in their
/// span, then identifies the result with a doubled Jordan algebra.
pub fn classify_lambda_jordan(mode: &RepMode, lambdas: &[Rational], window: i64) -> Result<Vec<LambdaVerdict>> {
    lambdas
        .iter()
        .map(|lam| match mode {
            RepMode::Geometric(cfg) => {
                let rep = Cached::new(GeometricRep::new(cfg.clone(), lam, GeometricAction::Jordan)?);
                let alg = jordan_handle(cfg)?;
                let r = check_representation(
                    &rep,
                    &alg,
                    BracketKind::Anticommutator,
                    &alg.basis(window),
                    &GeometricRep::module_basis(window),
                )?;
                Ok(LambdaVerdict {
                    lambda: lam.clone(),
                    closed: r.passed(),
                    violations: r.violations,
                    witness: r.first_violation.clone(),
                    matches: r.passed().then(|| alg.name().to_string()),
                    la_representation: r.is_la_representation(),
                })
            }
            RepMode::Algebraic { theta, p } => classify_algebraic(lam, theta, *p, window),
        })
        .collect()
}

/// The operator space `⟨X_n, Y_n, A_i, B_i⟩` with `|index| ≤ window`.
pub fn jordan_operator_basis(window: i64) -> Vec<BasisKey> {
    window_keys(&[Family::OpX, Family::OpY, Family::A, Family::B], window)
}

fn classify_algebraic(lam: &Rational, theta: &Rational, p: i64, window: i64) -> Result<LambdaVerdict> {
    let rep = AlgebraicRep::new(lam, theta, p)?;
    let module = AlgebraicRep::module_basis(window);
    let gens = jordan_operator_basis(window);
    let wide = jordan_operator_basis(2 * window + 2 * p.abs() + 1);
    let mut span = EchelonBasis::untracked();
    for g in &wide {
        span.insert(&LinOp::of(&rep, &Vector::basis(*g), &module)?.entries());
    }
    let mut verdict = LambdaVerdict {
        lambda: lam.clone(),
        closed: true,
        violations: 0,
        witness: None,
        matches: None,
        la_representation: false,
    };
    for a in &gens {
        for b in &gens {
            let mut op = LinComb::zero();
            for m in &module {
                let v = operator_bracket(&rep, BracketKind::Anticommutator, &Vector::basis(*a), &Vector::basis(*b), &Vector::basis(*m))?;
                for (k, c) in &v {
                    op.add_term((*m, *k), c);
                }
            }
            if !span.contains(&op) {
                verdict.closed = false;
                verdict.violations += 1;
                verdict
                    .witness
                    .get_or_insert_with(|| format!("[{a}, {b}]+ leaves the operator span"));
            }
        }
    }
    if verdict.closed {
        for (sigma, even_scale, odd_scale) in [
            (Rational::new(1, 2), Scalar::ONE, Scalar::ONE),
            (Rational::ONE, Scalar::from_int(2), Scalar::sqrt2()),
        ] {
            let target = AlgebraHandle::jsigma(theta, p, &sigma)?;
            let spec = OperatorImage { rep: &rep, even_scale, odd_scale };
            let r = check_representation(&spec, &target, BracketKind::Anticommutator, &target.basis(window), &module)?;
            if r.passed() {
                verdict.matches = Some(format!("Jsigma(theta={theta}, p={p}, sigma={sigma})"));
                verdict.la_representation = r.is_la_representation();
                break;
            }
        }
    }
    Ok(verdict)
}

/// `x_n ↦ c X_n`, `y_n ↦ c Y_n`, `a_i ↦ d A_i`, `b_i ↦ d B_i`.
pub struct OperatorImage<'a, R> {
    pub rep: &'a R,
    pub even_scale: Scalar,
    pub odd_scale: Scalar,
}

impl<R: Representation> Representation for OperatorImage<'_, R> {
    fn act(&self, g: &BasisKey, m: &BasisKey) -> Result<Vector> {
        let (fam, c) = match g.family {
            Family::SmallX => (Family::OpX, &self.even_scale),
            Family::SmallY => (Family::OpY, &self.even_scale),
            Family::SmallA => (Family::A, &self.odd_scale),
            Family::SmallB => (Family::B, &self.odd_scale),
            _ => {
                return Err(Error::UnknownFamily {
                    key: g.to_string(),
                    algebra: "operator image".into(),
                })
            }
        };
        Ok(self.rep.act(&BasisKey { family: fam, index: g.index }, m)?.scale(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> BasisKey {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn printed_operator_values() {
        let rep = AlgebraicRep::new(&r(1, 3), &r(2, 1), 1).unwrap();
        assert_eq!(rep.act(&k("A_1/2"), &k("vphi_1/2")).unwrap(), Vector::basis(k("f_1")));
        let got = rep.act(&k("A_1/2"), &k("f_0")).unwrap();
        assert_eq!(got, Vector::term(k("gamma_1/2"), Scalar::from_ratio(1, 6)));
        assert_eq!(rep.act(&k("X_1"), &k("f_0")).unwrap(), Vector::term(k("f_1"), Scalar::from_ratio(1, 3)));
    }

    #[test]
    fn algebraic_lie_representation_any_lambda() {
        for (lam, theta, p) in [(r(1, 3), r(1, 1), 1), (r(0, 1), r(2, 1), -1), (r(-3, 2), r(1, 2), 2)] {
            let rep = AlgebraicRep::new(&lam, &theta, p).unwrap();
            let alg = AlgebraHandle::lthetap(&theta, p).unwrap();
            let rep_report = check_representation(&rep, &alg, BracketKind::Commutator, &alg.basis(2), &AlgebraicRep::module_basis(3)).unwrap();
            assert!(rep_report.passed(), "{rep_report:?}");
            assert!(rep_report.faithful_on_window());
        }
    }

    struct Doubled<'a>(&'a AlgebraicRep);

    impl Representation for Doubled<'_> {
        fn act(&self, g: &BasisKey, m: &BasisKey) -> Result<Vector> {
            let v = self.0.act(g, m)?;
            Ok(if g.family == Family::A { v.scale(&Scalar::from_int(2)) } else { v })
        }
    }

    #[test]
    fn perturbed_operator_is_caught() {
        let rep = AlgebraicRep::new(&r(1, 3), &r(1, 1), 1).unwrap();
        let alg = AlgebraHandle::lthetap(&r(1, 1), 1).unwrap();
        let report = check_representation(&Doubled(&rep), &alg, BracketKind::Commutator, &alg.basis(2), &AlgebraicRep::module_basis(3)).unwrap();
        assert!(!report.passed());
        assert!(report.first_violation.is_some());
    }

    #[test]
    fn geometric_lie_representation() {
        let cfg = GeometryConfig::three(r(1, 1)).unwrap();
        let rep = Cached::new(GeometricRep::new(cfg, &r(-1, 1), GeometricAction::Lie).unwrap());
        let alg = AlgebraHandle::l03(&r(1, 1)).unwrap();
        let report = check_representation(&rep, &alg, BracketKind::Commutator, &alg.basis(2), &GeometricRep::module_basis(2)).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.faithful_on_window());
    }

    #[test]
    fn jordan_and_lie_actions_agree_on_half_densities() {
        let cfg = GeometryConfig::three(r(2, 1)).unwrap();
        let lie = GeometricRep::new(cfg.clone(), &r(1, 2), GeometricAction::Lie).unwrap();
        let jordan = GeometricRep::new(cfg, &r(1, 2), GeometricAction::Jordan).unwrap();
        for m in GeometricRep::module_basis(2) {
            for t in [-3, -1, 1, 3] {
                let g = BasisKey::twice(Family::Phi, t);
                assert_eq!(lie.act(&g, &m).unwrap(), jordan.act(&g, &m).unwrap());
            }
        }
    }

    #[test]
    fn half_unit_and_failure_witness() {
        let cfg = GeometryConfig::three(r(1, 1)).unwrap();
        let g0 = Vector::basis(k("G_0"));
        let w = Vector::basis(k("w_1"));
        let rep0 = GeometricRep::new(cfg.clone(), &r(0, 1), GeometricAction::Jordan).unwrap();
        let anti = operator_bracket(&rep0, BracketKind::Anticommutator, &g0, &g0, &w).unwrap();
        assert_eq!(anti, w.scale(&Scalar::half()));
        let rep1 = GeometricRep::new(cfg, &r(1, 1), GeometricAction::Jordan).unwrap();
        let v = Vector::basis(k("v_0"));
        let anti = operator_bracket(&rep1, BracketKind::Anticommutator, &g0, &g0, &v).unwrap();
        assert_eq!(anti, v.scale(&Scalar::from_int(2)));
        assert_eq!(rep1.act_vec(&g0, &v).unwrap(), v);
    }

    #[test]
    fn geometric_classification_small() {
        let cfg = GeometryConfig::three(r(1, 1)).unwrap();
        let lams = [r(-1, 1), r(-1, 2), r(0, 1), r(1, 2), r(1, 1)];
        let v = classify_lambda_jordan(&RepMode::Geometric(cfg), &lams, 2).unwrap();
        let closed: Vec<bool> = v.iter().map(|x| x.closed).collect();
        assert_eq!(closed, [false, false, true, true, false]);
        assert!(v[0].witness.is_some());
    }

    #[test]
    fn algebraic_classification_small() {
        let mode = RepMode::Algebraic { theta: r(1, 1), p: 1 };
        let lams = [r(0, 1), r(1, 8), r(1, 4), r(1, 3), r(1, 2), r(1, 1)];
        let v = classify_lambda_jordan(&mode, &lams, 2).unwrap();
        let closed: Vec<bool> = v.iter().map(|x| x.closed).collect();
        assert_eq!(closed, [true, false, true, false, true, false]);
        assert!(v[0].matches.as_deref().unwrap().contains("sigma=1/2"));
        assert!(v[2].matches.as_deref().unwrap().contains("sigma=1)"));
        assert!(v[4].matches.as_deref().unwrap().contains("sigma=1/2"));
    }

    #[test]
    fn rejects_non_half_integer_geometric_weight() {
        let cfg = GeometryConfig::two();
        assert!(GeometricRep::new(cfg, &r(1, 4), GeometricAction::Jordan).is_err());
    }
}
