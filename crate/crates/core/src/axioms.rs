//! Exact verification of the defining identities of Lie superalgebras, Jordan
//! superalgebras and Lie antialgebras on finite sets of basis elements.
//!
//! Products of basis elements are memoized on interned ids, so the quartic
//! Jordan identity costs a few hash lookups per term once the pair and triple
//! tables are built.

use std::fmt;
use std::rc::Rc;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::algebra::{Kind, SuperAlgebra};
use crate::error::Result;
use crate::kernel::{LinComb, Parity, Scalar};
use crate::presentations::AlgebraHandle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Identity {
    /// Super skewsymmetry.
    SL1,
    /// Super Jacobi identity.
    SL2,
    /// Supercommutativity.
    SJ1,
    /// Quartic super Jordan identity.
    SJ2,
    /// Associativity of the even part.
    LA0,
    /// Half-action of the even part on the odd part.
    LA1,
    /// Leibniz identity.
    LA2,
    /// Odd Jacobi identity.
    LA3,
    /// Full associativity.
    Assoc,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::SL1,
        Identity::SL2,
        Identity::SJ1,
        Identity::SJ2,
        Identity::LA0,
        Identity::LA1,
        Identity::LA2,
        Identity::LA3,
        Identity::Assoc,
    ];

    pub fn arity(self) -> usize {
        match self {
            Identity::SL1 | Identity::SJ1 => 2,
            Identity::SJ2 => 4,
            _ => 3,
        }
    }

    /// Required parity of each argument, `None` for unrestricted.
    fn slots(self) -> Vec<Option<Parity>> {
        use Parity::{Even, Odd};
        match self {
            Identity::LA0 => vec![Some(Even); 3],
            Identity::LA1 => vec![Some(Even), Some(Even), Some(Odd)],
            Identity::LA2 => vec![Some(Even), Some(Odd), Some(Odd)],
            Identity::LA3 => vec![Some(Odd); 3],
            other => vec![None; other.arity()],
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The identities defining an algebra of the given kind.
pub fn suite(kind: Kind) -> Vec<Identity> {
    match kind {
        Kind::Lie => vec![Identity::SL1, Identity::SL2],
        Kind::Jordan => vec![Identity::SJ1, Identity::SJ2],
        Kind::Antialgebra => vec![Identity::SJ1, Identity::LA0, Identity::LA1, Identity::LA2, Identity::LA3],
        Kind::Associative => vec![Identity::SJ1, Identity::Assoc],
    }
}

/// How many tuples to visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    /// Every `n`-th tuple in lexicographic order; deterministic.
    Stride(u64),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub args: Vec<String>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityOutcome {
    pub identity: Identity,
    pub tuples_total: u64,
    pub tuples_checked: u64,
    pub violations: u64,
    pub witness: Option<Witness>,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub basis_size: usize,
    pub outcomes: Vec<IdentityOutcome>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(IdentityOutcome::passed)
    }

    pub fn violations(&self) -> u64 {
        self.outcomes.iter().map(|o| o.violations).sum()
    }
}

type Sparse = Rc<[(u32, Scalar)]>;

/// Dense scratch vector indexed by interned id.
#[derive(Default)]
struct Acc {
    vals: Vec<Scalar>,
    touched: Vec<u32>,
}

impl Acc {
    fn add(&mut self, id: u32, c: &Scalar) {
        let i = id as usize;
        if i >= self.vals.len() {
            self.vals.resize(i + 1, Scalar::ZERO);
        }
        if self.vals[i].is_zero() {
            self.touched.push(id);
        }
        self.vals[i] += c;
    }

    /// Nonzero entries sorted by id; resets the accumulator.
    fn drain(&mut self) -> Vec<(u32, Scalar)> {
        let mut out = Vec::new();
        self.touched.sort_unstable();
        self.touched.dedup();
        for &id in &self.touched {
            let v = std::mem::replace(&mut self.vals[id as usize], Scalar::ZERO);
            if !v.is_zero() {
                out.push((id, v));
            }
        }
        self.touched.clear();
        out
    }

    fn is_zero_then_clear(&mut self) -> bool {
        let mut zero = true;
        for &id in &self.touched {
            let v = &mut self.vals[id as usize];
            if !v.is_zero() {
                zero = false;
                *v = Scalar::ZERO;
            }
        }
        self.touched.clear();
        zero
    }
}

/// Memoizing product evaluator over interned keys.
struct Engine<'a, A: SuperAlgebra> {
    alg: &'a A,
    keys: Vec<A::Key>,
    parity: Vec<Parity>,
    ids: FxHashMap<A::Key, u32>,
    memo: FxHashMap<(u32, u32), Sparse>,
    acc: Acc,
    scratch: Acc,
}

impl<'a, A: SuperAlgebra> Engine<'a, A> {
    fn new(alg: &'a A) -> Self {
        Engine {
            alg,
            keys: Vec::new(),
            parity: Vec::new(),
            ids: FxHashMap::default(),
            memo: FxHashMap::default(),
            acc: Acc::default(),
            scratch: Acc::default(),
        }
    }

    fn intern(&mut self, k: &A::Key) -> u32 {
        if let Some(&id) = self.ids.get(k) {
            return id;
        }
        let id = self.keys.len() as u32;
        self.keys.push(k.clone());
        self.parity.push(self.alg.parity(k));
        self.ids.insert(k.clone(), id);
        id
    }

    fn single(id: u32) -> Sparse {
        Rc::from(vec![(id, Scalar::ONE)])
    }

    fn mul_ids(&mut self, a: u32, b: u32) -> Result<Sparse> {
        if let Some(s) = self.memo.get(&(a, b)) {
            return Ok(s.clone());
        }
        let (ka, kb) = (self.keys[a as usize].clone(), self.keys[b as usize].clone());
        let prod = self.alg.mul_basis(&ka, &kb)?;
        let terms: Vec<(u32, Scalar)> = prod.iter().map(|(k, c)| (self.intern(k), c.clone())).collect();
        let s: Sparse = Rc::from(terms);
        self.memo.insert((a, b), s.clone());
        Ok(s)
    }

    /// `target += c * u * v`.
    fn accumulate(&mut self, into_scratch: bool, c: &Scalar, u: &[(u32, Scalar)], v: &[(u32, Scalar)]) -> Result<()> {
        for (a, ca) in u {
            let cu = c * ca;
            for (b, cb) in v {
                let cuv = &cu * cb;
                let p = self.mul_ids(*a, *b)?;
                let target = if into_scratch { &mut self.scratch } else { &mut self.acc };
                for (id, cp) in p.iter() {
                    target.add(*id, &(&cuv * cp));
                }
            }
        }
        Ok(())
    }

    fn product(&mut self, u: &[(u32, Scalar)], v: &[(u32, Scalar)]) -> Result<Sparse> {
        self.accumulate(true, &Scalar::ONE, u, v)?;
        Ok(Rc::from(self.scratch.drain()))
    }

    fn sign(&self, ids: &[u32]) -> Parity {
        ids.iter()
            .fold(Parity::Even, |p, &i| p.plus(self.parity[i as usize]))
    }

    fn kz(&self, a: &[u32], b: &[u32]) -> Scalar {
        Scalar::from_int(Parity::koszul(self.sign(a), self.sign(b)))
    }

    fn residual_string(&self, terms: &[(u32, Scalar)]) -> String {
        let lc: LinComb<A::Key> = terms.iter().map(|(id, c)| (self.keys[*id as usize].clone(), c.clone())).collect();
        lc.to_string()
    }
}

struct Tables {
    /// `pair[a * n + b] = a b`.
    pair: Vec<Sparse>,
    /// `triple[(a * n + b) * n + c] = (a b) c`.
    triple: Vec<Sparse>,
    n: usize,
}

/// Checks `identities` on all tuples drawn from `basis`.
pub fn check_identities<A: SuperAlgebra>(
    alg: &A,
    basis: &[A::Key],
    identities: &[Identity],
    coverage: Coverage,
) -> Result<AxiomReport> {
    let mut e = Engine::new(alg);
    let ids: Vec<u32> = basis.iter().map(|k| e.intern(k)).collect();
    let singles: Vec<Sparse> = ids.iter().map(|&i| Engine::<A>::single(i)).collect();
    let n = ids.len();

    let mut tables: Option<Tables> = None;
    let mut outcomes = Vec::new();
    for &ident in identities {
        let slots: Vec<Vec<usize>> = ident
            .slots()
            .into_iter()
            .map(|want| {
                (0..n)
                    .filter(|&i| want.is_none_or(|p| e.parity[ids[i] as usize] == p))
                    .collect()
            })
            .collect();
        let total: u64 = slots.iter().map(|s| s.len() as u64).product();
        if ident == Identity::SJ2 && tables.is_none() {
            let mut pair = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    pair.push(e.mul_ids(ids[a], ids[b])?);
                }
            }
            let mut triple = Vec::with_capacity(n * n * n);
            for ab in &pair {
                for c in &singles {
                    let t = e.product(ab, c)?;
                    triple.push(t);
                }
            }
            tables = Some(Tables { pair, triple, n });
        }

        let stride = match coverage {
            Coverage::Exhaustive => 1,
            Coverage::Stride(s) => s.max(1),
        };
        let mut outcome = IdentityOutcome {
            identity: ident,
            tuples_total: total,
            tuples_checked: 0,
            violations: 0,
            witness: None,
        };
        let mut tuple = vec![0usize; slots.len()];
        let mut idx = 0u64;
        while idx < total {
            let mut rest = idx;
            for (pos, s) in slots.iter().enumerate().rev() {
                let len = s.len() as u64;
                tuple[pos] = s[(rest % len) as usize];
                rest /= len;
            }
            eval(&mut e, ident, &tuple, &ids, &singles, tables.as_ref())?;
            outcome.tuples_checked += 1;
            let ok = if outcome.witness.is_none() {
                let res = e.acc.drain();
                if !res.is_empty() {
                    outcome.witness = Some(Witness {
                        args: tuple.iter().map(|&i| basis[i].to_string()).collect(),
                        residual: e.residual_string(&res),
                    });
                }
                res.is_empty()
            } else {
                e.acc.is_zero_then_clear()
            };
            if !ok {
                outcome.violations += 1;
            }
            idx += stride;
        }
        outcomes.push(outcome);
    }
    Ok(AxiomReport { basis_size: n, outcomes })
}

/// Leaves `lhs - rhs` of the identity in the engine accumulator.
fn eval<A: SuperAlgebra>(
    e: &mut Engine<'_, A>,
    ident: Identity,
    t: &[usize],
    ids: &[u32],
    singles: &[Sparse],
    tables: Option<&Tables>,
) -> Result<()> {
    let id = |i: usize| ids[t[i]];
    let one = Scalar::ONE;
    let minus = -Scalar::ONE;
    match ident {
        Identity::SL1 | Identity::SJ1 => {
            let (x, y) = (id(0), id(1));
            let mut s = e.kz(&[x], &[y]);
            if ident == Identity::SJ1 {
                s = -s;
            }
            e.accumulate(false, &one, &singles[t[0]], &singles[t[1]])?;
            e.accumulate(false, &s, &singles[t[1]], &singles[t[0]])?;
        }
        Identity::SL2 => {
            let (x, y, z) = (id(0), id(1), id(2));
            let (sx, sy, sz) = (&singles[t[0]], &singles[t[1]], &singles[t[2]]);
            for (u, v, w, sign) in [
                (sx, sy, sz, e.kz(&[x], &[z])),
                (sy, sz, sx, e.kz(&[y], &[x])),
                (sz, sx, sy, e.kz(&[z], &[y])),
            ] {
                let uv = e.product(u, v)?;
                e.accumulate(false, &sign, &uv, w)?;
            }
        }
        Identity::LA0 | Identity::Assoc => {
            let (s0, s1, s2) = (&singles[t[0]], &singles[t[1]], &singles[t[2]]);
            let bc = e.product(s1, s2)?;
            e.accumulate(false, &one, s0, &bc)?;
            let ab = e.product(s0, s1)?;
            e.accumulate(false, &minus, &ab, s2)?;
        }
        Identity::LA1 => {
            let (s0, s1, s2) = (&singles[t[0]], &singles[t[1]], &singles[t[2]]);
            let x2y = e.product(s1, s2)?;
            e.accumulate(false, &one, s0, &x2y)?;
            let x1x2 = e.product(s0, s1)?;
            e.accumulate(false, &-Scalar::half(), &x1x2, s2)?;
        }
        Identity::LA2 => {
            let (x, y1, y2) = (&singles[t[0]], &singles[t[1]], &singles[t[2]]);
            let yy = e.product(y1, y2)?;
            e.accumulate(false, &one, x, &yy)?;
            let xy1 = e.product(x, y1)?;
            e.accumulate(false, &minus, &xy1, y2)?;
            let xy2 = e.product(x, y2)?;
            e.accumulate(false, &minus, y1, &xy2)?;
        }
        Identity::LA3 => {
            let (a, b, c) = (&singles[t[0]], &singles[t[1]], &singles[t[2]]);
            for (u, v, w) in [(a, b, c), (b, c, a), (c, a, b)] {
                let vw = e.product(v, w)?;
                e.accumulate(false, &one, u, &vw)?;
            }
        }
        Identity::SJ2 => {
            let tb = tables.expect("pair and triple tables are built before SJ2");
            let n = tb.n;
            let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
            let (pa, pb, pc, pd) = (id(0), id(1), id(2), id(3));
            let p = |i: usize, j: usize| &tb.pair[i * n + j];
            let tr = |i: usize, j: usize, k: usize| &tb.triple[(i * n + j) * n + k];
            // (ab)(cd) + (-1)^{bc} (ac)(bd) + (-1)^{(b+c)d} (ad)(bc)
            let s_bc = e.kz(&[pb], &[pc]);
            let s_bcd = e.kz(&[pb, pc], &[pd]);
            e.accumulate(false, &one, p(a, b), p(c, d))?;
            e.accumulate(false, &s_bc, p(a, c), p(b, d))?;
            e.accumulate(false, &s_bcd, p(a, d), p(b, c))?;
            // - ((ab)c)d - (-1)^{(b+c)d + bc} ((ad)c)b - (-1)^{(b+c+d)a + cd} ((bd)c)a
            let s2 = -(&s_bcd * &s_bc);
            let s3 = -(&e.kz(&[pb, pc, pd], &[pa]) * &e.kz(&[pc], &[pd]));
            e.accumulate(false, &minus, tr(a, b, c), &singles[d])?;
            e.accumulate(false, &s2, tr(a, d, c), &singles[b])?;
            e.accumulate(false, &s3, tr(b, d, c), &singles[a])?;
        }
    }
    Ok(())
}

/// Runs the kind-appropriate suite on the window `|index| ≤ window`.
pub fn verify_axioms(h: &AlgebraHandle, window: i64, coverage: Coverage) -> Result<AxiomReport> {
    check_identities(h, &h.basis(window), &suite(h.kind()), coverage)
}
