//! Certificates that the derivation-invariant ideal generated by a nonzero
//! element of the hyperelliptic ring is the whole ring.
//!
//! A witness is a chain of ring elements starting at the seed. Each element
//! is obtained from earlier ones by multiplying by a ring element, applying
//! `D`, or taking a linear combination, and the chain ends at `1`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::doubling::{ring_derive, ring_mul, LaurentPoly, RingElem, RingSpec};
use crate::error::{Error, Result};
use crate::kernel::{Rational, Scalar};

/// How a step follows from earlier ones.
#[derive(Clone, Debug, PartialEq)]
pub enum Justification {
    Seed,
    Multiply { step: usize, by: RingElem },
    Derive { step: usize },
    Combine { terms: Vec<(usize, Scalar)> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Step {
    pub element: RingElem,
    pub justification: Justification,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimplicityWitness {
    pub spec: RingSpec,
    pub seed: RingElem,
    pub steps: Vec<Step>,
}

impl SimplicityWitness {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl Serialize for Step {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Step", 4)?;
        st.serialize_field("element", &self.element.to_string())?;
        match &self.justification {
            Justification::Seed => {
                st.serialize_field("rule", "seed")?;
                st.serialize_field("from", &Vec::<usize>::new())?;
                st.serialize_field("data", &Vec::<String>::new())?;
            }
            Justification::Multiply { step, by } => {
                st.serialize_field("rule", "multiply")?;
                st.serialize_field("from", &[step])?;
                st.serialize_field("data", &[by.to_string()])?;
            }
            Justification::Derive { step } => {
                st.serialize_field("rule", "derive")?;
                st.serialize_field("from", &[step])?;
                st.serialize_field("data", &Vec::<String>::new())?;
            }
            Justification::Combine { terms } => {
                st.serialize_field("rule", "combine")?;
                st.serialize_field("from", &terms.iter().map(|(i, _)| *i).collect::<Vec<_>>())?;
                st.serialize_field("data", &terms.iter().map(|(_, c)| c.to_string()).collect::<Vec<_>>())?;
            }
        }
        st.end()
    }
}

impl Serialize for SimplicityWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SimplicityWitness", 4)?;
        st.serialize_field("ring", &self.spec.to_string())?;
        st.serialize_field("seed", &self.seed.to_string())?;
        st.serialize_field("length", &self.steps.len())?;
        st.serialize_field("steps", &self.steps)?;
        st.end()
    }
}

struct Chain {
    steps: Vec<Step>,
}

impl Chain {
    fn push(&mut self, element: RingElem, justification: Justification) -> usize {
        self.steps.push(Step { element, justification });
        self.steps.len() - 1
    }

    fn get(&self, i: usize) -> &RingElem {
        &self.steps[i].element
    }

    fn multiply(&mut self, i: usize, by: RingElem) -> Result<usize> {
        let e = ring_mul(self.get(i), &by)?;
        Ok(self.push(e, Justification::Multiply { step: i, by }))
    }

    fn derive(&mut self, i: usize) -> usize {
        let e = ring_derive(self.get(i));
        self.push(e, Justification::Derive { step: i })
    }

    fn combine(&mut self, terms: Vec<(usize, Scalar)>) -> Result<usize> {
        let e = combine(&self.steps, &terms)?.expect("indices are in range");
        Ok(self.push(e, Justification::Combine { terms }))
    }
}

fn combine(steps: &[Step], terms: &[(usize, Scalar)]) -> Result<Option<RingElem>> {
    let Some(first) = steps.first() else { return Ok(None) };
    let mut acc = RingElem::zero(&first.element.spec);
    for (i, c) in terms {
        let Some(s) = steps.get(*i) else { return Ok(None) };
        acc = acc.add(&s.element.scale(c))?;
    }
    Ok(Some(acc))
}

/// `x^m` reduced by the ring relation.
fn x_power(spec: &RingSpec, m: usize) -> Result<RingElem> {
    let x = RingElem::x(spec)?;
    let mut out = RingElem::one(spec);
    for _ in 0..m {
        out = ring_mul(&out, &x)?;
    }
    Ok(out)
}

/// Builds a witness chain from `seed` to `1`.
///
/// The chain conjugates the seed into `ℚ[y, y⁻¹]`, clears negative powers,
/// differentiates until only a power of `x` remains, and then lowers the
/// power of `x` using `y D(x^m) = p m x^{m+1} − p m x^{m−1}`.
pub fn simplicity_witness(spec: &RingSpec, seed: &RingElem) -> Result<SimplicityWitness> {
    let (theta, p) = match spec {
        RingSpec::Hyperelliptic { theta, p } => (Scalar::rational(theta.clone()), *p),
        _ => return Err(Error::Unsupported(format!("simplicity witnesses need a hyperelliptic ring, got {spec}"))),
    };
    if seed.spec != *spec {
        return Err(Error::SpecMismatch);
    }
    if seed.is_zero() {
        return Err(Error::ZeroSeed);
    }
    let mut chain = Chain { steps: Vec::new() };
    let mut cur = chain.push(seed.clone(), Justification::Seed);

    // Conjugation: (f + xg)(f − xg) = f² − r g².
    if !seed.g.is_zero() {
        let conj = RingElem::new(spec, seed.f.clone(), -&seed.g)?;
        cur = chain.multiply(cur, conj)?;
    }
    // Shift so the lowest power of y is y⁰.
    let low = chain.get(cur).f.terms().next().map(|(n, _)| n).expect("nonzero");
    if low != 0 {
        cur = chain.multiply(cur, RingElem::y_pow(spec, -low))?;
    }
    let h = chain.get(cur).f.clone();
    let degree = h.terms().last().map(|(n, _)| n).expect("nonzero") as usize;

    if degree == 0 {
        let c = h.coeff(0);
        if !c.is_one() {
            chain.combine(vec![(cur, c.inv()?)])?;
        }
        return Ok(SimplicityWitness {
            spec: spec.clone(),
            seed: seed.clone(),
            steps: chain.steps,
        });
    }
    // D(h) = x h'.
    cur = chain.derive(cur);
    for k in 1..degree {
        // From x^{2k−1} h^{(k)}: x^{2k} h^{(k)}, then
        // D(x^{2k} h^{(k)}) − 2kpθ y^{2p−1} x^{2k−1} h^{(k)} = x^{2k+1} h^{(k+1)}.
        let up = chain.multiply(cur, RingElem::x(spec)?)?;
        let d = chain.derive(up);
        let c = &theta * &Scalar::from_int(2 * k as i64 * p);
        let corr = chain.multiply(cur, RingElem::y_pow(spec, 2 * p - 1).scale(&c))?;
        cur = chain.combine(vec![(d, Scalar::ONE), (corr, -Scalar::ONE)])?;
    }
    // Now c·x^{2d−1} with c = d!·(leading coefficient of h).
    let m = 2 * degree - 1;
    let expected = x_power(spec, m)?;
    let c = chain.get(cur).g.coeff(0);
    if c.is_zero() || *chain.get(cur) != expected.scale(&c) {
        return Err(Error::Unsupported(format!("witness chain for {seed} stalled at {}", chain.get(cur))));
    }
    if !c.is_one() {
        cur = chain.combine(vec![(cur, c.inv()?)])?;
    }

    // Descent: x^{m−1} = (p m x^{m+1} − y D(x^m)) / (p m).
    for j in (1..=m).rev() {
        let up = chain.multiply(cur, RingElem::x(spec)?)?;
        let d = chain.derive(cur);
        let yd = chain.multiply(d, RingElem::y_pow(spec, 1))?;
        let pm = Scalar::from_int(p * j as i64);
        let inv = pm.inv()?;
        cur = chain.combine(vec![(up, Scalar::ONE), (yd, -&inv)])?;
    }
    debug_assert_eq!(*chain.get(cur), RingElem::one(spec));
    Ok(SimplicityWitness {
        spec: spec.clone(),
        seed: seed.clone(),
        steps: chain.steps,
    })
}

/// Re-derives every step with exact arithmetic and checks that the chain ends at `1`.
pub fn verify_witness(w: &SimplicityWitness) -> bool {
    let Some(first) = w.steps.first() else { return false };
    if first.justification != Justification::Seed || first.element != w.seed || w.seed.is_zero() {
        return false;
    }
    for (i, st) in w.steps.iter().enumerate() {
        if st.element.spec != w.spec {
            return false;
        }
        let earlier = &w.steps[..i];
        let expected = match &st.justification {
            Justification::Seed => {
                if i != 0 {
                    return false;
                }
                continue;
            }
            Justification::Multiply { step, by } => match earlier.get(*step) {
                Some(s) => ring_mul(&s.element, by).ok(),
                None => None,
            },
            Justification::Derive { step } => earlier.get(*step).map(|s| ring_derive(&s.element)),
            Justification::Combine { terms } => {
                if terms.iter().any(|(j, _)| *j >= i) {
                    return false;
                }
                combine(earlier, terms).ok().flatten()
            }
        };
        if expected.as_ref() != Some(&st.element) {
            return false;
        }
    }
    w.steps.last().is_some_and(|s| s.element == RingElem::one(&w.spec))
}

/// Parses expressions like `y^2+x*y`, `3/2*x*y^-1 - 1`.
pub fn parse_ring_elem(spec: &RingSpec, text: &str) -> Result<RingElem> {
    let bad = |msg: &str| Error::InvalidParameter(format!("cannot parse ring element {text:?}: {msg}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad("empty"));
    }
    let mut total = RingElem::zero(spec);
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut terms = Vec::new();
    for i in 1..=bytes.len() {
        let at_sign = i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^';
        if i == bytes.len() || at_sign {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    for term in terms {
        let (neg, body) = match term.as_bytes()[0] {
            b'+' => (false, &term[1..]),
            b'-' => (true, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return Err(bad("dangling sign"));
        }
        let mut acc = RingElem::one(spec);
        for factor in body.split('*') {
            let el = if let Some(rest) = factor.strip_prefix('x') {
                let e = exponent(rest).ok_or_else(|| bad("exponent of x"))?;
                if e < 0 {
                    return Err(bad("x has no inverse"));
                }
                x_power(spec, e as usize)?
            } else if let Some(rest) = factor.strip_prefix('y') {
                RingElem::y_pow(spec, exponent(rest).ok_or_else(|| bad("exponent of y"))?)
            } else {
                let c: Rational = factor.parse().map_err(|_| bad("coefficient"))?;
                RingElem::one(spec).scale(&Scalar::rational(c))
            };
            acc = ring_mul(&acc, &el)?;
        }
        if neg {
            acc = acc.scale(&-Scalar::ONE);
        }
        total = total.add(&acc)?;
    }
    Ok(total)
}

fn exponent(rest: &str) -> Option<i64> {
    if rest.is_empty() {
        Some(1)
    } else {
        rest.strip_prefix('^')?.parse().ok()
    }
}

/// The seeds `x_n = y^n`, `y_n = x y^n` and `x_n ± y_m` for `|n|, |m| ≤ bound`.
pub fn seed_sweep(spec: &RingSpec, bound: i64) -> Result<Vec<RingElem>> {
    let mut out = Vec::new();
    for n in -bound..=bound {
        out.push(RingElem::y_pow(spec, n));
        out.push(RingElem::x_y_pow(spec, n)?);
    }
    for n in -bound..=bound {
        for m in -bound..=bound {
            let a = RingElem::y_pow(spec, n);
            let b = RingElem::x_y_pow(spec, m)?;
            out.push(a.add(&b)?);
            out.push(a.sub(&b)?);
        }
    }
    Ok(out)
}

/// Replaces one step's element by a perturbed one.
pub fn forge_step(w: &SimplicityWitness, index: usize) -> SimplicityWitness {
    let mut forged = w.clone();
    if let Some(st) = forged.steps.get_mut(index) {
        let bump = RingElem {
            spec: w.spec.clone(),
            f: LaurentPoly::y_pow(7),
            g: LaurentPoly::zero(),
        };
        st.element = st.element.add(&bump).expect("same ring");
    }
    forged
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(theta: i64, p: i64) -> RingSpec {
        RingSpec::hyperelliptic(Rational::from_int(theta), p).unwrap()
    }

    #[test]
    fn unit_seed() {
        let sp = spec(1, 1);
        let w = simplicity_witness(&sp, &RingElem::one(&sp)).unwrap();
        assert_eq!(w.len(), 1);
        assert!(verify_witness(&w));
    }

    #[test]
    fn x_seed_and_conjugation() {
        let sp = spec(1, 1);
        let w = simplicity_witness(&sp, &RingElem::x(&sp).unwrap()).unwrap();
        assert!(verify_witness(&w));
        let seed = parse_ring_elem(&sp, "y+x").unwrap();
        let w = simplicity_witness(&sp, &seed).unwrap();
        assert!(verify_witness(&w));
        // (y + x)(y − x) = y² − 1 − θy^{2p}
        assert_eq!(w.steps[1].element, parse_ring_elem(&sp, "y^2-1-y^2").unwrap());
    }

    #[test]
    fn conjugation_matches_printed_form() {
        let sp = spec(3, 2);
        let seed = parse_ring_elem(&sp, "y+x").unwrap();
        let w = simplicity_witness(&sp, &seed).unwrap();
        assert_eq!(w.steps[1].element, parse_ring_elem(&sp, "y^2-1-3*y^4").unwrap());
        assert!(verify_witness(&w));
    }

    #[test]
    fn forged_steps_are_rejected() {
        let sp = spec(2, -1);
        let seed = parse_ring_elem(&sp, "y^3 + 2*x*y^-1").unwrap();
        let w = simplicity_witness(&sp, &seed).unwrap();
        assert!(verify_witness(&w));
        for i in 0..w.len() {
            assert!(!verify_witness(&forge_step(&w, i)), "step {i}");
        }
        let mut truncated = w.clone();
        truncated.steps.pop();
        assert!(!verify_witness(&truncated));
    }

    #[test]
    fn torus_and_zero_seed_are_rejected() {
        let t = RingSpec::torus(Rational::ONE, Rational::ONE);
        assert!(matches!(simplicity_witness(&t, &RingElem::one(&t)), Err(Error::Unsupported(_))));
        let sp = spec(1, 1);
        assert!(matches!(simplicity_witness(&sp, &RingElem::zero(&sp)), Err(Error::ZeroSeed)));
    }

    #[test]
    fn parser() {
        let sp = spec(1, 1);
        let e = parse_ring_elem(&sp, "3/2*x*y^-1 - 1 + x^2").unwrap();
        assert_eq!(e.to_string(), "y^2 + x*(3/2*y^-1)");
        assert!(parse_ring_elem(&sp, "x^-1").is_err());
        assert!(parse_ring_elem(&sp, "z").is_err());
    }

    #[test]
    fn small_sweep() {
        for (theta, p) in [(1, 1), (-1, 1), (1, -1)] {
            let sp = spec(theta, p);
            for seed in seed_sweep(&sp, 2).unwrap() {
                let w = simplicity_witness(&sp, &seed).unwrap();
                assert!(verify_witness(&w), "{seed}");
            }
        }
    }
}
