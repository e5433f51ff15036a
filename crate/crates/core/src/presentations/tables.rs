//! Structure constants of every presented algebra, one function per table.
//!
//! Indices are handled through `HalfInt::twice` so that integer and
//! half-integer subscripts share one arithmetic.

use crate::kernel::{BasisKey, Family, Rational, Scalar, Vector};

use Family::*;

pub(super) struct Out(Vector);

impl Out {
    fn new() -> Self {
        Out(Vector::zero())
    }

    /// Adds `c · fam_{twice/2}`.
    fn add(&mut self, fam: Family, twice: i64, c: impl Into<Scalar>) -> &mut Self {
        self.0.add_term(BasisKey::twice(fam, twice), &c.into());
        self
    }

    fn neg(self) -> Self {
        Out(-&self.0)
    }

    pub(super) fn done(self) -> Vector {
        self.0
    }
}

fn half(t: i64) -> Rational {
    Rational::new(t, 2)
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn odd(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

/// For a half-integer `i = t/2`, whether `i − 1/2` is odd.
fn shifted_odd(t: i64) -> bool {
    odd((t - 1).div_euclid(2))
}

fn int(t: i64) -> i64 {
    debug_assert!(t % 2 == 0);
    t / 2
}

fn s(r: Rational) -> Scalar {
    Scalar::rational(r)
}

fn mul(a: &Scalar, r: Rational) -> Scalar {
    a * &s(r)
}

// ---------------------------------------------------------------------------
// Three punctures.

/// Functions: `G_n G_m`.
pub(super) fn a03(alpha2: &Scalar, ta: i64, tb: i64) -> Out {
    let (n, m) = (int(ta), int(tb));
    let mut o = Out::new();
    o.add(G, 2 * (n + m), 1);
    if odd(n) && odd(m) {
        o.add(G, 2 * (n + m - 2), alpha2.clone());
    }
    o
}

/// Vector fields: `[V_n, V_m]`.
pub(super) fn g03(alpha2: &Scalar, ta: i64, tb: i64) -> Out {
    let (n, m) = (int(ta), int(tb));
    let mut o = Out::new();
    let d = m - n;
    o.add(V, 2 * (n + m), d);
    let low = match (odd(n), odd(m)) {
        (true, true) => 0,
        (true, false) => d - 1,
        (false, false) => d,
        // Skew-symmetric image of the (odd, even) line.
        (false, true) => d + 1,
    };
    o.add(V, 2 * (n + m - 2), mul(alpha2, q(low)));
    o
}

/// `[V_n, phi_i]`.
fn l03_v_phi(alpha2: &Scalar, tn: i64, ti: i64) -> Out {
    let n = int(tn);
    let c = half(ti - n);
    let mut o = Out::new();
    o.add(Phi, tn + ti, c.clone());
    let low = match (odd(n), shifted_odd(ti)) {
        (true, true) => return o,
        (true, false) => &c - &q(1),
        (false, true) => &c + &half(1),
        (false, false) => &c - &half(1),
    };
    o.add(Phi, tn + ti - 4, mul(alpha2, low));
    o
}

pub(super) fn l03(alpha2: &Scalar, a: &BasisKey, b: &BasisKey) -> Out {
    let (ta, tb) = (a.index.twice(), b.index.twice());
    match (a.family, b.family) {
        (V, V) => g03(alpha2, ta, tb),
        (V, Phi) => l03_v_phi(alpha2, ta, tb),
        (Phi, V) => l03_v_phi(alpha2, tb, ta).neg(),
        (Phi, Phi) => {
            let mut o = Out::new();
            let k = (ta + tb) / 2;
            o.add(V, 2 * k, 1);
            if !shifted_odd(ta) && !shifted_odd(tb) {
                o.add(V, 2 * (k - 2), alpha2.clone());
            }
            o
        }
        _ => unreachable!("families checked by the handle"),
    }
}

fn j03_g_phi(alpha2: &Scalar, unit: &Scalar, tn: i64, ti: i64) -> Out {
    let n = int(tn);
    let mut o = Out::new();
    o.add(Phi, tn + ti, unit.clone());
    if odd(n) && !shifted_odd(ti) {
        o.add(Phi, tn + ti - 4, unit * alpha2);
    }
    o
}

pub(super) fn j03(alpha2: &Scalar, unital: bool, a: &BasisKey, b: &BasisKey) -> Out {
    let (ta, tb) = (a.index.twice(), b.index.twice());
    let unit = if unital { Scalar::ONE } else { Scalar::half() };
    match (a.family, b.family) {
        (G, G) => a03(alpha2, ta, tb),
        (G, Phi) => j03_g_phi(alpha2, &unit, ta, tb),
        (Phi, G) => j03_g_phi(alpha2, &unit, tb, ta),
        (Phi, Phi) => {
            let d = half(tb - ta);
            let k = (ta + tb) / 2;
            let mut o = Out::new();
            o.add(G, 2 * k, d.clone());
            let low = match (shifted_odd(ta), shifted_odd(tb)) {
                (true, true) => return o,
                (false, true) => &d + &q(1),
                (false, false) => d,
                // Supercommutative image of the (even, odd) line.
                (true, false) => &d - &q(1),
            };
            o.add(G, 2 * (k - 2), mul(alpha2, low));
            o
        }
        _ => unreachable!("families checked by the handle"),
    }
}

// ---------------------------------------------------------------------------
// Two punctures.

pub(super) fn ak1(a: &BasisKey, b: &BasisKey) -> Out {
    let (ta, tb) = (a.index.twice(), b.index.twice());
    let mut o = Out::new();
    match (a.family, b.family) {
        (Eps, Eps) => o.add(Eps, ta + tb, 1),
        (Eps, SmallA) | (SmallA, Eps) => o.add(SmallA, ta + tb, s(half(1))),
        (SmallA, SmallA) => o.add(Eps, ta + tb, s(Rational::new(tb - ta, 4))),
        _ => unreachable!("families checked by the handle"),
    };
    o
}

pub(super) fn k1(a: &BasisKey, b: &BasisKey) -> Out {
    let (ta, tb) = (a.index.twice(), b.index.twice());
    let mut o = Out::new();
    match (a.family, b.family) {
        (L, L) => {
            o.add(L, ta + tb, s(half(int(tb) - int(ta))));
        }
        // ½(i − n/2) = (2i − n)/4 with 2i = tb, n = ta/2.
        (L, A) => {
            o.add(A, ta + tb, s(Rational::new(tb - int(ta), 4)));
        }
        (A, L) => {
            o.add(A, ta + tb, s(Rational::new(ta - int(tb), 4)));
            return o.neg();
        }
        (A, A) => {
            o.add(L, ta + tb, 1);
        }
        _ => unreachable!("families checked by the handle"),
    }
    o
}

pub(super) fn witt(a: &BasisKey, b: &BasisKey) -> Out {
    let (ta, tb) = (a.index.twice(), b.index.twice());
    let mut o = Out::new();
    o.add(L, ta + tb, int(tb) - int(ta));
    o
}

// ---------------------------------------------------------------------------
// Doubled algebras. A relation tail is a list of `(coefficient, shift)` pairs
// describing `x² = 1 + Σ c·y^shift`: `[(θ, 2p)]` for the hyperelliptic family
// and `[(−θ₁, 2), (−θ₂, 4)]` for the torus.

/// Jordan tables with `x² = 1 + θ y^{2p}`.
pub(super) fn jsigma(theta: &Scalar, p: i64, sigma: &Scalar, a: &BasisKey, b: &BasisKey) -> Out {
    let (ta, tb) = (a.index.twice(), b.index.twice());
    let sh = 4 * p; // 2p in twice units
    let mut o = Out::new();
    match (a.family, b.family) {
        (SmallX, SmallX) => {
            o.add(SmallX, ta + tb, 1);
        }
        (SmallX, SmallY) | (SmallY, SmallX) => {
            o.add(SmallY, ta + tb, 1);
        }
        (SmallY, SmallY) => {
            o.add(SmallX, ta + tb, 1).add(SmallX, ta + tb + sh, theta.clone());
        }
        (SmallX, f @ (SmallA | SmallB)) | (f @ (SmallA | SmallB), SmallX) => {
            o.add(f, ta + tb, sigma.clone());
        }
        (SmallY, SmallA) | (SmallA, SmallY) => {
            o.add(SmallB, ta + tb, sigma.clone());
        }
        (SmallY, SmallB) | (SmallB, SmallY) => {
            o.add(SmallA, ta + tb, sigma.clone())
                .add(SmallA, ta + tb + sh, sigma * theta);
        }
        (SmallA, SmallA) => {
            o.add(SmallY, ta + tb, s(half(tb - ta)));
        }
        (SmallA, SmallB) => {
            let d = half(tb - ta);
            o.add(SmallX, ta + tb, s(d.clone()))
                .add(SmallX, ta + tb + sh, mul(theta, &d + &q(p)));
        }
        (SmallB, SmallA) => {
            let d = half(ta - tb);
            o.add(SmallX, ta + tb, s(d.clone()))
                .add(SmallX, ta + tb + sh, mul(theta, &d + &q(p)));
            return o.neg();
        }
        (SmallB, SmallB) => {
            let d = s(half(tb - ta));
            o.add(SmallY, ta + tb, d.clone())
                .add(SmallY, ta + tb + sh, &d * theta);
        }
        _ => unreachable!("families checked by the handle"),
    }
    o
}

/// Lie tables with `x² = 1 + θ y^{2p}`.
pub(super) fn lthetap(theta: &Scalar, p: i64, a: &BasisKey, b: &BasisKey) -> Out {
    let (ta, tb) = (a.index.twice(), b.index.twice());
    let sh = 4 * p;
    let pr = q(p);
    let mut o = Out::new();
    match (a.family, b.family) {
        (A, A) => {
            o.add(L, ta + tb, 1);
        }
        (B, B) => {
            o.add(L, ta + tb, 1).add(L, ta + tb + sh, theta.clone());
        }
        (A, B) | (B, A) => {
            o.add(H, ta + tb, 1);
        }
        (L | H, A | B) => {
            let c = half(tb - int(ta));
            match (a.family, b.family) {
                (L, A) => o.add(B, ta + tb, s(c)),
                (L, B) => o
                    .add(A, ta + tb, s(c.clone()))
                    .add(A, ta + tb + sh, mul(theta, &c + &pr)),
                (H, A) => o
                    .add(A, ta + tb, s(c.clone()))
                    .add(A, ta + tb + sh, mul(theta, &c - &half(p))),
                _ => o
                    .add(B, ta + tb, s(c.clone()))
                    .add(B, ta + tb + sh, mul(theta, &c + &half(p))),
            };
        }
        (A | B, L | H) => return lthetap(theta, p, b, a).neg(),
        (L, L) => {
            o.add(H, ta + tb, int(tb) - int(ta));
        }
        (L, H) => {
            let d = q(int(tb) - int(ta));
            o.add(L, ta + tb, s(d.clone()))
                .add(L, ta + tb + sh, mul(theta, &d + &pr));
        }
        (H, L) => return lthetap(theta, p, b, a).neg(),
        (H, H) => {
            let d = s(q(int(tb) - int(ta)));
            o.add(H, ta + tb, d.clone()).add(H, ta + tb + sh, &d * theta);
        }
        _ => unreachable!("families checked by the handle"),
    }
    o
}

/// Jordan tables on the torus, `x² = 1 − θ₁y² − θ₂y⁴`.
pub(super) fn jtorus(t1: &Scalar, t2: &Scalar, sigma: &Scalar, a: &BasisKey, b: &BasisKey) -> Out {
    let (ta, tb) = (a.index.twice(), b.index.twice());
    let (m1, m2) = (-t1, -t2);
    let mut o = Out::new();
    match (a.family, b.family) {
        (SmallY, SmallY) => {
            o.add(SmallX, ta + tb, 1)
                .add(SmallX, ta + tb + 4, m1)
                .add(SmallX, ta + tb + 8, m2);
        }
        (SmallY, SmallB) | (SmallB, SmallY) => {
            o.add(SmallA, ta + tb, sigma.clone())
                .add(SmallA, ta + tb + 4, sigma * &m1)
                .add(SmallA, ta + tb + 8, sigma * &m2);
        }
        (SmallA, SmallB) => {
            let d = half(tb - ta);
            o.add(SmallX, ta + tb, s(d.clone()))
                .add(SmallX, ta + tb + 4, mul(&m1, &d + &q(1)))
                .add(SmallX, ta + tb + 8, mul(&m2, &d + &q(2)));
        }
        (SmallB, SmallA) => return jtorus(t1, t2, sigma, b, a).neg(),
        (SmallB, SmallB) => {
            let d = s(half(tb - ta));
            o.add(SmallY, ta + tb, d.clone())
                .add(SmallY, ta + tb + 4, &d * &m1)
                .add(SmallY, ta + tb + 8, &d * &m2);
        }
        // The remaining lines carry no relation terms and coincide with the
        // hyperelliptic table.
        _ => return jsigma(&Scalar::ZERO, 1, sigma, a, b),
    }
    o
}

/// Lie tables on the torus.
pub(super) fn ltorus(t1: &Scalar, t2: &Scalar, a: &BasisKey, b: &BasisKey) -> Out {
    let (ta, tb) = (a.index.twice(), b.index.twice());
    let (m1, m2) = (-t1, -t2);
    let mut o = Out::new();
    let three = |o: &mut Out, fam: Family, c0: Rational, c1: Rational, c2: Rational| {
        o.add(fam, ta + tb, s(c0))
            .add(fam, ta + tb + 4, mul(&m1, c1))
            .add(fam, ta + tb + 8, mul(&m2, c2));
    };
    match (a.family, b.family) {
        (A, A) => {
            o.add(L, ta + tb, 1);
        }
        (A, B) | (B, A) => {
            o.add(H, ta + tb, 1);
        }
        (B, B) => three(&mut o, L, q(1), q(1), q(1)),
        (L, A) => {
            o.add(B, ta + tb, s(half(tb - int(ta))));
        }
        (L, B) => {
            let c = half(tb - int(ta));
            three(&mut o, A, c.clone(), &c + &q(1), &c + &q(2));
        }
        (H, A) => {
            let c = half(tb - int(ta));
            three(&mut o, A, c.clone(), &c - &half(1), &c - &q(1));
        }
        (H, B) => {
            let c = half(tb - int(ta));
            three(&mut o, B, c.clone(), &c + &half(1), &c + &q(1));
        }
        (A | B, L | H) | (H, L) => return ltorus(t1, t2, b, a).neg(),
        (L, L) => {
            o.add(H, ta + tb, int(tb) - int(ta));
        }
        (L, H) => {
            let d = q(int(tb) - int(ta));
            three(&mut o, L, d.clone(), &d + &q(1), &d + &q(2));
        }
        (H, H) => {
            let d = q(int(tb) - int(ta));
            three(&mut o, H, d.clone(), d.clone(), d);
        }
        _ => unreachable!("families checked by the handle"),
    }
    o
}
