use proptest::prelude::*;

use kn_algebra::doubling::{ring_derive, ring_mul, LaurentPoly, RingElem, RingSpec};
use kn_algebra::kernel::{BasisKey, Family, LinComb, Parity, Rational, Scalar, Vector};
use kn_algebra::presentations::AlgebraHandle;
use kn_algebra::simplicity::{simplicity_witness, verify_witness};
use kn_algebra::{Kind, SuperAlgebra};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != Rational::ZERO)
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(|(a, b)| Scalar::new(a, b))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -5i64..=5), 0..4)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(n, c)| (n, Scalar::from_int(c)))))
}

fn hyperelliptic() -> impl Strategy<Value = RingSpec> {
    (nonzero_rational(), prop_oneof![-3i64..=-1, 1i64..=3])
        .prop_map(|(t, p)| RingSpec::hyperelliptic(t, p).expect("valid parameters"))
}

fn ring_elem(spec: RingSpec) -> impl Strategy<Value = RingElem> {
    (laurent(), laurent()).prop_map(move |(f, g)| RingElem::new(&spec, f, g).expect("hyperelliptic ring has x"))
}

/// An algebra together with a few basis elements from its window.
fn algebra() -> impl Strategy<Value = AlgebraHandle> {
    let s = prop_oneof![Just(Rational::ONE), Just(Rational::from_int(2)), Just(Rational::new(1, 2))];
    (0usize..9, s, nonzero_rational(), prop_oneof![-2i64..=-1, 1i64..=2], rational(), rational()).prop_map(
        |(which, s, t, p, t1, t2)| match which {
            0 => AlgebraHandle::l03(&s).unwrap(),
            1 => AlgebraHandle::j03(&s).unwrap(),
            2 => AlgebraHandle::a03(&s).unwrap(),
            3 => AlgebraHandle::k1(),
            4 => AlgebraHandle::ak1(),
            5 => AlgebraHandle::jsigma(&t, p, &Rational::new(1, 2)).unwrap(),
            6 => AlgebraHandle::jsigma(&t, p, &Rational::ONE).unwrap(),
            7 => AlgebraHandle::lthetap(&t, p).unwrap(),
            _ => AlgebraHandle::ltorus(&t1, &t2),
        },
    )
}

fn pick(h: &AlgebraHandle, i: usize) -> BasisKey {
    let b = h.basis(3);
    b[i % b.len()]
}

fn vector(h: &AlgebraHandle, picks: &[(usize, i64)]) -> Vector {
    LinComb::from_terms(picks.iter().map(|(i, c)| (pick(h, *i), Scalar::from_int(*c))))
}

proptest! {
    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn basis_key_text_round_trip(twice in -40i64..40, f in 0usize..4) {
        let (family, t) = [(Family::G, 2 * twice), (Family::Phi, 2 * twice + 1), (Family::SmallB, 2 * twice + 1), (Family::L, 2 * twice)][f];
        let k = BasisKey::twice(family, t);
        prop_assert_eq!(k.to_string().parse::<BasisKey>().unwrap(), k);
    }

    #[test]
    fn products_are_super_symmetric(h in algebra(), i in 0usize..64, j in 0usize..64) {
        let (a, b) = (pick(&h, i), pick(&h, j));
        let ab = h.mul_basis(&a, &b).unwrap();
        let ba = h.mul_basis(&b, &a).unwrap();
        let sign = Parity::koszul(a.parity(), b.parity());
        // Lie brackets are super skew, the other kinds super commutative.
        let sign = if h.kind() == Kind::Lie { -sign } else { sign };
        prop_assert_eq!(ab, ba.scale(&Scalar::from_int(sign)), "{} and {} in {}", a, b, h.name());
    }

    #[test]
    fn products_are_bilinear(
        h in algebra(),
        u in prop::collection::vec((0usize..64, -3i64..=3), 1..4),
        v in prop::collection::vec((0usize..64, -3i64..=3), 1..4),
        w in prop::collection::vec((0usize..64, -3i64..=3), 1..4),
    ) {
        let (u, v, w) = (vector(&h, &u), vector(&h, &v), vector(&h, &w));
        let lhs = h.mul(&LinComb::linear(&u, &v, &Scalar::ONE), &w).unwrap();
        let rhs = LinComb::linear(&h.mul(&u, &w).unwrap(), &h.mul(&v, &w).unwrap(), &Scalar::ONE);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_derivation_is_leibniz((u, v) in hyperelliptic().prop_flat_map(|s| (ring_elem(s.clone()), ring_elem(s)))) {
        let lhs = ring_derive(&ring_mul(&u, &v).unwrap());
        let rhs = ring_mul(&ring_derive(&u), &v).unwrap().add(&ring_mul(&u, &ring_derive(&v)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_product_is_commutative((u, v) in hyperelliptic().prop_flat_map(|s| (ring_elem(s.clone()), ring_elem(s)))) {
        prop_assert_eq!(ring_mul(&u, &v).unwrap(), ring_mul(&v, &u).unwrap());
    }

    #[test]
    fn nonzero_seeds_generate_the_ring(u in hyperelliptic().prop_flat_map(ring_elem)) {
        prop_assume!(!u.is_zero());
        let w = simplicity_witness(&u.spec, &u).unwrap();
        prop_assert!(verify_witness(&w));
    }
}
