use super::*;

fn k(s: &str) -> BasisKey {
    s.parse().unwrap()
}

fn v(terms: &[(&str, Scalar)]) -> Vector {
    terms.iter().map(|(s, c)| (k(s), c.clone())).collect()
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[test]
fn j03_unital_square_of_g1() {
    let j = AlgebraHandle::j03_unital(&r(2, 1)).unwrap();
    let got = j.mul_basis(&k("G_1"), &k("G_1")).unwrap();
    assert_eq!(got, v(&[("G_2", Scalar::ONE), ("G_0", Scalar::from_int(16))]));
}

#[test]
fn jsigma_a_times_b() {
    let th = r(3, 1);
    let j = AlgebraHandle::jsigma(&th, 2, &r(1, 2)).unwrap();
    let got = j.mul_basis(&k("a_1/2"), &k("b_1/2")).unwrap();
    assert_eq!(got, v(&[("x_5", Scalar::from_int(6))]));
}

#[test]
fn lthetap_b_bracket() {
    let l = AlgebraHandle::lthetap(&r(5, 1), -1).unwrap();
    let got = l.mul_basis(&k("B_1/2"), &k("B_-1/2")).unwrap();
    assert_eq!(got, v(&[("L_0", Scalar::ONE), ("L_-2", Scalar::from_int(5))]));
}

#[test]
fn j03_phi_product() {
    let j = AlgebraHandle::j03(&r(1, 1)).unwrap();
    let got = j.mul_basis(&k("phi_3/2"), &k("phi_5/2")).unwrap();
    assert_eq!(got, v(&[("G_4", Scalar::ONE)]));
}

#[test]
fn invalid_parameters_rejected() {
    assert!(matches!(AlgebraHandle::jsigma(&r(0, 1), 1, &r(1, 1)), Err(Error::InvalidParameter(_))));
    assert!(matches!(AlgebraHandle::jsigma(&r(1, 1), 1, &r(1, 3)), Err(Error::InvalidParameter(_))));
    assert!(matches!(AlgebraHandle::lthetap(&r(1, 1), 0), Err(Error::InvalidParameter(_))));
    assert!(matches!(AlgebraHandle::g03(&r(0, 1)), Err(Error::InvalidParameter(_))));
    assert!(matches!(AlgebraHandle::by_name("nope", &Params::default()), Err(Error::UnknownAlgebra(_))));
}

#[test]
fn foreign_family_rejected() {
    let w = AlgebraHandle::witt();
    assert!(matches!(w.mul_basis(&k("L_1"), &k("A_1/2")), Err(Error::UnknownFamily { .. })));
}

#[test]
fn kinds() {
    let p = Params::default();
    let expect = [
        ("A03", Kind::Associative),
        ("g03", Kind::Lie),
        ("J03", Kind::Antialgebra),
        ("J03u", Kind::Jordan),
        ("Jsigma", Kind::Antialgebra),
        ("K1", Kind::Lie),
    ];
    for (name, kind) in expect {
        assert_eq!(AlgebraHandle::by_name(name, &p).unwrap().kind(), kind, "{name}");
    }
    let j1 = AlgebraHandle::jsigma(&r(1, 1), 1, &r(1, 1)).unwrap();
    assert_eq!(j1.kind(), Kind::Jordan);
}

#[test]
fn basis_respects_window_and_parity() {
    let l = AlgebraHandle::l03(&r(1, 1)).unwrap();
    let b = l.basis(1);
    // V_-1, V_0, V_1 and phi_-1/2, phi_1/2
    assert_eq!(b.len(), 5);
    assert!(b.contains(&k("phi_-1/2")));
}

#[test]
fn printed_sublattice_closes_but_odd_one_fails() {
    let j = AlgebraHandle::jsigma(&r(1, 1), 2, &r(1, 2)).unwrap();
    let good = KeyFilter::sublattice(
        "even sublattice",
        vec![
            (Family::SmallX, HalfInt::int(0), 2),
            (Family::SmallY, HalfInt::int(1), 2),
            (Family::SmallA, HalfInt::from_twice(-1), 2),
            (Family::SmallB, HalfInt::from_twice(1), 2),
        ],
    );
    assert!(j.subalgebra_select(good, 6).is_ok());
    let bad = KeyFilter::sublattice("x only even", vec![(Family::SmallX, HalfInt::int(0), 2)]);
    assert!(matches!(j.subalgebra_select(bad, 6), Err(Error::ClosureViolation { .. })));
}
