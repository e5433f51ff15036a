use super::*;
use crate::ovs::build_quotient_for;
use crate::representations::{Cached, GeometricAction, GeometricRep, ZeroRep};

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

fn k(s: &str) -> BasisKey {
    s.parse().unwrap()
}

#[test]
fn identity_is_a_homomorphism() {
    for name in ["J03", "L03", "AK1", "K1", "Jsigma", "Lthetap"] {
        let h = AlgebraHandle::by_name(name, &Params::default()).unwrap();
        let spec = HomSpec::from_fn(h.clone(), name, 6, |k| Ok(Vector::basis(*k))).unwrap();
        let report = check_homomorphism(&spec, &h, 2).unwrap();
        assert!(report.passed(), "{name}: {report:?}");
    }
}

#[test]
fn ovs_map_and_its_mutation() {
    let good = check_ovs_map(&r(1), 2, &Scalar::ONE).unwrap();
    assert!(good.passed(), "{good:?}");
    let bad = check_ovs_map(&r(1), 2, &Scalar::half()).unwrap();
    assert!(bad.violations > 0);
}

#[test]
fn sublattice_correspondence() {
    for s in [1, 2] {
        let (j, l) = check_sublattice_correspondence(&r(s), 3).unwrap();
        assert!(j.passed(), "{j:?}");
        assert!(l.passed(), "{l:?}");
    }
}

#[test]
fn embedding_generators_and_relations() {
    for s in [1, 2, 3] {
        let e = check_embedding_iso_witt(&r(s), 2, false).unwrap();
        assert!(e.passed(), "{e:?}");
        assert_eq!(e.printed.len(), 3);
        let e = check_embedding_iso_witt(&r(s), 2, true).unwrap();
        assert!(e.passed(), "{e:?}");
    }
}

#[test]
fn odd_generator_image_squares_to_zero() {
    let s = r(2);
    let cfg = GeometryConfig::three(s.clone()).unwrap();
    let j = AlgebraHandle::j03(&s).unwrap();
    let img = pullback_image(&cfg, &k("a_-1/2")).unwrap();
    assert!(j.mul(&img, &img).unwrap().is_zero());
}

#[test]
fn r_maps_are_derivations() {
    for rep in check_all_r_maps(&r(1), 2).unwrap() {
        assert!(rep.passed(), "{rep:?}");
    }
}

#[test]
fn left_multiplication_is_not_a_derivation() {
    let j = AlgebraHandle::j03(&r(1)).unwrap();
    let d = left_multiplication(&j, &k("G_1"));
    let rep = check_derivation(&j, &d, 2).unwrap();
    assert!(rep.violations > 0);
    assert!(rep.first_violation.is_some());
}

#[test]
fn r_is_a_lie_map() {
    let s = r(1);
    let cfg = GeometryConfig::three(s.clone()).unwrap();
    let l = AlgebraHandle::l03(&s).unwrap();
    let j = AlgebraHandle::j03(&s).unwrap();
    let r_of = |v: &Vector| -> LinearMap<'_> {
        let cfg = &cfg;
        let v = v.clone();
        LinearMap::new("R", parity_of(&v), move |a| {
            let mut out = Vector::zero();
            for (key, c) in &v {
                let d = if key.family == Family::V { r_vector_field(cfg, key)? } else { r_half_density(cfg, key)? };
                out.add_scaled(&d.apply_basis(a)?, c);
            }
            Ok(out)
        })
    };
    let gens = l.basis(1);
    for f in &gens {
        for g in &gens {
            let (rf, rg) = (r_of(&Vector::basis(*f)), r_of(&Vector::basis(*g)));
            let rfg = r_of(&l.mul_basis(f, g).unwrap());
            let sign = Scalar::from_int(-Parity::koszul(f.parity(), g.parity()));
            for a in j.basis(2) {
                let lhs = rfg.apply_basis(&a).unwrap();
                let fg = rf.apply(&rg.apply_basis(&a).unwrap()).unwrap();
                let gf = rg.apply(&rf.apply_basis(&a).unwrap()).unwrap();
                // R reverses brackets: R_{[f,g]} = [R_g, R_f].
                assert_eq!(lhs, LinComb::linear(&gf, &fg, &sign), "[{f}, {g}] on {a}");
            }
        }
    }
}

fn parity_of(v: &Vector) -> Parity {
    v.keys().next().map_or(Parity::Even, |k| k.parity())
}

#[test]
fn window_derivations_match_vector_fields() {
    let d = window_derivations(&r(1), 3, 3).unwrap();
    assert!(d.matches(), "{d:?}");
    assert_eq!(d.dimension(), 10);
}

#[test]
fn extension_of_half_unit_representation() {
    let s = r(1);
    let cfg = GeometryConfig::three(s.clone()).unwrap();
    let j = AlgebraHandle::j03(&s).unwrap();
    let l = AlgebraHandle::l03(&s).unwrap();
    let q = build_quotient_for(&j, 8).unwrap();
    let rho = Cached::new(GeometricRep::new(cfg.clone(), &Rational::ZERO, GeometricAction::Jordan).unwrap());
    let module = GeometricRep::module_basis(2);
    let (ext, report) = extend_la_rep(&rho, &q, &j.basis(2), 2, &module).unwrap();
    assert!(report.passed(), "{report:?}");
    let tilde = GeometricRep::new(cfg, &Rational::ZERO, GeometricAction::Lie).unwrap();
    let map = ovs_map_spec(l.clone(), &q, 2).unwrap();
    assert!(extension_agrees(&ext, &tilde, &map, &l.basis(2), &module).unwrap());
}

#[test]
fn extension_rejects_weight_one() {
    let s = r(1);
    let cfg = GeometryConfig::three(s.clone()).unwrap();
    let j = AlgebraHandle::j03(&s).unwrap();
    let q = build_quotient_for(&j, 6).unwrap();
    let rho = GeometricRep::new(cfg, &Rational::ONE, GeometricAction::Jordan).unwrap();
    let err = extend_la_rep(&rho, &q, &j.basis(2), 2, &GeometricRep::module_basis(2)).err().unwrap();
    assert!(matches!(err, Error::NotLaRepresentation(_)));
}

#[test]
fn zero_representation_extends_to_zero() {
    let j = AlgebraHandle::j03(&r(1)).unwrap();
    let q = build_quotient_for(&j, 8).unwrap();
    let module = GeometricRep::module_basis(1);
    let (ext, report) = extend_la_rep(&ZeroRep, &q, &j.basis(2), 2, &module).unwrap();
    assert!(report.passed());
    let pair = OvsKey::Pair(crate::ovs::OddPair::new(k("phi_1/2"), k("phi_-1/2")));
    assert!(ext.act(&pair, &module[0]).unwrap().is_zero());
}

#[test]
fn hom_spec_file_round_trip() {
    let json = r#"{
        "source": {"name": "Witt"},
        "target": {"name": "K1"},
        "images": [
            {"key": "L_0", "vector": {"L_0": "1"}},
            {"key": "L_1", "vector": {"L_1": "1"}},
            {"key": "L_-1", "vector": {"L_-1": "1"}}
        ]
    }"#;
    let file: HomSpecFile = serde_json::from_str(json).unwrap();
    let (spec, target) = file.resolve().unwrap();
    let report = check_homomorphism(&spec, &target, 0).unwrap();
    assert!(report.passed());
    let bad = r#"{"source": {"name": "Witt"}, "target": {"name": "K1"}, "images": [{"key": "x_0", "vector": {}}]}"#;
    let file: HomSpecFile = serde_json::from_str(bad).unwrap();
    assert!(file.resolve().is_err());
}
