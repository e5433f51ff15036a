//! Extends a representation of the antialgebra to its adjoint Lie superalgebra.

use kn_algebra::geometry::GeometryConfig;
use kn_algebra::kernel::Rational;
use kn_algebra::morphisms::{extend_la_rep, extension_agrees, ovs_map_spec};
use kn_algebra::ovs::build_quotient_for;
use kn_algebra::presentations::AlgebraHandle;
use kn_algebra::representations::{Cached, GeometricAction, GeometricRep};

fn main() -> kn_algebra::Result<()> {
    let s = Rational::ONE;
    let cfg = GeometryConfig::three(s.clone())?;
    let j03 = AlgebraHandle::j03(&s)?;
    let l03 = AlgebraHandle::l03(&s)?;
    let q = build_quotient_for(&j03, 8)?;
    let module = GeometricRep::module_basis(2);
    for lam in [Rational::ZERO, Rational::new(1, 2), Rational::ONE] {
        let rho = Cached::new(GeometricRep::new(cfg.clone(), &lam, GeometricAction::Jordan)?);
        match extend_la_rep(&rho, &q, &j03.basis(2), 2, &module) {
            Ok((ext, report)) => {
                let tilde = GeometricRep::new(cfg.clone(), &lam, GeometricAction::Lie)?;
                let map = ovs_map_spec(l03.clone(), &q, 2)?;
                let agrees = extension_agrees(&ext, &tilde, &map, &l03.basis(2), &module)?;
                println!("lambda={lam}: extends ({}), agrees with the density action: {agrees}", report.passed());
            }
            Err(e) => println!("lambda={lam}: {e}"),
        }
    }
    Ok(())
}
