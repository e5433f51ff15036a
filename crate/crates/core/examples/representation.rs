//! Checks a density module directly: does the anticommutator of the operators
//! reproduce the product?

use kn_algebra::geometry::GeometryConfig;
use kn_algebra::kernel::Rational;
use kn_algebra::presentations::AlgebraHandle;
use kn_algebra::representations::{check_representation, BracketKind, Cached, GeometricAction, GeometricRep};

fn main() -> kn_algebra::Result<()> {
    let s = Rational::ONE;
    let cfg = GeometryConfig::three(s.clone())?;
    let j03 = AlgebraHandle::j03(&s)?;
    let l03 = AlgebraHandle::l03(&s)?;
    let module = GeometricRep::module_basis(3);
    for lam in [Rational::ZERO, Rational::new(1, 2), Rational::ONE] {
        let rho = Cached::new(GeometricRep::new(cfg.clone(), &lam, GeometricAction::Jordan)?);
        let r = check_representation(&rho, &j03, BracketKind::Anticommutator, &j03.basis(2), &module)?;
        println!("Jordan, lambda={lam}: {} pairs, {} violations", r.pairs_checked, r.violations);
        let rho = Cached::new(GeometricRep::new(cfg.clone(), &lam, GeometricAction::Lie)?);
        let r = check_representation(&rho, &l03, BracketKind::Commutator, &l03.basis(2), &module)?;
        println!("Lie,    lambda={lam}: {} pairs, {} violations", r.pairs_checked, r.violations);
    }
    Ok(())
}
