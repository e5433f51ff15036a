//! Multiplies tensor densities on the thrice-punctured sphere and reads the
//! result back in the Krichever-Novikov basis.

use kn_algebra::crosscheck::cross_check_geometry;
use kn_algebra::geometry::{expand_in_basis, jkn_product, make_kn_basis, GeometryConfig};
use kn_algebra::kernel::{BasisKey, Rational};
use kn_algebra::presentations::AlgebraHandle;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = Rational::from_int(2);
    let cfg = GeometryConfig::three(s.clone())?;
    let phi: BasisKey = "phi_1/2".parse()?;
    let g: BasisKey = "G_-1".parse()?;
    let (u, v) = (make_kn_basis(&cfg, &phi)?, make_kn_basis(&cfg, &g)?);
    println!("{phi} = {u}");
    println!("{g} = {v}");
    let w = jkn_product(&u, &v, false)?;
    println!("product = {w}");
    println!("        = {}", expand_in_basis(&cfg, &w)?);

    for h in [AlgebraHandle::j03(&s)?, AlgebraHandle::l03(&s)?] {
        let r = cross_check_geometry(&h, 3)?;
        println!("{}: {} pairs against {}, {} mismatches", r.algebra, r.pairs_checked, r.oracle, r.mismatches);
    }
    Ok(())
}
