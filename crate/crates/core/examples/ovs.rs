//! The adjoint Lie superalgebra of the three-puncture antialgebra, compared with
//! the Lie superalgebra of vector fields and half-densities.

use kn_algebra::kernel::{Rational, Scalar};
use kn_algebra::morphisms::check_ovs_map;
use kn_algebra::ovs::{build_quotient_for, check_three_point_isomorphism};
use kn_algebra::presentations::AlgebraHandle;

fn main() -> kn_algebra::Result<()> {
    let s = Rational::ONE;
    let j03 = AlgebraHandle::j03(&s)?;
    let q = build_quotient_for(&j03, 4)?;
    println!(
        "{} odd generators, {} pairs, {} relations, even part of dimension {}",
        q.odd_basis().len(),
        q.pair_count(),
        q.relation_rank(),
        q.even_dimension()
    );

    let iso = check_three_point_isomorphism(&s, 3)?;
    println!("isomorphism on window 3: {} brackets, {} violations", iso.brackets_checked, iso.bracket_violations);

    // Rescaling the map breaks it.
    for c in [Scalar::ONE, Scalar::half()] {
        let r = check_ovs_map(&s, 2, &c)?;
        println!("scale {c}: {} violations out of {}", r.violations, r.pairs_checked);
    }
    Ok(())
}
