//! Pulls the two-puncture superalgebras back along a Möbius map into the
//! three-puncture ones.

use kn_algebra::kernel::Rational;
use kn_algebra::morphisms::check_embedding_iso_witt;

fn main() -> kn_algebra::Result<()> {
    let e = check_embedding_iso_witt(&Rational::from_int(3), 3, false)?;
    for p in &e.printed {
        println!("{:>7} -> {}", p.source, p.computed);
    }
    println!("{} images outside the subalgebra", e.outside_subalgebra);

    let e = check_embedding_iso_witt(&Rational::from_int(3), 3, true)?;
    println!(
        "{} -> {}: {} relation violations, rank {} of {}",
        e.source, e.target, e.relations.violations, e.relations.image_rank, e.relations.domain_dimension
    );
    Ok(())
}
