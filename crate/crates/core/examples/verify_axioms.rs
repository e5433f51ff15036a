//! Checks the Jordan identities of the σ = 1 doubled algebra on window 5.

use std::time::Instant;

use kn_algebra::axioms::{verify_axioms, Coverage};
use kn_algebra::kernel::Rational;
use kn_algebra::presentations::AlgebraHandle;

fn main() -> kn_algebra::Result<()> {
    let h = AlgebraHandle::jsigma(&Rational::new(3, 2), 1, &Rational::ONE)?;
    let start = Instant::now();
    let report = verify_axioms(&h, 5, Coverage::Exhaustive)?;
    for o in &report.outcomes {
        println!("{:<4} {:>9} tuples  {} violations", o.identity, o.tuples_checked, o.violations);
    }
    println!("basis {} in {:.2?}", report.basis_size, start.elapsed());
    Ok(())
}
