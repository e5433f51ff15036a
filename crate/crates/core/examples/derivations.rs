//! Derivations of the three-puncture antialgebra coming from vector fields and
//! half-densities, and the dimension of all derivations on a window.

use kn_algebra::kernel::Rational;
use kn_algebra::morphisms::{check_all_r_maps, window_derivations};

fn main() -> kn_algebra::Result<()> {
    let s = Rational::ONE;
    for r in check_all_r_maps(&s, 2)? {
        println!("{:<12} {:>4} pairs  {} violations", r.map, r.pairs_checked, r.violations);
    }
    for (n, k) in [(2, 3), (3, 3), (3, 4)] {
        let d = window_derivations(&s, n, k)?;
        println!(
            "window {n}, margin {k}: {} derivations, {} from vector fields and half-densities",
            d.dimension(),
            d.lie_window_dimension()
        );
    }
    Ok(())
}
