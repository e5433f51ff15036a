//! Builds the doubled algebras from the ring x² = 1 + θy^{2p} and its derivation.

use kn_algebra::doubling::{doubled_to_keys, jad_product, lad_bracket, ring_derive, DoubledElem, Flavor, RingElem, RingSpec, Sigma};
use kn_algebra::kernel::Rational;
use kn_algebra::simplicity::parse_ring_elem;

fn main() -> kn_algebra::Result<()> {
    let spec = RingSpec::hyperelliptic(Rational::from_int(3), 2)?;
    let x = RingElem::x(&spec)?;
    println!("ring {spec}");
    println!("D(x) = {}", ring_derive(&x));
    println!("D(y) = {}", ring_derive(&RingElem::y_pow(&spec, 1)));

    let f = parse_ring_elem(&spec, "y^2 + x*y^-1")?;
    let v = DoubledElem::odd(RingElem::y_pow(&spec, 1));
    let w = jad_product(Sigma::One, &DoubledElem::odd(f.clone()), &v)?;
    println!("eta({f}) o eta(y) = {}", doubled_to_keys(&w, Flavor::Jordan));
    for sigma in [Sigma::Half, Sigma::One] {
        let w = jad_product(sigma, &DoubledElem::even(f.clone()), &v)?;
        println!("sigma={sigma:?}: ({f}) o eta(y) = {}", doubled_to_keys(&w, Flavor::Jordan));
    }
    let b = lad_bracket(&DoubledElem::even(f), &v)?;
    println!("Lie: {}", doubled_to_keys(&b, Flavor::Lie));
    Ok(())
}
