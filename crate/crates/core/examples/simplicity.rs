//! A certificate that the ideal generated by a seed and closed under D is the whole ring.

use kn_algebra::doubling::RingSpec;
use kn_algebra::kernel::Rational;
use kn_algebra::simplicity::{forge_step, parse_ring_elem, simplicity_witness, verify_witness};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = RingSpec::hyperelliptic(Rational::ONE, 2)?;
    let seed = parse_ring_elem(&spec, "y^-1 + x*y^2")?;
    let w = simplicity_witness(&spec, &seed)?;
    println!("{}", serde_json::to_string_pretty(&w)?);
    println!("valid: {}", verify_witness(&w));
    println!("forged step 3 valid: {}", verify_witness(&forge_step(&w, 3)));
    Ok(())
}
