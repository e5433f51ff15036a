//! Homomorphism checks: a map given in JSON, and the sublattice correspondence
//! between the three-puncture algebras and the doubled ones.

use kn_algebra::kernel::Rational;
use kn_algebra::morphisms::{check_homomorphism, check_sublattice_correspondence, HomSpecFile};

const SPEC: &str = r#"{
    "source": {"name": "Witt"},
    "target": {"name": "K1"},
    "images": [
        {"key": "L_-2", "vector": {"L_-2": "2"}},
        {"key": "L_-1", "vector": {"L_-1": "2"}},
        {"key": "L_0", "vector": {"L_0": "2"}},
        {"key": "L_1", "vector": {"L_1": "2"}},
        {"key": "L_2", "vector": {"L_2": "2"}}
    ]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file: HomSpecFile = serde_json::from_str(SPEC)?;
    let (spec, target) = file.resolve()?;
    let r = check_homomorphism(&spec, &target, 1)?;
    println!("{} -> {}: {} violations, injective {}", r.source, r.target, r.violations, r.injective());

    let (j, l) = check_sublattice_correspondence(&Rational::from_int(2), 2)?;
    for r in [j, l] {
        println!("{} -> {}: {} pairs, {} violations", r.source, r.target, r.pairs_checked, r.violations);
    }
    Ok(())
}
