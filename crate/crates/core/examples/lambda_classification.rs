//! For which weights λ do the tensor densities carry a Jordan representation?

use kn_algebra::geometry::GeometryConfig;
use kn_algebra::kernel::Rational;
use kn_algebra::representations::{classify_lambda_jordan, RepMode};

fn main() -> kn_algebra::Result<()> {
    let geometric = RepMode::Geometric(GeometryConfig::three(Rational::ONE)?);
    let lams: Vec<Rational> = [(-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1)].iter().map(|&(n, d)| Rational::new(n, d)).collect();
    for v in classify_lambda_jordan(&geometric, &lams, 3)? {
        match v.witness {
            None => println!("{:>4}: closed", v.lambda),
            Some(w) => println!("{:>4}: {} violations, e.g. {w}", v.lambda, v.violations),
        }
    }

    let algebraic = RepMode::Algebraic { theta: Rational::from_int(2), p: 1 };
    let lams: Vec<Rational> = [(0, 1), (1, 8), (1, 4), (1, 3), (1, 2)].iter().map(|&(n, d)| Rational::new(n, d)).collect();
    for v in classify_lambda_jordan(&algebraic, &lams, 3)? {
        println!("{:>4}: {}", v.lambda, v.matches.as_deref().unwrap_or("not closed"));
    }
    Ok(())
}
