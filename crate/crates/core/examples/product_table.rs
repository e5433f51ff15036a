//! Prints the bracket of the three-puncture Lie superalgebra on a small window,
//! then the same table as LaTeX through the command line front end.

use kn_algebra::kernel::Rational;
use kn_algebra::presentations::AlgebraHandle;

fn main() -> kn_algebra::Result<()> {
    let l03 = AlgebraHandle::l03(&Rational::from_int(2))?;
    for e in l03.table(1)?.iter().filter(|e| !e.result.is_zero()) {
        println!("[{}, {}] = {}", e.left, e.right, e.result);
    }
    let out = kn_algebra::cli::run(["table", "L03", "--sqrt-alpha", "2", "--window", "1", "--format", "latex"]);
    print!("{}", out.stdout);
    Ok(())
}
