//! The product-rule abstraction shared by presentations, quotients and operator algebras.

use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use crate::error::Result;
use crate::kernel::{BasisKey, LinComb, Parity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lie,
    Jordan,
    Antialgebra,
    Associative,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Lie => "lie",
            Kind::Jordan => "jordan",
            Kind::Antialgebra => "antialgebra",
            Kind::Associative => "associative",
        })
    }
}

/// A superalgebra given by its product on homogeneous basis elements.
pub trait SuperAlgebra {
    type Key: Clone + Ord + Hash + fmt::Display + fmt::Debug;

    fn kind(&self) -> Kind;

    fn parity(&self, key: &Self::Key) -> Parity;

    fn mul_basis(&self, a: &Self::Key, b: &Self::Key) -> Result<LinComb<Self::Key>>;

    /// Bilinear extension of [`SuperAlgebra::mul_basis`].
    fn mul(&self, u: &LinComb<Self::Key>, v: &LinComb<Self::Key>) -> Result<LinComb<Self::Key>> {
        u.bilinear(v, |a, b| self.mul_basis(a, b))
    }
}

/// Basis symbols that carry their own parity.
pub trait Graded: Ord + Clone {
    fn parity(&self) -> Parity;
}

impl Graded for BasisKey {
    fn parity(&self) -> Parity {
        BasisKey::parity(self)
    }
}
