use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{HalfInt, KernelError};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    /// Parity of a product of homogeneous elements.
    pub fn plus(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `(-1)^{|a||b|}` as ±1.
    pub fn koszul(a: Parity, b: Parity) -> i64 {
        if a.is_odd() && b.is_odd() {
            -1
        } else {
            1
        }
    }
}

/// Symbol families for every indexed basis in the crate.
///
/// Parity and the integrality of the index are properties of the family.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    /// Functions on the three-punctured sphere.
    G,
    /// Vector fields on the three-punctured sphere.
    V,
    /// Half-densities (odd part of the Krichever-Novikov superalgebras).
    Phi,
    /// Laurent monomials (two punctures).
    Eps,
    /// Odd generators `a_i` of the antialgebra presentations.
    SmallA,
    SmallB,
    SmallX,
    SmallY,
    L,
    H,
    A,
    B,
    /// Even operators `X_n`, `Y_n` of the Jordan operator family.
    OpX,
    OpY,
    /// Module keys of the algebraic density modules.
    ModF,
    ModG,
    ModPhi,
    ModGamma,
    /// Geometric module keys: `G_n (dz)^λ` and `G_n (dz)^{λ+1/2}`.
    DensV,
    DensW,
}

impl Family {
    pub const ALL: [Family; 20] = [
        Family::G,
        Family::V,
        Family::Phi,
        Family::Eps,
        Family::SmallA,
        Family::SmallB,
        Family::SmallX,
        Family::SmallY,
        Family::L,
        Family::H,
        Family::A,
        Family::B,
        Family::OpX,
        Family::OpY,
        Family::ModF,
        Family::ModG,
        Family::ModPhi,
        Family::ModGamma,
        Family::DensV,
        Family::DensW,
    ];

    pub fn parity(self) -> Parity {
        use Family::*;
        match self {
            Phi | SmallA | SmallB | A | B | ModPhi | ModGamma | DensW => Parity::Odd,
            _ => Parity::Even,
        }
    }

    /// Whether indices of this family lie in ℤ + ½ rather than ℤ.
    pub fn half_integer_index(self) -> bool {
        use Family::*;
        matches!(self, Phi | SmallA | SmallB | A | B | ModPhi | ModGamma)
    }

    pub fn symbol(self) -> &'static str {
        use Family::*;
        match self {
            G => "G",
            V => "V",
            Phi => "phi",
            Eps => "eps",
            SmallA => "a",
            SmallB => "b",
            SmallX => "x",
            SmallY => "y",
            L => "L",
            H => "H",
            A => "A",
            B => "B",
            OpX => "X",
            OpY => "Y",
            ModF => "f",
            ModG => "g",
            ModPhi => "vphi",
            ModGamma => "gamma",
            DensV => "v",
            DensW => "w",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.symbol() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// An indexed basis symbol such as `G_2` or `phi_-1/2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKey {
    pub family: Family,
    pub index: HalfInt,
}

impl BasisKey {
    pub fn new(family: Family, index: HalfInt) -> Result<Self, KernelError> {
        if family.half_integer_index() == index.is_integer() {
            return Err(KernelError::IndexParity { family, index });
        }
        Ok(BasisKey { family, index })
    }

    /// Integer-indexed key; panics on a half-integer family.
    pub fn int(family: Family, n: i64) -> Self {
        Self::new(family, HalfInt::int(n)).expect("integer-indexed family")
    }

    /// Key with index given by its double; panics on a parity mismatch.
    pub fn twice(family: Family, twice: i64) -> Self {
        Self::new(family, HalfInt::from_twice(twice)).expect("index parity matches family")
    }

    pub fn parity(&self) -> Parity {
        self.family.parity()
    }

    pub fn shifted(&self, by: HalfInt) -> Result<Self, KernelError> {
        Self::new(self.family, self.index + by)
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.index)
    }
}

impl fmt::Debug for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BasisKey {
    type Err = KernelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (fam, idx) = s
            .trim()
            .split_once('_')
            .ok_or_else(|| KernelError::Parse(s.to_string()))?;
        let family = Family::from_symbol(fam).ok_or_else(|| KernelError::Parse(s.to_string()))?;
        BasisKey::new(family, idx.parse()?)
    }
}

impl Serialize for BasisKey {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BasisKey {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
