use thiserror::Error;

use crate::geometry::GeometryError;
use crate::kernel::{BasisKey, KernelError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("{key} is not a basis element of {algebra}")]
    UnknownFamily { key: String, algebra: String },
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{left} * {right} leaves the selected subspace through {outside}")]
    ClosureViolation {
        left: BasisKey,
        right: BasisKey,
        outside: BasisKey,
    },
    #[error("{0} is outside the verified window; enlarge the window")]
    WindowExceeded(String),
    #[error("{0} is not in the target subalgebra")]
    NotInSubalgebra(String),
    #[error("not an LA-representation: {0}")]
    NotLaRepresentation(String),
    #[error("the seed of a simplicity witness must be nonzero")]
    ZeroSeed,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ring elements over different relations")]
    SpecMismatch,
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
