//! Exact computer algebra for Krichever-Novikov type Lie and Jordan superalgebras.

pub mod algebra;
pub mod axioms;
pub mod cli;
pub mod crosscheck;
pub mod doubling;
pub mod error;
pub mod geometry;
pub mod kernel;
pub mod morphisms;
pub mod ovs;
pub mod presentations;
pub mod representations;
pub mod simplicity;

pub use algebra::{Kind, SuperAlgebra};
pub use error::{Error, Result};
