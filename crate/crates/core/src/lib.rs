//! Exact and numerical tools for quivers: path algebras, necklace Lie
//! algebras, noncommutative differential forms, Kac roots and the
//! Σ_λ stratification of deformed preprojective algebras.
//!
//! Vertices are 1-based in every textual interface and 0-based in the API.

pub mod derivation;
pub mod error;
pub mod forms;
pub mod lie;
pub mod linalg;
pub mod moment;
pub mod necklace;
pub mod path;
pub mod quiver;
pub mod roots;
pub mod scalar;
pub mod strata;

pub use derivation::{derivation_commutator, Derivation};
pub use error::{Error, Result};
pub use forms::{FormBasisElement, FormSum};
pub use lie::{hamiltonian_derivation, kontsevich_bracket};
pub use necklace::{NecklaceSum, NecklaceWord};
pub use path::{Path, PathSum};
pub use quiver::{DimVector, DoubleQuiver, IntegerMatrix, Quiver, Weight};
pub use roots::{BoxCaps, RootClass, RootClassification};
pub use scalar::Scalar;
