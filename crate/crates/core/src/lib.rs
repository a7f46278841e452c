//! Homological invariants, hereditary torsion pairs and Gabriel topologies of
//! finite-dimensional bound quiver algebras over `ℚ` and `F_p`.
//!
//! Everything is exact: scalars are reduced fractions or residues, and every
//! construction reduces to linear algebra over the ground field. Start with
//! [`family`] or [`parse`] to get an algebra, then use [`module`] for modules,
//! [`homolog`] for resolutions and dimensions, [`torsion`] and [`topology`] for
//! torsion pairs and Gabriel topologies, [`quotient`] for localization, and
//! [`oracle`] for brute-force cross-checks over small finite fields.

pub mod algebra;
pub mod claims;
pub mod cli;
pub mod error;
pub mod family;
pub mod field;
pub mod homolog;
pub mod ideal;
pub mod matrix;
pub mod module;
pub mod oracle;
pub mod parse;
pub mod quotient;
pub mod report;
pub mod theorems;
pub mod topology;
pub mod torsion;

pub use algebra::{build_algebra, AlgebraElement, PathAlgebra, Quiver, Relation};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use module::{ModuleMorphism, Representation};
