//! Exact computations on bounded double complexes and finite commutative
//! differential graded algebras.
//!
//! * [`linalg`]: dense exact linear algebra over ℚ and ℚ(i).
//! * [`bicomplex`]: the bicomplex type, indecomposables and constructions.
//! * [`functors`]: de Rham, Dolbeault, Bott-Chern, Aeppli and related
//!   cohomologies, Hodge filtrations, spectral pages, purity defect.
//! * [`decomposition`]: zigzag multiplicities and realization of tables.
//! * [`conditions`]: the long exact sequence, ddc and ddc+3 verdicts,
//!   numerical inequalities, purity diagrams, j-controlledness.
//! * [`models`]: Vaisman, surface and construction models.
//! * [`cdga`]: free cdgas, cohomology rings, j-minimal models and the
//!   rational-homotopy obstruction.

pub mod bicomplex;
pub mod cdga;
pub mod conditions;
pub mod decomposition;
pub mod error;
pub mod functors;
pub mod gen;
pub mod linalg;
pub mod models;
pub mod par;
pub mod scalar;

pub use error::{Error, Result};
