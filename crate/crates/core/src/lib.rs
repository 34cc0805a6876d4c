//! Exact-arithmetic engine for finite-dimensional Lie algebras over ℚ.
//!
//! The modules build on each other in this order: [`exactla`] (rational linear
//! algebra), [`liealg`] (structure constants), [`cecohom`] (Chevalley–Eilenberg
//! complex), [`koszul`] (invariant forms and the Koszul map), [`leibniz`]
//! (Leibniz coboundary and the HL² decomposition), [`rootkit`] (root systems,
//! nilradicals, Borel subalgebras), [`gcm`] (generalized Cartan matrices) and
//! [`catalog`] (named algebras with their expected invariants).

pub mod catalog;
pub mod cecohom;
pub mod combin;
pub mod exactla;
pub mod gcm;
pub mod koszul;
pub mod leibniz;
pub mod liealg;
pub mod rootkit;

pub use catalog::{CatalogError, Expected};
pub use cecohom::{Coefficients, Cochain, CohomError};
pub use exactla::{LinAlgError, QMatrix, QVector, Rational, RowEchelon, SparseVec};
pub use gcm::{Gcm, GcmError, GcmType};
pub use koszul::{BilinearForm, KoszulError, KoszulReport, TriForm};
pub use leibniz::{LeibnizCochain, LeibnizError};
pub use liealg::{DerivationSpace, JacobiViolation, LieAlgebra, LieError, Subspace};
pub use rootkit::{ChevalleyNilradical, PropertyP, RootError, RootSystem, RootType};
