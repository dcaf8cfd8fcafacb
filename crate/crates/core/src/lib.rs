//! Exact Frobenius-Schur indicators.
//!
//! The crate computes the (twisted) Frobenius-Schur indicator of a module over a
//! finite-dimensional pivotal algebra `(A, S, g)` as the trace of the
//! transposition map `b(v, w) ↦ b(w, g v)` on the space of invariant bilinear
//! forms, and cross-checks it against closed-form character formulas
//! (separability idempotents, symmetric algebras, group-like algebras).
//!
//! All arithmetic is exact over Q, cyclotomic fields `Q(ζ_n)` or the rational
//! function field `Q(q)`.
//!
//! Module layout:
//! - [`scalars`]: exact fields and the scalar literal grammar
//! - [`linalg`]: dense matrices, kernels, determinants
//! - [`pivotal`]: pivotal algebras, modules, invariant forms, the indicator itself
//! - [`formulas`]: closed-form indicator formulas used as independent oracles
//! - [`constructors`]: group algebras, association schemes, coalgebras, built-in catalog
//! - [`qsl2`]: simple `U_q(sl2)` modules over `Q(q)`
//! - [`document`]: the JSON input format

#![allow(clippy::needless_range_loop)]

pub mod constructors;
pub mod document;
pub mod error;
pub mod formulas;
pub mod linalg;
pub mod pivotal;
pub mod qsl2;
pub mod scalars;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use pivotal::{IndicatorReport, ModuleRep, PivotalAlgebra};
pub use scalars::{FieldTag, Rational, Scalar};
