//! Simplicial complexes, their Barycentric and connection graphs, discrete
//! homotopy, exact invariants and Shannon capacity certificates.
//!
//! Exact computations are generic over [`Scalar`]; the aliases below fix the
//! scalar to [`Rational`] (exact) or `f64`.

pub mod canon;
pub mod capacity;
pub mod catalog;
pub mod complex;
pub mod error;
pub mod functor;
pub mod graph;
pub mod homotopy;
pub mod invariants;
pub mod io;
pub mod reconstruct;
pub mod scalar;

pub use complex::{Complex, FVector, Simplex};
pub use error::{Error, Result};
pub use functor::{phi, phi_product, psi, psi_product, ComplexGraph, Labeling};
pub use graph::Graph;
pub use scalar::Scalar;

/// Vertex label of complexes and graphs.
pub type Label = u32;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;

pub type CurvatureTable = invariants::Curvature<Rational>;
pub type CurvatureTableF64 = invariants::Curvature<f64>;

pub type UmbrellaRep = capacity::Umbrella<Rational>;
pub type UmbrellaRepF64 = capacity::Umbrella<f64>;
