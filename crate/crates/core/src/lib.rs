//! Triangulated orbifolds, their local-group labels and exact rational
//! Euler characteristics.

pub mod action;
pub mod complex;
pub mod corpus;
pub mod orbifold;
pub mod rational;
pub mod strata;
pub mod verify;

pub use complex::{CellId, ComplexError, Simplex, SimplicialComplex, VertexId};
pub use orbifold::{GroupKind, LocalGroupLabel, OrbifoldComplex, OrbifoldError, Violation};
pub use rational::Rational;
