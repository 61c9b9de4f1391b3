//! Nested complexes, nested fans, and deformation (type) cones of graph
//! associahedra and nestohedra, in exact rational arithmetic.
//!
//! The crate computes tubes and tubings of graphs, building sets and nested
//! sets, the wall-crossing inequalities of nested fans, irredundant facet
//! descriptions of their type cones, polytopal realizations from interior
//! heights, and kinematic realizations for simplicial type cones. A
//! brute-force oracle (exact nullspaces plus an exact LP redundancy test)
//! cross-validates the closed-form facet descriptions.

pub mod building;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod nested;
pub mod oracle;
pub mod realize;
pub mod typecone;
pub mod verify;
#[cfg(test)]
pub(crate) mod testutil;
pub mod vset;

pub use building::{BuildingSet, InduceMode};
pub use error::Error;
pub use graph::Graph;
pub use linalg::Rat;
pub use nested::{ExchangeFrame, NestedSet};
pub use realize::{KinematicInput, Polytope};
pub use typecone::{ConeDescription, HeightVariant, HeightVector, Inequality, Membership};
pub use vset::{Block, Tube, VertexSet};
