//! Semi-equivelar toroidal maps as lattice quotients of the Archimedean
//! tilings.
//!
//! A map `X = E/K` is a tiling type together with a rank-2 sublattice `K` of
//! its translation lattice. Flag orbits under `Aut(X)` are counted through the
//! lattice normalizer ([`torus`]) and independently by brute force on the
//! finite flag graph ([`oracle`]).

pub mod covers;
pub mod error;
pub mod geom;
pub mod lattice;
pub mod oracle;
mod orbits;
pub mod tiling;
pub mod torus;

pub use covers::CoverDescriptor;
pub use error::{AtlasError, CombinatorialMapError, CoverError, LatticeError, MapError};
pub use lattice::{Hnf, LatticeMatrix, Mat2};
pub use oracle::CombinatorialMap;
pub use tiling::{atlas, build_tiling, Flag, IsometryClass, PeriodicTiling, TilingType};
pub use torus::{OrbitReport, ToroidalMap};
