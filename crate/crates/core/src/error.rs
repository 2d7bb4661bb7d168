use thiserror::Error;

use crate::geom::IVec2;
use crate::lattice::Mat2;
use crate::tiling::TilingType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("singular lattice matrix {0}")]
    Singular(Mat2),
    #[error("matrix {0} is not unimodular")]
    NotUnimodular(Mat2),
    #[error("matrix {0} is not in Hermite normal form [[a,0],[b,d]] with a,d > 0 and 0 <= b < d")]
    NotHermite(Mat2),
    #[error("not a sublattice: column {column:?} lies outside the larger lattice")]
    NotSublattice { column: IVec2 },
}

/// A violated invariant while assembling a periodic tiling from face data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{ttype}: {invariant} violated: {detail}")]
pub struct AtlasError {
    pub ttype: TilingType,
    pub invariant: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("{0} is equivelar and has no associated equivelar map")]
    AlreadyEquivelar(TilingType),
    #[error("no associated equivelar type is defined for {0}")]
    NoHatType(TilingType),
    #[error("unknown tiling type {0:?}")]
    UnknownType(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("sheet count must be positive")]
    ZeroSheets,
    #[error("orbit count must be positive")]
    ZeroOrbits,
    #[error("covers have different base maps")]
    MixedBases,
    #[error("census bound exceeded: n = {n} > {max}")]
    CensusBound { n: u64, max: u64 },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatorialMapError {
    #[error("s{index} has {len} entries for {flags} flags")]
    Length {
        index: usize,
        len: usize,
        flags: usize,
    },
    #[error("s{index} is not an involution at flag {flag}")]
    NotInvolution { index: usize, flag: usize },
    #[error("s{index} fixes flag {flag}")]
    FixedPoint { index: usize, flag: usize },
    #[error("s0 s2 is not a fixed-point-free involution at flag {flag}")]
    NotPolyhedral { flag: usize },
    #[error("the flag graph is disconnected ({reached} of {flags} flags reachable)")]
    Disconnected { reached: usize, flags: usize },
    #[error("empty flag set")]
    Empty,
}
