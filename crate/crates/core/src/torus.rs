//! Toroidal quotients `X = E/K` and their flag orbits.
//!
//! `Aut(X)` is taken to be `Nor(K)/K`. A symmetry class `(P, t)` of the
//! tiling normalizes `K` exactly when `P` maps the lattice of `K` onto itself,
//! and every translation normalizes `K`. Since `T/K` already acts transitively
//! on the `n` lifts of each cell flag, the orbits of the `n * |cell flags|`
//! flags of `X` correspond one-to-one to the orbits of the cell flags under
//! the surviving classes, each lifted orbit being `n` times larger.

use serde::{Deserialize, Serialize};

use crate::error::MapError;
use crate::lattice::{hnf, normalizes, Hnf, LatticeMatrix, Mat2};
use crate::orbits::UnionFind;
use crate::tiling::{atlas, Flag, IsometryClass, TilingType};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ToroidalMap {
    #[serde(rename = "type")]
    ttype: TilingType,
    hnf: Hnf,
}

/// Vertex, edge, face and flag counts of a map.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Counts {
    #[serde(rename = "V")]
    pub vertices: u64,
    #[serde(rename = "E")]
    pub edges: u64,
    #[serde(rename = "F")]
    pub faces: u64,
    pub flags: u64,
}

impl Counts {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub orbit_count: usize,
    /// Least cell flag of each orbit with the orbit's size in `X`.
    pub orbits: Vec<(Flag, u64)>,
    pub surviving_point_classes: Vec<IsometryClass>,
}

impl ToroidalMap {
    pub fn new(ttype: TilingType, k: &LatticeMatrix) -> Self {
        ToroidalMap { ttype, hnf: hnf(k) }
    }

    /// As [`ToroidalMap::new`], from a raw matrix.
    pub fn from_matrix(ttype: TilingType, m: Mat2) -> Result<Self, MapError> {
        Ok(Self::new(ttype, &LatticeMatrix::new(m)?))
    }

    pub fn from_hnf(ttype: TilingType, hnf: Hnf) -> Self {
        ToroidalMap { ttype, hnf }
    }

    /// The one-cell torus `E / Z^2`.
    pub fn unit(ttype: TilingType) -> Self {
        Self::new(ttype, &LatticeMatrix::identity())
    }

    pub fn ttype(&self) -> TilingType {
        self.ttype
    }

    pub fn hnf(&self) -> Hnf {
        self.hnf
    }

    pub fn lattice(&self) -> LatticeMatrix {
        self.hnf.lattice()
    }

    /// Number of cells, `|det K|`.
    pub fn sheets(&self) -> u64 {
        self.hnf.index()
    }

    pub fn counts(&self) -> Counts {
        let t = &atlas(self.ttype).tiling;
        let n = self.sheets();
        Counts {
            vertices: n * t.vertices().len() as u64,
            edges: n * t.edges().len() as u64,
            faces: n * t.faces().len() as u64,
            flags: n * t.flags().len() as u64,
        }
    }

    /// Indices into `atlas(ttype).symmetries` of the classes normalizing `K`.
    pub fn surviving_indices(&self) -> Vec<usize> {
        let k = self.lattice();
        atlas(self.ttype)
            .symmetries
            .iter()
            .enumerate()
            .filter(|(_, g)| normalizes(&g.p, &k))
            .map(|(i, _)| i)
            .collect()
    }

    /// Symmetry classes of the tiling that descend to `X`.
    pub fn surviving_symmetries(&self) -> Vec<IsometryClass> {
        let a = atlas(self.ttype);
        self.surviving_indices()
            .into_iter()
            .map(|i| a.symmetries[i])
            .collect()
    }

    /// Order of the point group of `Aut(X)`: distinct surviving `P`.
    pub fn point_group_order(&self) -> usize {
        let k = self.lattice();
        atlas(self.ttype)
            .point_group
            .iter()
            .filter(|p| normalizes(p, &k))
            .count()
    }

    pub fn orbit_count(&self) -> usize {
        let a = atlas(self.ttype);
        let mut uf = UnionFind::new(a.tiling.flags().len());
        for i in self.surviving_indices() {
            uf.union_permutation(&a.perms[i]);
        }
        uf.count()
    }

    pub fn flag_orbits(&self) -> OrbitReport {
        let a = atlas(self.ttype);
        let flags = a.tiling.flags();
        let surviving = self.surviving_indices();
        let mut uf = UnionFind::new(flags.len());
        for &i in &surviving {
            uf.union_permutation(&a.perms[i]);
        }
        let labels = uf.labels();
        let mut sizes = vec![0u64; flags.len()];
        for &l in &labels {
            sizes[l as usize] += self.sheets();
        }
        let orbits = (0..flags.len())
            .filter(|&i| labels[i] as usize == i)
            .map(|i| (flags[i], sizes[i]))
            .collect();
        OrbitReport {
            orbit_count: uf.count(),
            orbits,
            surviving_point_classes: surviving.into_iter().map(|i| a.symmetries[i]).collect(),
        }
    }

    /// Same type and same lattice.
    pub fn equals(&self, other: &ToroidalMap) -> bool {
        self == other
    }

    /// Whether some point-group matrix `A` of the tiling carries the lattice
    /// of `other` onto that of `self`.
    pub fn is_isomorphic(&self, other: &ToroidalMap) -> bool {
        if self.ttype != other.ttype || self.sheets() != other.sheets() {
            return false;
        }
        let ky = other.hnf.matrix();
        atlas(self.ttype).point_group.iter().any(|a| {
            let m = LatticeMatrix::new(a.mul(&ky)).expect("unimodular image of a lattice");
            hnf(&m) == self.hnf
        })
    }

    /// Canonical representative of the isomorphism class: the least HNF (by
    /// `(d, b, a)`) among the point-group images of `K`.
    pub fn iso_canonical(&self) -> Hnf {
        let k = self.hnf.matrix();
        atlas(self.ttype)
            .point_group
            .iter()
            .map(|a| hnf(&LatticeMatrix::new(a.mul(&k)).expect("unimodular image of a lattice")))
            .min_by_key(|h| h.dba_key())
            .expect("point group contains the identity")
    }

    /// `Ê / K`: the equivelar map of the hat type on the same lattice.
    pub fn associated_equivelar(&self) -> Result<ToroidalMap, MapError> {
        Ok(ToroidalMap {
            ttype: self.ttype.hat_type()?,
            hnf: self.hnf,
        })
    }

    /// The map on `c K`.
    pub fn scaled(&self, c: i64) -> Result<ToroidalMap, MapError> {
        Self::from_matrix(self.ttype, self.hnf.matrix().scale(c))
    }
}

/// All maps of a type with exactly `n` sheets, in `(d, b, a)` order.
pub fn maps_of_index(ttype: TilingType, n: u64) -> Vec<ToroidalMap> {
    crate::lattice::hnfs_of_index(n)
        .into_iter()
        .map(|h| ToroidalMap::from_hnf(ttype, h))
        .collect()
}
