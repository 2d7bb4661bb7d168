//! Finite covers of toroidal maps.
//!
//! A cover of `X = E/K` is `E/L` for a sublattice `L` of `K`. It is described
//! by `S`, the matrix of `L` in the basis given by the columns of `K`, so that
//! `L = K S` and the number of sheets is `|det S|`.

use serde::Serialize;

use crate::error::CoverError;
use crate::lattice::{hnf, hnfs_of_index, Hnf, LatticeMatrix, Mat2};
use crate::torus::ToroidalMap;

/// Default sheet bound for [`minimal_cover_with_orbits`] when the target is
/// not the plane orbit count.
pub const DEFAULT_SEARCH_BOUND: u64 = 64;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CoverDescriptor {
    pub base: ToroidalMap,
    /// Cover lattice in the basis of the base's (HNF) lattice.
    pub s: LatticeMatrix,
}

impl CoverDescriptor {
    pub fn new(base: ToroidalMap, s: LatticeMatrix) -> Self {
        CoverDescriptor { base, s }
    }

    pub fn sheets(&self) -> u64 {
        self.s.index()
    }

    /// The covering map `E / (K S)`.
    pub fn cover(&self) -> ToroidalMap {
        ToroidalMap::new(self.base.ttype(), &self.base.lattice().mul(&self.s))
    }

    pub fn orbit_count(&self) -> usize {
        self.cover().orbit_count()
    }

    /// `S` in Hermite normal form.
    pub fn s_hnf(&self) -> Hnf {
        hnf(&self.s)
    }
}

/// `n`-sheeted cover by `L = <gamma^n, delta>`.
pub fn cyclic_cover(x: &ToroidalMap, n: u64) -> Result<CoverDescriptor, CoverError> {
    if n == 0 {
        return Err(CoverError::ZeroSheets);
    }
    Ok(CoverDescriptor::new(*x, LatticeMatrix::diag(n as i64, 1)?))
}

/// Every `n`-sheeted cover, one per sublattice of index `n`, ordered by the
/// `(d, b, a)` key of `S`.
pub fn enumerate_covers(x: &ToroidalMap, n: u64) -> Result<Vec<CoverDescriptor>, CoverError> {
    if n == 0 {
        return Err(CoverError::ZeroSheets);
    }
    Ok(hnfs_of_index(n)
        .into_iter()
        .map(|h| CoverDescriptor::new(*x, h.lattice()))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoClassification {
    /// Class label per input cover, numbered by first appearance.
    pub labels: Vec<usize>,
    /// Index of the first cover of each class.
    pub representatives: Vec<usize>,
}

impl IsoClassification {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }
}

/// Partitions covers of a common base by isomorphism of the covering maps.
pub fn classify_covers_up_to_iso(
    covers: &[CoverDescriptor],
) -> Result<IsoClassification, CoverError> {
    if let Some(first) = covers.first() {
        if covers.iter().any(|c| c.base != first.base) {
            return Err(CoverError::MixedBases);
        }
    }
    let mut labels = Vec::with_capacity(covers.len());
    let mut representatives: Vec<usize> = Vec::new();
    let maps: Vec<ToroidalMap> = covers.iter().map(|c| c.cover()).collect();
    for (i, m) in maps.iter().enumerate() {
        match representatives
            .iter()
            .position(|&r| maps[r].is_isomorphic(m))
        {
            Some(c) => labels.push(c),
            None => {
                labels.push(representatives.len());
                representatives.push(i);
            }
        }
    }
    Ok(IsoClassification {
        labels,
        representatives,
    })
}

/// The cover by `<gamma^m, delta^m>` with `m = |det K|`, i.e. `S = m I`.
pub fn semiregular_cover_mm(x: &ToroidalMap) -> CoverDescriptor {
    let m = x.sheets() as i64;
    CoverDescriptor::new(*x, LatticeMatrix::new(Mat2::scalar(m)).expect("m >= 1"))
}

/// The cover by the scalar lattice `m Z^2`, `m = |det K|`: `S = m K^-1`,
/// with `m` sheets. Its lattice is invariant under the whole point group.
pub fn scalar_cover(x: &ToroidalMap) -> CoverDescriptor {
    let k = x.hnf().matrix();
    let m = x.sheets() as i64;
    let s = k
        .left_divide(&Mat2::scalar(m))
        .expect("m Z^2 lies in every lattice of index m");
    CoverDescriptor::new(*x, LatticeMatrix::new(s).expect("nonsingular"))
}

/// All covers with exactly `n` sheets whose orbit count is `k`.
pub fn covers_with_orbits(
    x: &ToroidalMap,
    n: u64,
    k: usize,
) -> Result<Vec<CoverDescriptor>, CoverError> {
    Ok(enumerate_covers(x, n)?
        .into_iter()
        .filter(|c| c.orbit_count() == k)
        .collect())
}

/// The cover with the fewest sheets (then least `(d, b, a)` of `S`) that has
/// exactly `k` flag orbits, searching up to `bound` sheets.
///
/// Without an explicit bound the search goes to `m^2` for the plane orbit
/// count (where a cover is guaranteed) and to [`DEFAULT_SEARCH_BOUND`]
/// otherwise. `Ok(None)` means "not found within the bound".
pub fn minimal_cover_with_orbits(
    x: &ToroidalMap,
    k: usize,
    bound: Option<u64>,
) -> Result<Option<CoverDescriptor>, CoverError> {
    if k == 0 {
        return Err(CoverError::ZeroOrbits);
    }
    // -I always descends, and acts freely on flags, so no map of this type
    // has more than half the cell flags as orbits. A cover may well have more
    // orbits than its base, so the base's own count is not a cutoff.
    let cell_flags = crate::tiling::atlas(x.ttype()).tiling.flags().len();
    if k > cell_flags / 2 {
        return Ok(None);
    }
    let plane = crate::tiling::atlas(x.ttype()).plane_orbits;
    let bound = bound.unwrap_or(if k == plane {
        x.sheets() * x.sheets()
    } else {
        DEFAULT_SEARCH_BOUND
    });
    for n in 1..=bound {
        if let Some(c) = enumerate_covers(x, n)?
            .into_iter()
            .find(|c| c.orbit_count() == k)
        {
            return Ok(Some(c));
        }
    }
    Ok(None)
}
