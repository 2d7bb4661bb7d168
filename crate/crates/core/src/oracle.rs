//! Brute-force cross-checks that use no lattice-normalizer theory.
//!
//! A toroidal map is materialized as a finite set of flags with the three
//! involutions `s0, s1, s2`; its automorphisms are the permutations commuting
//! with all three, found by propagating from the image of one flag.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{CombinatorialMapError, CoverError};
use crate::lattice::{hnf, LatticeMatrix, Mat2};
use crate::orbits::UnionFind;
use crate::tiling::atlas;
use crate::torus::ToroidalMap;

/// Largest `n` accepted by [`brute_force_cover_census`].
pub const CENSUS_MAX: u64 = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialMap {
    s: [Vec<u32>; 3],
}

impl CombinatorialMap {
    /// Validates: fixed-point-free involutions, `s0 s2` a fixed-point-free
    /// involution, connected flag graph.
    pub fn new(s0: Vec<u32>, s1: Vec<u32>, s2: Vec<u32>) -> Result<Self, CombinatorialMapError> {
        let n = s0.len();
        if n == 0 {
            return Err(CombinatorialMapError::Empty);
        }
        let s = [s0, s1, s2];
        for (index, p) in s.iter().enumerate() {
            if p.len() != n {
                return Err(CombinatorialMapError::Length {
                    index,
                    len: p.len(),
                    flags: n,
                });
            }
            for (flag, &j) in p.iter().enumerate() {
                if j as usize >= n || p[j as usize] as usize != flag {
                    return Err(CombinatorialMapError::NotInvolution { index, flag });
                }
                if j as usize == flag {
                    return Err(CombinatorialMapError::FixedPoint { index, flag });
                }
            }
        }
        for flag in 0..n {
            let a = s[0][s[2][flag] as usize];
            let b = s[2][s[0][flag] as usize];
            if a != b || a as usize == flag {
                return Err(CombinatorialMapError::NotPolyhedral { flag });
            }
        }
        let cm = CombinatorialMap { s };
        let reached = cm.reachable_from(0);
        if reached != n {
            return Err(CombinatorialMapError::Disconnected { reached, flags: n });
        }
        Ok(cm)
    }

    fn reachable_from(&self, start: u32) -> usize {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([start]);
        seen[start as usize] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for p in &self.s {
                let y = p[x as usize];
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count
    }

    pub fn len(&self) -> usize {
        self.s[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.s[0].is_empty()
    }

    pub fn s(&self, i: usize) -> &[u32] {
        &self.s[i]
    }

    /// Number of orbits of the subgroup generated by `s_i, s_j`.
    fn orbits_of(&self, i: usize, j: usize) -> usize {
        let mut uf = UnionFind::new(self.len());
        uf.union_permutation(&self.s[i]);
        uf.union_permutation(&self.s[j]);
        uf.count()
    }

    pub fn vertex_count(&self) -> usize {
        self.orbits_of(1, 2)
    }

    pub fn edge_count(&self) -> usize {
        self.orbits_of(0, 2)
    }

    pub fn face_count(&self) -> usize {
        self.orbits_of(0, 1)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// The automorphism sending flag 0 to `image`, if one exists.
    fn extend_from(&self, image: u32) -> Option<Vec<u32>> {
        const UNSET: u32 = u32::MAX;
        let n = self.len();
        let mut phi = vec![UNSET; n];
        let mut used = vec![false; n];
        phi[0] = image;
        used[image as usize] = true;
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            let fx = phi[x as usize];
            for p in &self.s {
                let y = p[x as usize];
                let fy = p[fx as usize];
                match phi[y as usize] {
                    UNSET => {
                        if used[fy as usize] {
                            return None;
                        }
                        phi[y as usize] = fy;
                        used[fy as usize] = true;
                        queue.push_back(y);
                    }
                    v if v != fy => return None,
                    _ => {}
                }
            }
        }
        Some(phi)
    }
}

/// The flag graph of `E/K`: cell flags times coset representatives of `K`.
///
/// Flag `(i, z)` is cell flag `i` translated by the coset representative with
/// index `z`; its id is `i * n + z`.
pub fn quotient_flag_graph(x: &ToroidalMap) -> CombinatorialMap {
    let tiling = &atlas(x.ttype()).tiling;
    let h = x.hnf();
    let n = x.sheets() as usize;
    let cell = tiling.flags();
    let mut s: [Vec<u32>; 3] = Default::default();
    for (j, perm) in s.iter_mut().enumerate() {
        *perm = vec![0; cell.len() * n];
        for (i, f) in cell.iter().enumerate() {
            let (target, shift) = tiling
                .locate(&tiling.reflect(f, j))
                .expect("flag reflections stay in the flag set");
            for z in 0..n {
                let rep = h.coset_rep(z);
                let w = h.coset_index([rep[0] + shift[0], rep[1] + shift[1]]);
                perm[i * n + z] = (target * n + w) as u32;
            }
        }
    }
    let [s0, s1, s2] = s;
    CombinatorialMap::new(s0, s1, s2)
        .unwrap_or_else(|e| panic!("quotient of {} by {} is not a map: {e}", x.ttype(), x.hnf()))
}

/// Every automorphism of the map, as flag permutations.
pub fn automorphism_group(cm: &CombinatorialMap) -> Vec<Vec<u32>> {
    (0..cm.len() as u32)
        .filter_map(|c| cm.extend_from(c))
        .collect()
}

/// Number of flag orbits under the full automorphism group.
pub fn orbit_count_oracle(cm: &CombinatorialMap) -> usize {
    let mut uf = UnionFind::new(cm.len());
    for phi in automorphism_group(cm) {
        uf.union_permutation(&phi);
    }
    uf.count()
}

/// Number of distinct sublattices among all integer `S` with entries in
/// `[-n, n]` and `|det S| = n`.
pub fn brute_force_cover_census(n: u64) -> Result<u64, CoverError> {
    if n == 0 {
        return Err(CoverError::ZeroSheets);
    }
    if n > CENSUS_MAX {
        return Err(CoverError::CensusBound { n, max: CENSUS_MAX });
    }
    let r = n as i64;
    let mut seen = BTreeSet::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                for d in -r..=r {
                    let m = Mat2::new(a, b, c, d);
                    if m.det().unsigned_abs() == n {
                        let h = hnf(&LatticeMatrix::new(m)?);
                        seen.insert(h.dba_key());
                    }
                }
            }
        }
    }
    Ok(seen.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::TilingType;

    fn map(t: TilingType, m: [i64; 4]) -> ToroidalMap {
        ToroidalMap::from_matrix(t, Mat2::new(m[0], m[1], m[2], m[3])).unwrap()
    }

    #[test]
    fn small_quotients() {
        let cm = quotient_flag_graph(&ToroidalMap::unit(TilingType::Square));
        assert_eq!(cm.len(), 8);
        assert_eq!(
            (cm.vertex_count(), cm.edge_count(), cm.face_count()),
            (1, 2, 1)
        );
        let cm = quotient_flag_graph(&map(TilingType::Triangular, [2, 0, 0, 2]));
        assert_eq!(cm.len(), 48);
        assert_eq!(cm.euler_characteristic(), 0);
    }

    #[test]
    fn face_rotations_have_twice_the_face_size() {
        let x = map(TilingType::TruncatedTrihexagonal, [1, 0, 1, 2]);
        let cm = quotient_flag_graph(&x);
        let tiling = &atlas(x.ttype()).tiling;
        let n = x.sheets() as usize;
        for (i, f) in tiling.flags().iter().enumerate() {
            let size = tiling.face_at(&f.face_barycenter).size();
            let start = (i * n) as u32;
            let (mut cur, mut steps) = (start, 0);
            loop {
                cur = cm.s(1)[cm.s(0)[cur as usize] as usize];
                steps += 2;
                if cur == start {
                    break;
                }
            }
            assert_eq!(steps, 2 * size);
        }
    }

    #[test]
    fn automorphism_counts() {
        let cm = quotient_flag_graph(&ToroidalMap::unit(TilingType::Triangular));
        assert_eq!(automorphism_group(&cm).len(), 12);
        assert_eq!(orbit_count_oracle(&cm), 1);
        let cm = quotient_flag_graph(&map(TilingType::Triangular, [5, 0, 0, 3]));
        assert_eq!(automorphism_group(&cm).len(), 30);
        assert_eq!(orbit_count_oracle(&cm), 6);
        let cm = quotient_flag_graph(&ToroidalMap::unit(TilingType::TruncatedSquare));
        assert_eq!(orbit_count_oracle(&cm), 3);
    }

    #[test]
    fn invalid_maps_are_rejected() {
        assert_eq!(
            CombinatorialMap::new(vec![], vec![], vec![]),
            Err(CombinatorialMapError::Empty)
        );
        assert!(matches!(
            CombinatorialMap::new(vec![0], vec![0], vec![0]),
            Err(CombinatorialMapError::FixedPoint { .. })
        ));
        assert!(matches!(
            CombinatorialMap::new(vec![1, 2, 0], vec![1, 0, 2], vec![1, 0, 2]),
            Err(CombinatorialMapError::NotInvolution { index: 0, .. })
        ));
        // s0 = s2, so s0 s2 fixes every flag.
        let p = vec![1, 0, 3, 2];
        assert!(matches!(
            CombinatorialMap::new(p.clone(), vec![2, 3, 0, 1], p),
            Err(CombinatorialMapError::NotPolyhedral { .. })
        ));
    }

    #[test]
    fn census_small_values() {
        assert_eq!(brute_force_cover_census(1).unwrap(), 1);
        assert_eq!(brute_force_cover_census(2).unwrap(), 3);
        assert_eq!(brute_force_cover_census(12).unwrap(), 28);
        assert!(brute_force_cover_census(25).is_err());
    }
}
