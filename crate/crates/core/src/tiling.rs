//! The eleven Archimedean tilings as exact periodic cell geometry.
//!
//! Each tiling is stored modulo its translation lattice `Z^2` (coordinates in
//! the basis `{A, B}`). The realizations are affine images of the Euclidean
//! tilings: polygons keep their combinatorics and full symmetry but are not
//! necessarily regular, which keeps every coordinate rational.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{AtlasError, MapError};
use crate::geom::{
    angle_cmp, centroid, convex_interiors_disjoint, is_strictly_convex_ccw, q, qi, signed_area2,
    IVec2, Vec2,
};
use crate::lattice::Mat2;
use crate::orbits::UnionFind;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum TilingType {
    /// `[3^6]`
    Triangular,
    /// `[4^4]`
    Square,
    /// `[6^3]`
    Hexagonal,
    /// `[3^3, 4^2]`
    ElongatedTriangular,
    /// `[3^2, 4^1, 3^1, 4^1]`
    SnubSquare,
    /// `[4^1, 8^2]`
    TruncatedSquare,
    /// `[3^1, 6^1, 3^1, 6^1]`
    Trihexagonal,
    /// `[3^1, 12^2]`
    TruncatedHexagonal,
    /// `[3^1, 4^1, 6^1, 4^1]`
    Rhombitrihexagonal,
    /// `[3^4, 6^1]`
    SnubHexagonal,
    /// `[4^1, 6^1, 12^1]`
    TruncatedTrihexagonal,
}

/// Shape of the translation lattice, used for rendering and for the
/// construction of the atlas.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LatticeKind {
    Hexagonal,
    Square,
    CenteredRectangular,
}

impl LatticeKind {
    /// Euclidean images of the basis vectors `A` and `B`.
    pub fn euclidean_basis(&self) -> ((f64, f64), (f64, f64)) {
        let s3 = 3f64.sqrt();
        match self {
            LatticeKind::Hexagonal => ((1.0, 0.0), (0.5, s3 / 2.0)),
            LatticeKind::Square => ((1.0, 0.0), (0.0, 1.0)),
            LatticeKind::CenteredRectangular => ((1.0, 0.0), (0.5, 1.0 + s3 / 2.0)),
        }
    }
}

impl TilingType {
    pub const ALL: [TilingType; 11] = [
        TilingType::Triangular,
        TilingType::Square,
        TilingType::Hexagonal,
        TilingType::ElongatedTriangular,
        TilingType::SnubSquare,
        TilingType::TruncatedSquare,
        TilingType::Trihexagonal,
        TilingType::TruncatedHexagonal,
        TilingType::Rhombitrihexagonal,
        TilingType::SnubHexagonal,
        TilingType::TruncatedTrihexagonal,
    ];

    pub fn ordinal(&self) -> usize {
        *self as usize
    }

    /// Vertex type as `(polygon size, multiplicity)` runs.
    pub fn vertex_type(&self) -> &'static [(u32, u32)] {
        use TilingType::*;
        match self {
            Triangular => &[(3, 6)],
            Square => &[(4, 4)],
            Hexagonal => &[(6, 3)],
            ElongatedTriangular => &[(3, 3), (4, 2)],
            SnubSquare => &[(3, 2), (4, 1), (3, 1), (4, 1)],
            TruncatedSquare => &[(4, 1), (8, 2)],
            Trihexagonal => &[(3, 1), (6, 1), (3, 1), (6, 1)],
            TruncatedHexagonal => &[(3, 1), (12, 2)],
            Rhombitrihexagonal => &[(3, 1), (4, 1), (6, 1), (4, 1)],
            SnubHexagonal => &[(3, 4), (6, 1)],
            TruncatedTrihexagonal => &[(4, 1), (6, 1), (12, 1)],
        }
    }

    /// The face sizes met going once around a vertex.
    pub fn face_cycle(&self) -> Vec<u32> {
        self.vertex_type()
            .iter()
            .flat_map(|&(p, n)| std::iter::repeat_n(p, n as usize))
            .collect()
    }

    /// Dot notation, e.g. `3.4.6.4`.
    pub fn dot_name(&self) -> String {
        self.face_cycle()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Exponent notation, e.g. `[3^1,4^1,6^1,4^1]`.
    pub fn bracket_name(&self) -> String {
        let runs: Vec<String> = self
            .vertex_type()
            .iter()
            .map(|(p, n)| format!("{p}^{n}"))
            .collect();
        format!("[{}]", runs.join(","))
    }

    pub fn is_equivelar(&self) -> bool {
        self.vertex_type().len() == 1
    }

    /// The equivelar tiling on the same translation lattice whose vertices sit
    /// at this tiling's origin, when one is defined.
    pub fn hat_type(&self) -> Result<TilingType, MapError> {
        use TilingType::*;
        match self {
            Triangular | Square | Hexagonal => Err(MapError::AlreadyEquivelar(*self)),
            ElongatedTriangular => Err(MapError::NoHatType(*self)),
            SnubSquare | TruncatedSquare => Ok(Square),
            Trihexagonal
            | TruncatedHexagonal
            | Rhombitrihexagonal
            | SnubHexagonal
            | TruncatedTrihexagonal => Ok(Triangular),
        }
    }

    pub fn lattice_kind(&self) -> LatticeKind {
        use TilingType::*;
        match self {
            Square | SnubSquare | TruncatedSquare => LatticeKind::Square,
            ElongatedTriangular => LatticeKind::CenteredRectangular,
            _ => LatticeKind::Hexagonal,
        }
    }
}

impl fmt::Display for TilingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dot_name())
    }
}

/// Canonical form of a cyclic sequence up to rotation and reversal.
fn dihedral_canonical(seq: &[u32]) -> Vec<u32> {
    let n = seq.len();
    let mut best: Option<Vec<u32>> = None;
    for rev in [false, true] {
        let base: Vec<u32> = if rev {
            seq.iter().rev().copied().collect()
        } else {
            seq.to_vec()
        };
        for r in 0..n {
            let rot: Vec<u32> = base[r..].iter().chain(&base[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

impl FromStr for TilingType {
    type Err = MapError;

    /// Accepts dot notation (`3.4.6.4`) or exponent notation
    /// (`[3^1,4^1,6^1,4^1]`, `3^2.4.3.4`), in any rotation or reflection.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || MapError::UnknownType(s.to_string());
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut cycle = Vec::new();
        for tok in body.split(['.', ',']) {
            let tok = tok.trim();
            let (p, n) = match tok.split_once('^') {
                Some((p, n)) => (p, n),
                None => (tok, "1"),
            };
            let p: u32 = p.trim().parse().map_err(|_| unknown())?;
            let n: u32 = n.trim().parse().map_err(|_| unknown())?;
            if n == 0 || n > 12 {
                return Err(unknown());
            }
            cycle.extend(std::iter::repeat_n(p, n as usize));
        }
        let key = dihedral_canonical(&cycle);
        TilingType::ALL
            .into_iter()
            .find(|t| dihedral_canonical(&t.face_cycle()) == key)
            .ok_or_else(unknown)
    }
}

impl Serialize for TilingType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.dot_name())
    }
}

impl<'de> Deserialize<'de> for TilingType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A flag of the plane tiling, identified by reference points of its
/// mutually incident vertex, edge and face.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Flag {
    pub vertex: Vec2,
    pub edge_midpoint: Vec2,
    pub face_barycenter: Vec2,
}

impl Flag {
    pub fn translate(&self, v: IVec2) -> Flag {
        let s = Vec2::from_int(v);
        Flag {
            vertex: self.vertex + s,
            edge_midpoint: self.edge_midpoint + s,
            face_barycenter: self.face_barycenter + s,
        }
    }

    /// The translate whose vertex lies in `[0,1)^2`, with the shift that was
    /// removed: `self == canonical.translate(shift)`.
    pub fn canonicalize(&self) -> (Flag, IVec2) {
        let s = self.vertex.floor();
        (self.translate([-s[0], -s[1]]), s)
    }

    pub fn canonical(&self) -> Flag {
        self.canonicalize().0
    }
}

/// A plane isometry modulo translations: `x -> P x + t` with `t` in `[0,1)^2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IsometryClass {
    pub p: Mat2,
    pub t: Vec2,
}

impl IsometryClass {
    pub fn new(p: Mat2, t: Vec2) -> Self {
        IsometryClass {
            p,
            t: t.reduce_unit(),
        }
    }

    pub fn identity() -> Self {
        IsometryClass::new(Mat2::IDENTITY, Vec2::zero())
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        self.p.apply(v) + self.t
    }

    pub fn apply_flag(&self, f: &Flag) -> Flag {
        Flag {
            vertex: self.apply(&f.vertex),
            edge_midpoint: self.apply(&f.edge_midpoint),
            face_barycenter: self.apply(&f.face_barycenter),
        }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &IsometryClass) -> IsometryClass {
        IsometryClass::new(self.p.mul(&other.p), self.apply(&other.t))
    }

    pub fn inverse(&self) -> IsometryClass {
        let inv = self
            .p
            .inverse_unimodular()
            .expect("isometry point parts are unimodular");
        IsometryClass::new(inv, -inv.apply(&self.t))
    }

    pub fn is_identity(&self) -> bool {
        self.p == Mat2::IDENTITY && self.t.is_zero_vec()
    }

    pub fn preserves_orientation(&self) -> bool {
        self.p.det() == 1
    }
}

impl Vec2 {
    fn is_zero_vec(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Counter-clockwise, starting at the lexicographically least vertex.
    pub vertices: Vec<Vec2>,
    /// Vertex average; lies in `[0,1)^2` for the stored representative.
    pub barycenter: Vec2,
}

impl Face {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn translate(&self, v: IVec2) -> Face {
        let s = Vec2::from_int(v);
        Face {
            vertices: self.vertices.iter().map(|p| *p + s).collect(),
            barycenter: self.barycenter + s,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// Endpoints, oriented as the first incident face traverses them.
    pub ends: [Vec2; 2],
    /// Lies in `[0,1)^2`.
    pub midpoint: Vec2,
    /// Barycenters of the two incident faces at this placement.
    pub faces: [Vec2; 2],
}

/// One of the Archimedean tilings, stored modulo `Z^2`.
#[derive(Clone, Debug)]
pub struct PeriodicTiling {
    ttype: TilingType,
    faces: Vec<Face>,
    edges: Vec<Edge>,
    vertices: Vec<Vec2>,
    flags: Vec<Flag>,
    face_index: HashMap<Vec2, usize>,
    edge_index: HashMap<Vec2, usize>,
    flag_index: HashMap<Flag, usize>,
}

fn canonical_face(mut poly: Vec<Vec2>) -> Face {
    if signed_area2(&poly).is_negative() {
        poly.reverse();
    }
    let shift = centroid(&poly).floor();
    let s = Vec2::from_int(shift);
    let mut poly: Vec<Vec2> = poly.into_iter().map(|p| p - s).collect();
    let start = (0..poly.len()).min_by_key(|&i| poly[i]).unwrap_or(0);
    poly.rotate_left(start);
    let barycenter = centroid(&poly);
    Face {
        vertices: poly,
        barycenter,
    }
}

impl PeriodicTiling {
    /// Assembles a tiling from one representative of every face class and
    /// validates all periodic-tiling invariants.
    pub fn from_faces(ttype: TilingType, polys: Vec<Vec<Vec2>>) -> Result<Self, AtlasError> {
        let err = |invariant: &'static str, detail: String| AtlasError {
            ttype,
            invariant,
            detail,
        };

        let mut faces: BTreeMap<Vec2, Face> = BTreeMap::new();
        for poly in polys {
            let f = canonical_face(poly);
            if !is_strictly_convex_ccw(&f.vertices) {
                return Err(err("convex faces", format!("{:?}", f.vertices)));
            }
            if let Some(prev) = faces.insert(f.barycenter, f.clone()) {
                if prev != f {
                    return Err(err(
                        "distinct face barycenters",
                        format!("{:?}", f.vertices),
                    ));
                }
            }
        }
        let faces: Vec<Face> = faces.into_values().collect();
        let face_index: HashMap<Vec2, usize> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.barycenter, i))
            .collect();

        // Edges: every directed face side, keyed by its midpoint mod Z^2.
        let mut edge_map: BTreeMap<Vec2, (Vec<[Vec2; 2]>, Vec<Vec2>)> = BTreeMap::new();
        for f in &faces {
            let n = f.size();
            for i in 0..n {
                let (p, r) = (f.vertices[i], f.vertices[(i + 1) % n]);
                let m = p.midpoint(&r);
                let s = Vec2::from_int(m.floor());
                let entry = edge_map.entry(m - s).or_default();
                entry.0.push([p - s, r - s]);
                entry.1.push(f.barycenter - s);
            }
        }
        let mut edges = Vec::with_capacity(edge_map.len());
        for (m, (sides, bs)) in edge_map {
            if sides.len() != 2 || sides[0][0] != sides[1][1] || sides[0][1] != sides[1][0] {
                return Err(err(
                    "each edge shared by two faces with opposite orientation",
                    format!("edge at {m:?}: {sides:?}"),
                ));
            }
            edges.push(Edge {
                ends: sides[0],
                midpoint: m,
                faces: [bs[0], bs[1]],
            });
        }
        let edge_index: HashMap<Vec2, usize> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.midpoint, i))
            .collect();

        let vertices: Vec<Vec2> = faces
            .iter()
            .flat_map(|f| f.vertices.iter().map(|v| v.reduce_unit()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();

        let total_area2 = faces
            .iter()
            .fold(qi(0), |acc, f| acc + signed_area2(&f.vertices));
        if total_area2 != qi(2) {
            return Err(err(
                "faces cover one cell",
                format!("total area {}", total_area2 * q(1, 2)),
            ));
        }
        if vertices.len() + faces.len() != edges.len() {
            return Err(err(
                "Euler characteristic 0",
                format!("V={} E={} F={}", vertices.len(), edges.len(), faces.len()),
            ));
        }

        let mut flags = BTreeSet::new();
        for f in &faces {
            let n = f.size();
            for i in 0..n {
                let v = f.vertices[i];
                for j in [(i + 1) % n, (i + n - 1) % n] {
                    let fl = Flag {
                        vertex: v,
                        edge_midpoint: v.midpoint(&f.vertices[j]),
                        face_barycenter: f.barycenter,
                    };
                    flags.insert(fl.canonical());
                }
            }
        }
        let flags: Vec<Flag> = flags.into_iter().collect();
        if flags.len() != 4 * edges.len() {
            return Err(err(
                "flags = 4E",
                format!("{} flags, {} edges", flags.len(), edges.len()),
            ));
        }
        let flag_index = flags.iter().enumerate().map(|(i, f)| (*f, i)).collect();

        let tiling = PeriodicTiling {
            ttype,
            faces,
            edges,
            vertices,
            flags,
            face_index,
            edge_index,
            flag_index,
        };
        tiling.check_block().map_err(|(inv, d)| err(inv, d))?;
        tiling
            .check_vertex_types()
            .map_err(|(inv, d)| err(inv, d))?;
        Ok(tiling)
    }

    /// Overlap and polyhedrality checks on a 3x3 block of cells.
    fn check_block(&self) -> Result<(), (&'static str, String)> {
        let mut block = Vec::new();
        for dx in -1..=1 {
            for dy in -1..=1 {
                for f in &self.faces {
                    block.push(f.translate([dx, dy]));
                }
            }
        }
        for (i, f) in block.iter().enumerate() {
            for g in &block[i + 1..] {
                if !convex_interiors_disjoint(&f.vertices, &g.vertices) {
                    return Err((
                        "translates tile without overlap",
                        format!("{:?} overlaps {:?}", f.vertices, g.vertices),
                    ));
                }
                let shared: Vec<usize> = (0..f.size())
                    .filter(|&k| g.vertices.contains(&f.vertices[k]))
                    .collect();
                if shared.len() >= 2 {
                    let n = f.size();
                    let adjacent = shared.len() == 2
                        && (shared[1] == shared[0] + 1 || (shared[0] == 0 && shared[1] == n - 1));
                    if !adjacent {
                        return Err((
                            "faces meet in nothing, a vertex, or an edge",
                            format!("{:?} and {:?}", f.vertices, g.vertices),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_vertex_types(&self) -> Result<(), (&'static str, String)> {
        let want = dihedral_canonical(&self.ttype.face_cycle());
        for v in &self.vertices {
            let cycle = self.face_cycle_at(v);
            if dihedral_canonical(&cycle) != want {
                return Err((
                    "vertex face-cycle matches the vertex type",
                    format!("vertex {v:?} has cycle {cycle:?}"),
                ));
            }
        }
        Ok(())
    }

    /// Face sizes around the vertex `v` (a vertex of the tiling).
    pub fn face_cycle_at(&self, v: &Vec2) -> Vec<u32> {
        let Some(start) = self.flags.iter().find(|f| f.vertex == v.reduce_unit()) else {
            return Vec::new();
        };
        let mut cycle = Vec::new();
        let mut f = *start;
        loop {
            f = self.s1(&self.s2(&f)).canonical();
            cycle.push(self.face_at(&f.face_barycenter).size() as u32);
            if f == *start || cycle.len() > 64 {
                break;
            }
        }
        cycle
    }

    pub fn ttype(&self) -> TilingType {
        self.ttype
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    /// Flags with vertex in `[0,1)^2`, sorted.
    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn flag_index(&self, f: &Flag) -> Option<usize> {
        self.flag_index.get(f).copied()
    }

    /// Index of the canonical translate of `f`, with the removed shift.
    pub fn locate(&self, f: &Flag) -> Option<(usize, IVec2)> {
        let (c, s) = f.canonicalize();
        self.flag_index(&c).map(|i| (i, s))
    }

    /// The face (at its actual position) whose barycenter is `b`.
    pub fn face_at(&self, b: &Vec2) -> Face {
        let s = b.floor();
        let idx = self.face_index[&b.reduce_unit()];
        self.faces[idx].translate(s)
    }

    /// Flag with the vertex exchanged: the other end of the same edge.
    pub fn s0(&self, f: &Flag) -> Flag {
        Flag {
            vertex: f.edge_midpoint * qi(2) - f.vertex,
            ..*f
        }
    }

    /// Flag with the edge exchanged: the other side of the face at the vertex.
    pub fn s1(&self, f: &Flag) -> Flag {
        let face = self.face_at(&f.face_barycenter);
        let n = face.size();
        let j = face
            .vertices
            .iter()
            .position(|p| *p == f.vertex)
            .expect("flag vertex lies on its face");
        let other_end = f.edge_midpoint * qi(2) - f.vertex;
        let next = face.vertices[(j + 1) % n];
        let prev = face.vertices[(j + n - 1) % n];
        let u = if next == other_end { prev } else { next };
        Flag {
            edge_midpoint: f.vertex.midpoint(&u),
            ..*f
        }
    }

    /// Flag with the face exchanged: the other face on the same edge.
    pub fn s2(&self, f: &Flag) -> Flag {
        let s = f.edge_midpoint.floor();
        let shift = Vec2::from_int(s);
        let e = &self.edges[self.edge_index[&f.edge_midpoint.reduce_unit()]];
        let b = if e.faces[0] + shift == f.face_barycenter {
            e.faces[1]
        } else {
            e.faces[0]
        };
        Flag {
            face_barycenter: b + shift,
            ..*f
        }
    }

    pub fn reflect(&self, f: &Flag, i: usize) -> Flag {
        match i {
            0 => self.s0(f),
            1 => self.s1(f),
            _ => self.s2(f),
        }
    }

    /// Whether `g` maps the flag set onto itself modulo translations.
    pub fn is_symmetry(&self, g: &IsometryClass) -> bool {
        self.flags
            .iter()
            .all(|f| self.flag_index.contains_key(&g.apply_flag(f).canonical()))
    }

    /// Permutation of the cell flags induced by `g`.
    pub fn flag_permutation(&self, g: &IsometryClass) -> Option<Vec<u32>> {
        self.flags
            .iter()
            .map(|f| {
                self.flag_index(&g.apply_flag(f).canonical())
                    .map(|i| i as u32)
            })
            .collect()
    }
}

enum Construction {
    /// Faces are the orbit polygons of the generating point `g` around the
    /// corners of the fundamental triangle of the full reflection group.
    Wythoff { g: Vec2 },
    /// Explicit seed faces closed under the listed symmetries.
    Seeds {
        faces: Vec<Vec<Vec2>>,
        symmetries: Vec<IsometryClass>,
    },
}

fn hex_rotation() -> Mat2 {
    Mat2::new(0, -1, 1, 1)
}

fn hex_reflection() -> Mat2 {
    Mat2::new(-1, -1, 0, 1)
}

fn square_rotation() -> Mat2 {
    Mat2::new(0, -1, 1, 0)
}

fn square_reflection() -> Mat2 {
    Mat2::new(-1, 0, 0, 1)
}

/// Closure of a set of matrices under multiplication.
pub(crate) fn matrix_group(generators: &[Mat2]) -> Vec<Mat2> {
    let mut group: BTreeSet<Mat2> = BTreeSet::from([Mat2::IDENTITY]);
    let mut queue: VecDeque<Mat2> = VecDeque::from([Mat2::IDENTITY]);
    while let Some(m) = queue.pop_front() {
        for g in generators {
            let p = g.mul(&m);
            if group.insert(p) {
                queue.push_back(p);
            }
        }
    }
    group.into_iter().collect()
}

/// Orbit of `g` around `center` under the stabilizer of `center` in the
/// symmorphic group generated by `point_group` and `Z^2`, sorted by angle.
fn orbit_polygon(center: Vec2, g: Vec2, point_group: &[Mat2]) -> Vec<Vec2> {
    let mut pts: BTreeSet<Vec2> = BTreeSet::new();
    for p in point_group {
        if (p.apply(&center) - center).is_integral() {
            pts.insert(p.apply(&(g - center)) + center);
        }
    }
    let mut pts: Vec<Vec2> = pts.into_iter().collect();
    pts.sort_by(|a, b| angle_cmp(&(*a - center), &(*b - center)));
    pts
}

fn close_faces(seeds: Vec<Vec<Vec2>>, symmetries: &[IsometryClass]) -> Vec<Vec<Vec2>> {
    let mut seen: BTreeMap<Vec2, Vec<Vec2>> = BTreeMap::new();
    let mut queue: VecDeque<Vec<Vec2>> = VecDeque::new();
    for s in seeds {
        let f = canonical_face(s);
        if seen.insert(f.barycenter, f.vertices.clone()).is_none() {
            queue.push_back(f.vertices);
        }
    }
    while let Some(face) = queue.pop_front() {
        for g in symmetries {
            let img = canonical_face(face.iter().map(|v| g.apply(v)).collect());
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(img.barycenter) {
                e.insert(img.vertices.clone());
                queue.push_back(img.vertices);
            }
        }
    }
    seen.into_values().collect()
}

fn construction(t: TilingType) -> Construction {
    use TilingType::*;
    let v = Vec2::frac;
    match t {
        Triangular => Construction::Wythoff { g: Vec2::zero() },
        Square => Construction::Wythoff { g: Vec2::zero() },
        Hexagonal => Construction::Wythoff { g: v(1, 3, 1, 3) },
        Trihexagonal => Construction::Wythoff { g: v(1, 2, 0, 1) },
        TruncatedHexagonal => Construction::Wythoff { g: v(5, 12, 1, 6) },
        Rhombitrihexagonal => Construction::Wythoff { g: v(1, 6, 1, 6) },
        TruncatedTrihexagonal => Construction::Wythoff { g: v(5, 18, 1, 9) },
        TruncatedSquare => Construction::Wythoff { g: v(1, 2, 1, 4) },
        SnubSquare => {
            // Squares centred on the 4-fold points, one vertex on the mirror
            // x + y = 1/2; the rhombic gap around (1/2, 0) splits along the
            // short diagonal.
            let c4 = matrix_group(&[square_rotation()]);
            let square = orbit_polygon(Vec2::zero(), v(3, 8, 1, 8), &c4);
            let t1 = vec![v(3, 8, 1, 8), v(1, 8, -3, 8), v(5, 8, -1, 8)];
            let t2 = vec![v(3, 8, 1, 8), v(5, 8, -1, 8), v(7, 8, 3, 8)];
            Construction::Seeds {
                faces: vec![square, t1, t2],
                symmetries: vec![
                    IsometryClass::new(square_rotation(), Vec2::zero()),
                    IsometryClass::new(Mat2::new(0, -1, -1, 0), v(1, 2, 1, 2)),
                ],
            }
        }
        SnubHexagonal => {
            // Vertices are the points of the index-7 superlattice generated by
            // the edge vectors that are not hexagon centres.
            let c6 = matrix_group(&[hex_rotation()]);
            let hexagon = orbit_polygon(Vec2::zero(), v(3, 7, -1, 7), &c6);
            let side = vec![v(3, 7, -1, 7), v(4, 7, 1, 7), v(1, 7, 2, 7)];
            let central = vec![v(1, 7, 2, 7), v(4, 7, 1, 7), v(2, 7, 4, 7)];
            Construction::Seeds {
                faces: vec![hexagon, side, central],
                symmetries: vec![IsometryClass::new(hex_rotation(), Vec2::zero())],
            }
        }
        ElongatedTriangular => {
            // Origin at the centre of the square.
            let square = vec![
                v(-3, 8, -1, 4),
                v(5, 8, -1, 4),
                v(3, 8, 1, 4),
                v(-5, 8, 1, 4),
            ];
            let up = vec![v(-5, 8, 1, 4), v(3, 8, 1, 4), v(-3, 8, 3, 4)];
            let down = vec![v(-3, 8, 3, 4), v(3, 8, 1, 4), v(5, 8, 3, 4)];
            Construction::Seeds {
                faces: vec![square, up, down],
                symmetries: Vec::new(),
            }
        }
    }
}

fn wythoff_faces(kind: LatticeKind, g: Vec2) -> Vec<Vec<Vec2>> {
    let (group, centers) = match kind {
        LatticeKind::Hexagonal => (
            matrix_group(&[hex_rotation(), hex_reflection()]),
            [Vec2::zero(), Vec2::frac(1, 3, 1, 3), Vec2::frac(1, 2, 0, 1)],
        ),
        _ => (
            matrix_group(&[square_rotation(), square_reflection()]),
            [Vec2::zero(), Vec2::frac(1, 2, 1, 2), Vec2::frac(1, 2, 0, 1)],
        ),
    };
    let seeds: Vec<Vec<Vec2>> = centers
        .iter()
        .map(|c| orbit_polygon(*c, g, &group))
        .filter(|p| p.len() >= 3)
        .collect();
    let symmetries: Vec<IsometryClass> = group
        .iter()
        .map(|p| IsometryClass::new(*p, Vec2::zero()))
        .collect();
    close_faces(seeds, &symmetries)
}

/// Builds and validates the cell geometry of a tiling type.
///
/// # Panics
/// If the embedded atlas data violates a tiling invariant; the message names
/// the invariant.
pub fn build_tiling(t: TilingType) -> PeriodicTiling {
    let faces = match construction(t) {
        Construction::Wythoff { g } => wythoff_faces(t.lattice_kind(), g),
        Construction::Seeds { faces, symmetries } => close_faces(faces, &symmetries),
    };
    PeriodicTiling::from_faces(t, faces)
        .unwrap_or_else(|e| panic!("atlas data is inconsistent: {e}"))
}

/// The flag set of the tiling modulo translations.
pub fn cell_flags(tiling: &PeriodicTiling) -> &[Flag] {
    tiling.flags()
}

/// All symmetries of the tiling modulo translations, identity first.
///
/// Exhaustive search: for every integer `P` with entries in `[-2, 2]` and
/// determinant `+-1`, the offset `t` is forced by the image of one flag, and
/// the candidate is kept if it permutes the whole flag set.
pub fn discover_symmetries(tiling: &PeriodicTiling) -> Vec<IsometryClass> {
    let flags = tiling.flags();
    let f0 = flags[0];
    let mut found: BTreeSet<IsometryClass> = BTreeSet::new();
    let range = -2..=2i64;
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    let p = Mat2::new(a, b, c, d);
                    if p.det().abs() != 1 {
                        continue;
                    }
                    let img = IsometryClass { p, t: Vec2::zero() }.apply_flag(&f0);
                    for f in flags {
                        let t = f.vertex - img.vertex;
                        if img.edge_midpoint + t != f.edge_midpoint
                            || img.face_barycenter + t != f.face_barycenter
                        {
                            continue;
                        }
                        let g = IsometryClass::new(p, t);
                        // Cheap filter on the vertex set before testing flags.
                        let maps_vertices = tiling.vertices().iter().all(|v| {
                            tiling
                                .vertices()
                                .binary_search(&g.apply(v).reduce_unit())
                                .is_ok()
                        });
                        if maps_vertices && tiling.is_symmetry(&g) {
                            found.insert(g);
                        }
                    }
                }
            }
        }
    }
    let id = IsometryClass::identity();
    found.remove(&id);
    std::iter::once(id).chain(found).collect()
}

/// Number of flag orbits of the plane tiling under its full symmetry group.
pub fn plane_flag_orbits(tiling: &PeriodicTiling) -> usize {
    let syms = discover_symmetries(tiling);
    let mut uf = UnionFind::new(tiling.flags().len());
    for g in &syms {
        if let Some(perm) = tiling.flag_permutation(g) {
            uf.union_permutation(&perm);
        }
    }
    uf.count()
}

/// A tiling together with its symmetry data, computed once per type.
#[derive(Debug)]
pub struct Atlas {
    pub tiling: PeriodicTiling,
    /// Symmetry classes modulo translations, identity first.
    pub symmetries: Vec<IsometryClass>,
    /// `perms[i][f]` is the image of cell flag `f` under `symmetries[i]`.
    pub perms: Vec<Vec<u32>>,
    /// Distinct point parts of the symmetries, sorted.
    pub point_group: Vec<Mat2>,
    pub plane_orbits: usize,
}

impl Atlas {
    fn compute(t: TilingType) -> Atlas {
        let tiling = build_tiling(t);
        let symmetries = discover_symmetries(&tiling);
        let perms: Vec<Vec<u32>> = symmetries
            .iter()
            .map(|g| {
                tiling
                    .flag_permutation(g)
                    .expect("discovered symmetries permute flags")
            })
            .collect();
        let point_group: Vec<Mat2> = symmetries
            .iter()
            .map(|g| g.p)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut uf = UnionFind::new(tiling.flags().len());
        for p in &perms {
            uf.union_permutation(p);
        }
        let plane_orbits = uf.count();
        Atlas {
            tiling,
            symmetries,
            perms,
            point_group,
            plane_orbits,
        }
    }
}

static ATLAS: [OnceLock<Atlas>; 11] = [const { OnceLock::new() }; 11];

/// Cached tiling and symmetry data for `t`.
pub fn atlas(t: TilingType) -> &'static Atlas {
    ATLAS[t.ordinal()].get_or_init(|| Atlas::compute(t))
}
