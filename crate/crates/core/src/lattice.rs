//! Integer 2x2 matrices and rank-2 sublattices of `Z^2`.
//!
//! A lattice is given by a matrix whose *columns* generate it. Two matrices
//! describe the same lattice iff they differ by a unimodular matrix acting on
//! the right, and the Hermite normal form picks one representative per class.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::LatticeError;
use crate::geom::{floor_q, qi, IVec2, Vec2, Q};

/// A 2x2 integer matrix stored row-major: `m[row][col]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mat2(pub [[i64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1, 0], [0, 1]]);

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub const fn diag(a: i64, d: i64) -> Self {
        Mat2([[a, 0], [0, d]])
    }

    pub fn scalar(c: i64) -> Self {
        Mat2::diag(c, c)
    }

    pub fn det(&self) -> i64 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    pub fn col(&self, j: usize) -> IVec2 {
        [self.0[0][j], self.0[1][j]]
    }

    pub fn from_cols(c0: IVec2, c1: IVec2) -> Self {
        Mat2([[c0[0], c1[0]], [c0[1], c1[1]]])
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        Mat2([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn scale(&self, c: i64) -> Mat2 {
        let [[a, b], [d, e]] = self.0;
        Mat2([[c * a, c * b], [c * d, c * e]])
    }

    pub fn apply_int(&self, v: IVec2) -> IVec2 {
        let [[a, b], [c, d]] = self.0;
        [a * v[0] + b * v[1], c * v[0] + d * v[1]]
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        let [[a, b], [c, d]] = self.0;
        Vec2::new(qi(a) * v.x + qi(b) * v.y, qi(c) * v.x + qi(d) * v.y)
    }

    /// The adjugate, so that `self * adj = det * I`.
    pub fn adjugate(&self) -> Mat2 {
        let [[a, b], [c, d]] = self.0;
        Mat2([[d, -b], [-c, a]])
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == 1
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<Mat2, LatticeError> {
        match self.det() {
            1 => Ok(self.adjugate()),
            -1 => Ok(self.adjugate().scale(-1)),
            _ => Err(LatticeError::NotUnimodular(*self)),
        }
    }

    /// `self^-1 * other` when it is an integer matrix.
    pub fn left_divide(&self, other: &Mat2) -> Option<Mat2> {
        let det = self.det();
        if det == 0 {
            return None;
        }
        let prod = self.adjugate().mul(other);
        let mut out = [[0; 2]; 2];
        for (r, row) in prod.0.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if v % det != 0 {
                    return None;
                }
                out[r][c] = v / det;
            }
        }
        Some(Mat2(out))
    }

    pub fn entries(&self) -> [i64; 4] {
        let [[a, b], [c, d]] = self.0;
        [a, b, c, d]
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.0;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// A nonsingular integer matrix whose columns generate a sublattice of `Z^2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Mat2", into = "Mat2")]
pub struct LatticeMatrix(Mat2);

impl LatticeMatrix {
    pub fn new(m: Mat2) -> Result<Self, LatticeError> {
        if m.det() == 0 {
            Err(LatticeError::Singular(m))
        } else {
            Ok(LatticeMatrix(m))
        }
    }

    pub fn identity() -> Self {
        LatticeMatrix(Mat2::IDENTITY)
    }

    pub fn diag(a: i64, d: i64) -> Result<Self, LatticeError> {
        Self::new(Mat2::diag(a, d))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    /// `|det|`, the index of the lattice in `Z^2`.
    pub fn index(&self) -> u64 {
        self.0.det().unsigned_abs()
    }

    pub fn mul(&self, o: &LatticeMatrix) -> LatticeMatrix {
        LatticeMatrix(self.0.mul(&o.0))
    }

    pub fn contains(&self, v: IVec2) -> bool {
        let det = self.0.det();
        let w = self.0.adjugate().apply_int(v);
        w[0] % det == 0 && w[1] % det == 0
    }
}

impl TryFrom<Mat2> for LatticeMatrix {
    type Error = LatticeError;
    fn try_from(m: Mat2) -> Result<Self, Self::Error> {
        LatticeMatrix::new(m)
    }
}

impl From<LatticeMatrix> for Mat2 {
    fn from(l: LatticeMatrix) -> Mat2 {
        l.0
    }
}

/// Lower-triangular Hermite normal form `[[a, 0], [b, d]]` with `a, d > 0`
/// and `0 <= b < d`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Mat2", into = "Mat2")]
pub struct Hnf {
    a: i64,
    b: i64,
    d: i64,
}

impl Hnf {
    /// Builds from the three free entries, checking the normal-form conditions.
    pub fn from_parts(a: i64, b: i64, d: i64) -> Result<Self, LatticeError> {
        if a > 0 && d > 0 && (0..d).contains(&b) {
            Ok(Hnf { a, b, d })
        } else {
            Err(LatticeError::NotHermite(Mat2::new(a, 0, b, d)))
        }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn index(&self) -> u64 {
        (self.a * self.d) as u64
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::new(self.a, 0, self.b, self.d)
    }

    pub fn lattice(&self) -> LatticeMatrix {
        LatticeMatrix(self.matrix())
    }

    /// Ordering key used for deterministic output: `(d, b, a)`.
    pub fn dba_key(&self) -> (i64, i64, i64) {
        (self.d, self.b, self.a)
    }

    /// Index of the coset of `v` among [`coset_reps`], i.e. `x * d + y` for
    /// the reduced representative `(x, y)`.
    pub fn coset_index(&self, v: IVec2) -> usize {
        let [x, y] = self.reduce_int(v);
        (x * self.d + y) as usize
    }

    /// The representative of `v + L` in the box `0 <= x < a, 0 <= y < d`.
    pub fn reduce_int(&self, v: IVec2) -> IVec2 {
        let k = Integer::div_floor(&v[0], &self.a);
        let x = v[0] - k * self.a;
        let y = (v[1] - k * self.b).rem_euclid(self.d);
        [x, y]
    }

    pub fn coset_rep(&self, index: usize) -> IVec2 {
        let i = index as i64;
        [i / self.d, i % self.d]
    }
}

impl TryFrom<Mat2> for Hnf {
    type Error = LatticeError;
    fn try_from(m: Mat2) -> Result<Self, Self::Error> {
        let [[a, z], [b, d]] = m.0;
        if z != 0 {
            return Err(LatticeError::NotHermite(m));
        }
        Hnf::from_parts(a, b, d)
    }
}

impl From<Hnf> for Mat2 {
    fn from(h: Hnf) -> Mat2 {
        h.matrix()
    }
}

impl fmt::Display for Hnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix().fmt(f)
    }
}

/// Hermite normal form of the column lattice of `m`.
pub fn hnf(m: &LatticeMatrix) -> Hnf {
    let [[m00, m01], [m10, m11]] = m.0 .0;
    // Column operations clearing the first row: [m00 m01] U = [g 0].
    let eg = m00.extended_gcd(&m01);
    let (mut g, mut x, mut y) = (eg.gcd, eg.x, eg.y);
    if g < 0 {
        (g, x, y) = (-g, -x, -y);
    }
    let b0 = x * m10 + y * m11;
    let d0 = (m00 * m11 - m01 * m10) / g;
    let d = d0.abs();
    Hnf {
        a: g,
        b: b0.rem_euclid(d),
        d,
    }
}

/// Whether the column lattice of `l` lies inside that of `k`.
pub fn is_sublattice(l: &LatticeMatrix, k: &LatticeMatrix) -> bool {
    k.0.left_divide(&l.0).is_some()
}

/// The index `[K : L]`.
pub fn lattice_index(l: &LatticeMatrix, k: &LatticeMatrix) -> Result<u64, LatticeError> {
    for j in 0..2 {
        let c = l.0.col(j);
        if !k.contains(c) {
            return Err(LatticeError::NotSublattice { column: c });
        }
    }
    Ok(l.index() / k.index())
}

/// Whether the point-group matrix `p` maps the lattice of `k` onto itself.
pub fn normalizes(p: &Mat2, k: &LatticeMatrix) -> bool {
    k.0.left_divide(&p.mul(&k.0)).is_some()
}

/// One representative per coset of `Z^2 / K`, in the box of `hnf(K)`.
pub fn coset_reps(k: &LatticeMatrix) -> Vec<IVec2> {
    let h = hnf(k);
    (0..h.a)
        .flat_map(|x| (0..h.d).map(move |y| [x, y]))
        .collect()
}

/// The representative of `v + K` with `K^-1 v` in `[0,1)^2`.
pub fn reduce_mod(v: &Vec2, k: &LatticeMatrix) -> Vec2 {
    let det = Q::from_integer(k.0.det());
    let w = k.0.adjugate().apply(v);
    let coeffs = [floor_q(&(w.x / det)), floor_q(&(w.y / det))];
    *v - Vec2::from_int(k.0.apply_int(coeffs))
}

/// All lattices of index `n` in Hermite normal form, ordered by `(d, b, a)`.
pub fn hnfs_of_index(n: u64) -> Vec<Hnf> {
    let n = n as i64;
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            for b in 0..d {
                out.push(Hnf { a: n / d, b, d });
            }
        }
    }
    out
}

/// Sum of divisors.
pub fn sigma(n: u64) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
}
