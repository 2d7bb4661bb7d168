//! Exact rational plane geometry in lattice coordinates.
//!
//! Every point is written in the basis `{A, B}` of the tiling's fundamental
//! translations, so translations are integer vectors and every symmetry is an
//! integer matrix plus a rational offset.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Q = Ratio<i64>;

pub fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

pub fn qi(n: i64) -> Q {
    Ratio::from_integer(n)
}

/// Serializes a rational as a `"p/q"` string (denominator always present).
pub fn q_to_string(v: &Q) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// An integer lattice vector.
pub type IVec2 = [i64; 2];

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec2 {
    pub x: Q,
    pub y: Q,
}

impl Vec2 {
    pub const fn new(x: Q, y: Q) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2::new(Q::zero(), Q::zero())
    }

    pub fn frac(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Vec2::new(q(xn, xd), q(yn, yd))
    }

    pub fn from_int(v: IVec2) -> Self {
        Vec2::new(qi(v[0]), qi(v[1]))
    }

    /// Componentwise floor.
    pub fn floor(&self) -> IVec2 {
        [floor_q(&self.x), floor_q(&self.y)]
    }

    /// Translate into the half-open unit square `[0,1)^2`.
    pub fn reduce_unit(&self) -> Self {
        *self - Vec2::from_int(self.floor())
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// Integer part, if the point is a lattice vector.
    pub fn to_int(&self) -> Option<IVec2> {
        self.is_integral()
            .then(|| [self.x.to_integer(), self.y.to_integer()])
    }

    pub fn cross(&self, other: &Vec2) -> Q {
        self.x * other.y - self.y * other.x
    }

    pub fn midpoint(&self, other: &Vec2) -> Vec2 {
        (*self + *other) * q(1, 2)
    }

    /// Euclidean image under the basis `a`, `b` (used only for rendering).
    pub fn to_f64(&self, a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
        let x = to_f64(&self.x);
        let y = to_f64(&self.y);
        (x * a.0 + y * b.0, x * a.1 + y * b.1)
    }
}

pub fn floor_q(v: &Q) -> i64 {
    Integer::div_floor(v.numer(), v.denom())
}

pub fn to_f64(v: &Q) -> f64 {
    *v.numer() as f64 / *v.denom() as f64
}

impl fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Vec2 {
    fn add_assign(&mut self, o: Vec2) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<Q> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: Q) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

/// Half-plane index used to sort directions by angle: 0 for angles in
/// `[0, pi)`, 1 for `[pi, 2pi)`.
fn half(v: &Vec2) -> u8 {
    if v.y > Q::zero() || (v.y.is_zero() && v.x > Q::zero()) {
        0
    } else {
        1
    }
}

/// Exact counter-clockwise angular order of nonzero direction vectors,
/// starting from the positive x-axis.
pub fn angle_cmp(a: &Vec2, b: &Vec2) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross(b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Twice the signed area of a closed polygon.
pub fn signed_area2(poly: &[Vec2]) -> Q {
    let n = poly.len();
    (0..n).fold(Q::zero(), |acc, i| acc + poly[i].cross(&poly[(i + 1) % n]))
}

pub fn centroid(poly: &[Vec2]) -> Vec2 {
    let mut s = Vec2::zero();
    for p in poly {
        s += *p;
    }
    s * q(1, poly.len() as i64)
}

/// True if the polygon is strictly convex and counter-clockwise.
pub fn is_strictly_convex_ccw(poly: &[Vec2]) -> bool {
    let n = poly.len();
    n >= 3
        && (0..n).all(|i| {
            let a = poly[i];
            let b = poly[(i + 1) % n];
            let c = poly[(i + 2) % n];
            (b - a).cross(&(c - b)).is_positive()
        })
}

/// Whether the interiors of two convex counter-clockwise polygons are disjoint.
///
/// Separating-axis test over the edges of both polygons: the interiors are
/// disjoint iff some edge has the whole other polygon on its closed right side.
pub fn convex_interiors_disjoint(p: &[Vec2], r: &[Vec2]) -> bool {
    fn separated_by_edges_of(p: &[Vec2], r: &[Vec2]) -> bool {
        let n = p.len();
        (0..n).any(|i| {
            let a = p[i];
            let e = p[(i + 1) % n] - a;
            r.iter().all(|v| !e.cross(&(*v - a)).is_positive())
        })
    }
    separated_by_edges_of(p, r) || separated_by_edges_of(r, p)
}
