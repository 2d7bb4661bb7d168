//! Cover constructions checked against brute-force automorphism groups.

use torus_atlas::covers::{scalar_cover, semiregular_cover_mm};
use torus_atlas::lattice::Mat2;
use torus_atlas::oracle::{orbit_count_oracle, quotient_flag_graph};
use torus_atlas::tiling::TilingType;
use torus_atlas::torus::ToroidalMap;

fn brute(x: &ToroidalMap) -> usize {
    orbit_count_oracle(&quotient_flag_graph(x))
}

#[test]
fn mm_cover_of_a_rectangular_triangular_map() {
    let x = ToroidalMap::from_matrix(TilingType::Triangular, Mat2::diag(5, 3)).unwrap();
    let c = semiregular_cover_mm(&x);
    assert_eq!(c.sheets(), 225);
    assert_eq!(c.cover().hnf().matrix(), Mat2::diag(75, 45));
    // 75Z x 45Z is no more symmetric than 5Z x 3Z.
    assert_eq!(c.orbit_count(), 6);
    assert_eq!(brute(&c.cover()), 6);
    let s = scalar_cover(&x);
    assert_eq!((s.sheets(), s.orbit_count()), (15, 1));
    assert_eq!(brute(&s.cover()), 1);
}

#[test]
fn mm_cover_of_a_truncated_hexagonal_map() {
    let x =
        ToroidalMap::from_matrix(TilingType::TruncatedHexagonal, Mat2::new(2, 0, 1, 3)).unwrap();
    let c = semiregular_cover_mm(&x);
    assert_eq!(c.sheets(), 36);
    let k = c.orbit_count();
    assert_eq!(k, x.orbit_count());
    assert_eq!(k, brute(&c.cover()));
    assert_eq!(scalar_cover(&x).orbit_count(), 3);
}
