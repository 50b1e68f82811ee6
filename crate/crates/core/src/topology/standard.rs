//! Small standard triangulations.

use super::complex::{numbered_labels, SimplicialComplex};

/// The boundary of the `(n+1)`-simplex, an `n`-sphere on `n + 2` vertices.
pub fn sphere(n: usize) -> SimplicialComplex {
    let k = n + 2;
    let faces = (0..k).map(move |skip| (0..k).filter(|&v| v != skip).collect());
    SimplicialComplex::from_simplices(numbered_labels(k), faces).expect("valid")
}

/// The `m`-gon, a circle on `m ≥ 3` vertices.
pub fn polygon(m: usize) -> SimplicialComplex {
    assert!(m >= 3, "a simplicial circle needs three vertices");
    SimplicialComplex::from_simplices(numbered_labels(m), (0..m).map(|i| vec![i, (i + 1) % m])).expect("valid")
}

/// The suspension of an `l`-gon: a 2-sphere with `l + 2` vertices (poles last).
pub fn suspended_polygon(l: usize) -> SimplicialComplex {
    assert!(l >= 3, "the equator needs three vertices");
    let (north, south) = (l, l + 1);
    let faces = (0..l).flat_map(|i| [vec![i, (i + 1) % l, north], vec![i, (i + 1) % l, south]]);
    SimplicialComplex::from_simplices(numbered_labels(l + 2), faces).expect("valid")
}

/// The 7-vertex torus with triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus() -> SimplicialComplex {
    let faces = (0..7).flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]]);
    SimplicialComplex::from_simplices(numbered_labels(7), faces).expect("valid")
}

/// The 6-vertex real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    let faces: [[usize; 3]; 10] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ];
    SimplicialComplex::from_simplices(numbered_labels(6), faces.iter().map(|f| f.to_vec())).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_characteristics() {
        assert_eq!(sphere(2).euler_characteristic(), 2);
        assert_eq!(polygon(5).euler_characteristic(), 0);
        assert_eq!(suspended_polygon(4).euler_characteristic(), 2);
        assert_eq!(torus().f_vector(), vec![7, 21, 14]);
        assert_eq!(projective_plane().f_vector(), vec![6, 15, 10]);
        assert_eq!(projective_plane().euler_characteristic(), 1);
    }
}
