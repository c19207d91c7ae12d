//! Ready-made example complexes and functions.
//!
//! These are small, fully deterministic inputs — embedded curves and
//! surfaces with hand-checkable values — used throughout the test suite
//! and handy for experimenting with the library. Coordinates that must
//! agree exactly across simplices are built from shared constants, so
//! that equality of function values is bit-exact where the geometry says
//! they are equal.

use crate::complex::{SimplexId, SimplicialComplex};
use crate::filtration::{max_extension, AdmissibleFunction};
use crate::vector_field::DiscreteVectorField;

/// The filled unit square split along its diagonal into the triangles
/// ABD and ACD, with vertices A=0, B=1, C=2, D=3.
///
/// Simplices are inserted in a fixed order, so the insertion-order
/// indexing map ranks them C, A, B, D, AC, AB, BD, CD, AD, ACD, ABD.
pub struct SquareFixture {
    pub complex: SimplicialComplex,
    pub coords: Vec<[f64; 3]>,
    pub f: AdmissibleFunction,
    pub va: SimplexId,
    pub vb: SimplexId,
    pub vc: SimplexId,
    pub vd: SimplexId,
    pub ab: SimplexId,
    pub ac: SimplexId,
    pub ad: SimplexId,
    pub bd: SimplexId,
    pub cd: SimplexId,
    pub acd: SimplexId,
    pub abd: SimplexId,
}

fn square_complex() -> (SimplicialComplex, [SimplexId; 11]) {
    let mut k = SimplicialComplex::new();
    let order: [&[usize]; 11] = [
        &[2],
        &[0],
        &[1],
        &[3],
        &[0, 2],
        &[0, 1],
        &[1, 3],
        &[2, 3],
        &[0, 3],
        &[0, 2, 3],
        &[0, 1, 3],
    ];
    let mut ids = [SimplexId(0); 11];
    for (slot, vs) in ids.iter_mut().zip(order) {
        *slot = k.insert_simplex(vs).expect("fixture simplices are valid");
    }
    (k, ids)
}

fn square_coords() -> Vec<[f64; 3]> {
    vec![
        [0.0, 0.0, 0.0],
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [1.0, 1.0, 0.0],
    ]
}

/// The square with the two-component max-extension of the vertex values
/// A=(1,2), B=(0,0), C=(0,0), D=(2,1).
///
/// Its level sets, generated Morse function, pairing and offsets are all
/// known by hand; many tests assert against them.
pub fn square_bifiltration() -> SquareFixture {
    let (complex, [vc, va, vb, vd, ac, ab, bd, cd, ad, acd, abd]) = square_complex();
    let f = max_extension(&complex, 2, &[1.0, 2.0, 0.0, 0.0, 0.0, 0.0, 2.0, 1.0])
        .expect("fixture values are admissible");
    SquareFixture {
        complex,
        coords: square_coords(),
        f,
        va,
        vb,
        vc,
        vd,
        ab,
        ac,
        ad,
        bd,
        cd,
        acd,
        abd,
    }
}

/// The square fixture carrying a general admissible function (not a
/// max-extension, and not Morse) together with a hand-drawn compatible
/// gradient field.
pub struct GeneralSquareFixture {
    pub complex: SimplicialComplex,
    pub coords: Vec<[f64; 3]>,
    pub f: AdmissibleFunction,
    /// Pairs D-BD, AB-ABD, CD-ACD; critical A, B, C, AC, AD.
    pub field: DiscreteVectorField,
    pub va: SimplexId,
    pub vb: SimplexId,
    pub vc: SimplexId,
    pub vd: SimplexId,
    pub ab: SimplexId,
    pub ac: SimplexId,
    pub ad: SimplexId,
    pub bd: SimplexId,
    pub cd: SimplexId,
    pub acd: SimplexId,
    pub abd: SimplexId,
}

/// The square with explicit per-simplex values: admissible, compatible
/// with the drawn field, but not a Morse function (the triangle ABD has
/// two facets with values above-or-equal).
pub fn square_general_function() -> GeneralSquareFixture {
    let (complex, [vc, va, vb, vd, ac, ab, bd, cd, ad, acd, abd]) = square_complex();
    let mut values = vec![0.0; complex.len() * 2];
    let mut set = |s: SimplexId, v: [f64; 2]| {
        values[s.index() * 2] = v[0];
        values[s.index() * 2 + 1] = v[1];
    };
    set(va, [1.0, 1.0]);
    set(vb, [1.0, 0.0]);
    set(vc, [0.0, 1.0]);
    set(vd, [2.0, 0.0]);
    set(ab, [2.0, 1.0]);
    set(ac, [1.0, 2.0]);
    set(ad, [2.0, 1.0]);
    set(bd, [2.0, 0.0]);
    set(cd, [2.0, 2.0]);
    set(abd, [2.0, 1.0]);
    set(acd, [2.0, 2.0]);
    let f = AdmissibleFunction::from_values(&complex, 2, values)
        .expect("fixture values are admissible");
    let field = DiscreteVectorField::from_pairs(&complex, &[(vd, bd), (ab, abd), (cd, acd)])
        .expect("fixture pairs are valid");
    GeneralSquareFixture {
        complex,
        coords: square_coords(),
        f,
        field,
        va,
        vb,
        vc,
        vd,
        ab,
        ac,
        ad,
        bd,
        cd,
        acd,
        abd,
    }
}

/// Coordinates of the regular 12-gon on the unit circle, one vertex every
/// 30 degrees starting at (1, 0). Entries are exact (0, +-1/2, +-sqrt(3)/2,
/// +-1), sharing one computed constant, so symmetric values compare equal
/// bit-for-bit.
fn twelve_gon_table() -> ([f64; 12], [f64; 12]) {
    let c = 3.0f64.sqrt() / 2.0;
    let cos = [1.0, c, 0.5, 0.0, -0.5, -c, -1.0, -c, -0.5, 0.0, 0.5, c];
    let sin = [0.0, 0.5, c, 1.0, c, 0.5, 0.0, -0.5, -c, -1.0, -c, -0.5];
    (cos, sin)
}

/// A circle: the boundary of the regular 12-gon. Vertices are numbered
/// 0..12 counterclockwise from (1, 0); vertex ids come first, then the
/// edges {i, i+1}.
pub fn circle_complex() -> (SimplicialComplex, Vec<[f64; 3]>) {
    let (cos, sin) = twelve_gon_table();
    let mut k = SimplicialComplex::new();
    let mut coords = Vec::new();
    for i in 0..12 {
        k.insert_simplex(&[i]).expect("vertex");
        coords.push([cos[i], sin[i], 0.0]);
    }
    for i in 0..12 {
        k.insert_simplex(&[i, (i + 1) % 12]).expect("edge");
    }
    (k, coords)
}

/// The max-extension of the coordinate pair (x, y) over the vertices of
/// an embedded complex.
pub fn xy_function(complex: &SimplicialComplex, coords: &[[f64; 3]]) -> AdmissibleFunction {
    let rows: Vec<f64> = coords.iter().flat_map(|p| [p[0], p[1]]).collect();
    max_extension(complex, 2, &rows).expect("max-extensions are admissible")
}

/// The (x, y) max-extension on the 12-gon circle. Already a Morse
/// function: six vertex-edge pairs and twelve critical simplices.
pub fn circle_xy_function(complex: &SimplicialComplex, coords: &[[f64; 3]]) -> AdmissibleFunction {
    xy_function(complex, coords)
}

/// The octahedron boundary: the smallest triangulated sphere used here,
/// with vertices on the coordinate axes.
pub fn octahedron() -> (SimplicialComplex, Vec<[f64; 3]>) {
    let coords = vec![
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ];
    let mut k = SimplicialComplex::new();
    for x in [0, 1] {
        for y in [2, 3] {
            for z in [4, 5] {
                k.insert_simplex(&[x, y, z]).expect("face");
            }
        }
    }
    (k, coords)
}

/// A sphere built as the suspension of the 12-gon circle: the equator
/// keeps the exact 12-gon coordinates, with poles at (0, 0, +-1).
/// 14 vertices, 36 edges, 24 triangles.
pub fn suspended_circle_sphere() -> (SimplicialComplex, Vec<[f64; 3]>) {
    let (cos, sin) = twelve_gon_table();
    let mut coords: Vec<[f64; 3]> = (0..12).map(|i| [cos[i], sin[i], 0.0]).collect();
    coords.push([0.0, 0.0, 1.0]);
    coords.push([0.0, 0.0, -1.0]);
    let mut k = SimplicialComplex::new();
    for i in 0..12 {
        let j = (i + 1) % 12;
        k.insert_simplex(&[i, j, 12]).expect("north face");
        k.insert_simplex(&[i, j, 13]).expect("south face");
    }
    debug_assert_eq!(k.count_of_dim(0), 14);
    debug_assert_eq!(k.count_of_dim(1), 36);
    debug_assert_eq!(k.count_of_dim(2), 24);
    (k, coords)
}

/// A torus of revolution (ring radius 2, tube radius 1) triangulated on a
/// 12 x 12 vertex grid, both angles stepping by 30 degrees with exact
/// coordinate tables. Vertex (i, j) — angle i around the ring, j around
/// the tube — is numbered 12 i + j. 144 vertices, 432 edges, 288
/// triangles. Contains the points (0, -3, 0) (outer equator) and
/// (0, -1, 0) (inner equator).
pub fn torus_grid() -> (SimplicialComplex, Vec<[f64; 3]>) {
    let (cos, sin) = twelve_gon_table();
    let n = 12;
    let mut coords = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let ring = 2.0 + cos[j];
            coords.push([ring * cos[i], ring * sin[i], sin[j]]);
        }
    }
    let v = |i: usize, j: usize| (i % n) * n + (j % n);
    let mut k = SimplicialComplex::new();
    for i in 0..n {
        for j in 0..n {
            let (a, b, c, d) = (v(i, j), v(i + 1, j), v(i, j + 1), v(i + 1, j + 1));
            k.insert_simplex(&[a, b, c]).expect("face");
            k.insert_simplex(&[b, c, d]).expect("face");
        }
    }
    debug_assert_eq!(k.count_of_dim(0), 144);
    debug_assert_eq!(k.count_of_dim(1), 432);
    debug_assert_eq!(k.count_of_dim(2), 288);
    (k, coords)
}

/// The 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} modulo 7.
/// The smallest triangulation of the torus; every pair of vertices spans
/// an edge.
pub fn csaszar_torus() -> SimplicialComplex {
    let mut k = SimplicialComplex::new();
    for i in 0..7 {
        k.insert_simplex(&[i, (i + 1) % 7, (i + 3) % 7])
            .expect("face");
        k.insert_simplex(&[i, (i + 2) % 7, (i + 3) % 7])
            .expect("face");
    }
    debug_assert_eq!(k.count_of_dim(0), 7);
    debug_assert_eq!(k.count_of_dim(1), 21);
    debug_assert_eq!(k.count_of_dim(2), 14);
    k
}

/// The 6-vertex projective plane: 10 triangles, every pair of vertices an
/// edge. Integral homology has a single 2-torsion class in degree one.
pub fn projective_plane() -> SimplicialComplex {
    let faces: [[usize; 3]; 10] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 4, 5],
        [2, 3, 5],
        [1, 3, 5],
        [1, 3, 4],
    ];
    let mut k = SimplicialComplex::new();
    for f in faces {
        k.insert_simplex(&f).expect("face");
    }
    debug_assert_eq!(k.count_of_dim(0), 6);
    debug_assert_eq!(k.count_of_dim(1), 15);
    debug_assert_eq!(k.count_of_dim(2), 10);
    k
}

/// A Klein bottle on a 3 x 3 vertex grid: the torus pattern in one
/// direction, the gluing in the other direction reflected (row 2 wraps to
/// row 0 with column i sent to -i). Vertex (column i, row j) is numbered
/// 3 i + j. 9 vertices, 27 edges, 18 triangles.
pub fn klein_bottle() -> SimplicialComplex {
    let v = |i: usize, j: usize| -> usize {
        let i = i % 3;
        if j < 3 {
            3 * i + j
        } else {
            // Row 3 is row 0 reflected in the column direction.
            3 * ((3 - i) % 3)
        }
    };
    let mut k = SimplicialComplex::new();
    for i in 0..3 {
        for j in 0..3 {
            let (a, b, c, d) = (v(i, j), v(i + 1, j), v(i, j + 1), v(i + 1, j + 1));
            k.insert_simplex(&[a, b, c]).expect("face");
            k.insert_simplex(&[b, c, d]).expect("face");
        }
    }
    debug_assert_eq!(k.count_of_dim(0), 9);
    debug_assert_eq!(k.count_of_dim(1), 27);
    debug_assert_eq!(k.count_of_dim(2), 18);
    k
}

/// A triangulated dunce hat: a disk whose boundary circle is glued to the
/// loop 0 -> 1 -> 2 -> 0 twice forward and once backward. Contractible
/// (homology of a point) but not collapsible, so no gradient field on it
/// is free of critical simplices beyond one vertex.
///
/// Construction: an outer 9-gon carrying the identified boundary word,
/// a free inner 9-ring (vertices 3..12), an annulus between them, and a
/// fan closing the inner disk. 12 vertices, 36 edges, 25 triangles.
pub fn dunce_hat() -> SimplicialComplex {
    let word = [0usize, 1, 2, 0, 1, 2, 0, 2, 1];
    let m = |i: usize| 3 + (i % 9);
    let mut k = SimplicialComplex::new();
    for i in 0..9 {
        let (a, b) = (word[i], word[(i + 1) % 9]);
        k.insert_simplex(&[a, b, m(i)]).expect("annulus face");
        k.insert_simplex(&[b, m(i), m(i + 1)])
            .expect("annulus face");
    }
    for i in 1..8 {
        k.insert_simplex(&[m(0), m(i), m(i + 1)]).expect("fan face");
    }
    debug_assert_eq!(k.count_of_dim(0), 12);
    debug_assert_eq!(k.count_of_dim(1), 36);
    debug_assert_eq!(k.count_of_dim(2), 25);
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_ids_follow_insertion_order() {
        let fx = square_bifiltration();
        assert_eq!(fx.complex.len(), 11);
        assert_eq!(fx.vc, SimplexId(0));
        assert_eq!(fx.va, SimplexId(1));
        assert_eq!(fx.vb, SimplexId(2));
        assert_eq!(fx.vd, SimplexId(3));
        assert_eq!(fx.ac, SimplexId(4));
        assert_eq!(fx.ab, SimplexId(5));
        assert_eq!(fx.bd, SimplexId(6));
        assert_eq!(fx.cd, SimplexId(7));
        assert_eq!(fx.ad, SimplexId(8));
        assert_eq!(fx.acd, SimplexId(9));
        assert_eq!(fx.abd, SimplexId(10));
        assert_eq!(fx.complex.vertices_of(fx.abd), &[0, 1, 3]);
    }

    #[test]
    fn surfaces_have_expected_face_counts() {
        // Counts double as duplicate-simplex detectors: a bad gluing would
        // merge faces and change them.
        let (oct, _) = octahedron();
        assert_eq!(
            (0..3).map(|d| oct.count_of_dim(d)).collect::<Vec<_>>(),
            vec![6, 12, 8]
        );
        let (sph, _) = suspended_circle_sphere();
        assert_eq!(
            (0..3).map(|d| sph.count_of_dim(d)).collect::<Vec<_>>(),
            vec![14, 36, 24]
        );
        let (tor, _) = torus_grid();
        assert_eq!(
            (0..3).map(|d| tor.count_of_dim(d)).collect::<Vec<_>>(),
            vec![144, 432, 288]
        );
        assert_eq!(
            (0..3)
                .map(|d| csaszar_torus().count_of_dim(d))
                .collect::<Vec<_>>(),
            vec![7, 21, 14]
        );
        assert_eq!(
            (0..3)
                .map(|d| projective_plane().count_of_dim(d))
                .collect::<Vec<_>>(),
            vec![6, 15, 10]
        );
        assert_eq!(
            (0..3)
                .map(|d| klein_bottle().count_of_dim(d))
                .collect::<Vec<_>>(),
            vec![9, 27, 18]
        );
        assert_eq!(
            (0..3)
                .map(|d| dunce_hat().count_of_dim(d))
                .collect::<Vec<_>>(),
            vec![12, 36, 25]
        );
    }

    #[test]
    fn closed_surfaces_have_every_edge_in_two_triangles() {
        let surfaces: Vec<SimplicialComplex> = vec![
            octahedron().0,
            suspended_circle_sphere().0,
            torus_grid().0,
            csaszar_torus(),
            projective_plane(),
            klein_bottle(),
        ];
        for k in &surfaces {
            for e in k.ids_of_dim(1) {
                assert_eq!(k.cofacets_of(e).len(), 2, "edge {e} not interior");
            }
        }
    }

    #[test]
    fn euler_characteristics() {
        let chi = |k: &SimplicialComplex| -> i64 {
            (0..=k.dim().unwrap())
                .map(|d| {
                    let c = k.count_of_dim(d) as i64;
                    if d % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum()
        };
        assert_eq!(chi(&octahedron().0), 2);
        assert_eq!(chi(&suspended_circle_sphere().0), 2);
        assert_eq!(chi(&torus_grid().0), 0);
        assert_eq!(chi(&csaszar_torus()), 0);
        assert_eq!(chi(&projective_plane()), 1);
        assert_eq!(chi(&klein_bottle()), 0);
        assert_eq!(chi(&dunce_hat()), 1);
        assert_eq!(chi(&circle_complex().0), 0);
    }

    #[test]
    fn torus_grid_contains_named_equator_points() {
        let (_, coords) = torus_grid();
        assert!(coords.iter().any(|p| p == &[0.0, -3.0, 0.0]));
        assert!(coords.iter().any(|p| p == &[0.0, -1.0, 0.0]));
    }

    #[test]
    fn circle_values_pair_exactly_where_expected() {
        let (k, coords) = circle_complex();
        let f = circle_xy_function(&k, &coords);
        // value(edge) equals value(vertex) exactly for the six pairs.
        let pairs = [(0usize, 11usize), (3, 3), (4, 4), (5, 5), (10, 9), (11, 10)];
        for (vi, ei) in pairs {
            let v = k.id_of(&[vi]).unwrap();
            let e = k.id_of(&[ei, (ei + 1) % 12]).unwrap();
            assert_eq!(f.value(v), f.value(e), "vertex {vi} vs edge {ei}");
        }
    }
}
