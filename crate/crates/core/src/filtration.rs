//! Multifiltering functions on simplicial complexes and their level sets.
//!
//! A function `f: K -> R^k` is *admissible* (multifiltering) when every
//! component is monotone along the face relation: `a <= s` implies
//! `f_i(a) <= f_i(s)` for all `i`. Its fibers, the level sets, are
//! face-convex blocks that partition the complex; processed in an order
//! refining the componentwise partial order on values they drive the whole
//! construction downstream.

use crate::complex::{SimplexId, SimplexSet, SimplicialComplex};
use thiserror::Error;

/// Errors from building or combining multifiltering functions.
#[derive(Debug, Error, PartialEq)]
pub enum FiltrationError {
    #[error("number of components k must be at least 1")]
    ZeroComponents,
    #[error("expected {expected} values ({k} per simplex), got {got}")]
    ValueCountMismatch {
        expected: usize,
        k: usize,
        got: usize,
    },
    #[error("value of simplex {0} has a non-finite component")]
    NonFinite(SimplexId),
    #[error("not admissible: component {component} decreases from face {face} to coface {coface}")]
    NotAdmissible {
        face: SimplexId,
        coface: SimplexId,
        component: usize,
    },
    #[error("no value row for vertex {0}")]
    VertexRowMissing(usize),
    #[error("cannot combine functions over complexes of different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("combine needs at least one function")]
    EmptyCombination,
}

/// A validated multifiltering function `f: K -> R^k`.
///
/// Values are stored row-major by simplex id. All components are finite and
/// negative zeros are normalized, so level-set grouping by exact equality
/// coincides with numeric equality.
#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibleFunction {
    k: usize,
    values: Vec<f64>,
}

impl AdmissibleFunction {
    /// Validates and wraps explicit values (`k` per simplex, in id order).
    pub fn from_values(
        complex: &SimplicialComplex,
        k: usize,
        values: Vec<f64>,
    ) -> Result<Self, FiltrationError> {
        let mut values = values;
        normalize_zeros(&mut values);
        check_admissible_raw(complex, k, &values)?;
        Ok(Self { k, values })
    }

    /// Number of components `k`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of simplices covered.
    pub fn len(&self) -> usize {
        self.values.len() / self.k
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The value vector of a simplex.
    pub fn value(&self, s: SimplexId) -> &[f64] {
        &self.values[s.index() * self.k..(s.index() + 1) * self.k]
    }

    /// One component of the value of a simplex.
    pub fn component(&self, s: SimplexId, i: usize) -> f64 {
        self.values[s.index() * self.k + i]
    }

    /// All values, row-major by simplex id.
    pub fn rows(&self) -> &[f64] {
        &self.values
    }
}

fn normalize_zeros(values: &mut [f64]) {
    for v in values {
        if *v == 0.0 {
            *v = 0.0;
        }
    }
}

fn check_admissible_raw(
    complex: &SimplicialComplex,
    k: usize,
    values: &[f64],
) -> Result<(), FiltrationError> {
    if k == 0 {
        return Err(FiltrationError::ZeroComponents);
    }
    if values.len() != complex.len() * k {
        return Err(FiltrationError::ValueCountMismatch {
            expected: complex.len() * k,
            k,
            got: values.len(),
        });
    }
    for s in complex.ids() {
        for i in 0..k {
            if !values[s.index() * k + i].is_finite() {
                return Err(FiltrationError::NonFinite(s));
            }
        }
    }
    // Facet pairs suffice: monotonicity composes along face chains.
    for s in complex.ids() {
        for &t in complex.facets_of(s) {
            for i in 0..k {
                if values[t.index() * k + i] > values[s.index() * k + i] {
                    return Err(FiltrationError::NotAdmissible {
                        face: t,
                        coface: s,
                        component: i,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Checks whether candidate values (`k` per simplex, id order) define an
/// admissible function, reporting the first violating facet pair otherwise.
pub fn check_admissible(
    complex: &SimplicialComplex,
    k: usize,
    values: &[f64],
) -> Result<(), FiltrationError> {
    check_admissible_raw(complex, k, values)
}

/// Extends a vertex map to the whole complex by taking componentwise maxima
/// over the vertices of each simplex. The result is admissible by
/// construction.
///
/// `vertex_rows` holds `k` values per vertex id (row-major); every vertex
/// used by the complex must have a row.
pub fn max_extension(
    complex: &SimplicialComplex,
    k: usize,
    vertex_rows: &[f64],
) -> Result<AdmissibleFunction, FiltrationError> {
    if k == 0 {
        return Err(FiltrationError::ZeroComponents);
    }
    let mut values = vec![0.0; complex.len() * k];
    for s in complex.ids() {
        let verts = complex.vertices_of(s);
        for i in 0..k {
            let mut m = f64::NEG_INFINITY;
            for &v in verts {
                let row = v * k + i;
                if row >= vertex_rows.len() {
                    return Err(FiltrationError::VertexRowMissing(v));
                }
                m = m.max(vertex_rows[row]);
            }
            values[s.index() * k + i] = m;
        }
    }
    normalize_zeros(&mut values);
    check_admissible_raw(complex, k, &values)?;
    Ok(AdmissibleFunction { k, values })
}

/// The Rips diameter filtration of an embedded complex: vertices map to 0,
/// every other simplex to the maximum pairwise Euclidean distance between
/// its vertices. One-component and admissible, but not a max-extension.
pub fn rips_diameter_map(
    complex: &SimplicialComplex,
    coords: &[[f64; 3]],
) -> Result<AdmissibleFunction, FiltrationError> {
    let mut values = vec![0.0; complex.len()];
    for s in complex.ids() {
        let verts = complex.vertices_of(s);
        let mut diameter = 0.0f64;
        for (n, &a) in verts.iter().enumerate() {
            if a >= coords.len() {
                return Err(FiltrationError::VertexRowMissing(a));
            }
            for &b in &verts[n + 1..] {
                if b >= coords.len() {
                    return Err(FiltrationError::VertexRowMissing(b));
                }
                let d = dist(coords[a], coords[b]);
                diameter = diameter.max(d);
            }
        }
        values[s.index()] = diameter;
    }
    check_admissible_raw(complex, 1, &values)?;
    Ok(AdmissibleFunction { k: 1, values })
}

fn dist(a: [f64; 3], b: [f64; 3]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// Zips several functions over the same complex into one function whose
/// component list is the concatenation of theirs. Admissibility of the
/// result is equivalent to admissibility of every input, so no re-check is
/// needed.
pub fn combine(parts: &[&AdmissibleFunction]) -> Result<AdmissibleFunction, FiltrationError> {
    let first = parts.first().ok_or(FiltrationError::EmptyCombination)?;
    let n = first.len();
    for p in parts {
        if p.len() != n {
            return Err(FiltrationError::SizeMismatch(n, p.len()));
        }
    }
    let k: usize = parts.iter().map(|p| p.k()).sum();
    let mut values = Vec::with_capacity(n * k);
    for s in 0..n {
        for p in parts {
            values.extend_from_slice(p.value(SimplexId(s)));
        }
    }
    Ok(AdmissibleFunction { k, values })
}

/// One fiber of a multifiltering function.
#[derive(Clone, Debug)]
pub struct Level {
    /// The shared value vector of the fiber.
    pub value: Vec<f64>,
    /// The member simplices.
    pub members: SimplexSet,
}

/// The fibers of an admissible function, ordered lexicographically by value
/// vector. Lexicographic order refines the componentwise partial order, so
/// sweeping the levels in this order never visits a value before one that
/// precedes it.
#[derive(Clone, Debug)]
pub struct LevelSetDecomposition {
    levels: Vec<Level>,
    level_of: Vec<usize>,
}

impl LevelSetDecomposition {
    /// Number of distinct values, `|f(K)|`.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// The levels in lexicographic value order.
    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Index of the level containing a simplex.
    pub fn level_of(&self, s: SimplexId) -> usize {
        self.level_of[s.index()]
    }

    /// Finds the level with exactly this value vector.
    pub fn find_value(&self, value: &[f64]) -> Option<&Level> {
        self.levels.iter().find(|l| l.value == value)
    }

    /// Size of the largest fiber.
    pub fn max_level_size(&self) -> usize {
        self.levels
            .iter()
            .map(|l| l.members.len())
            .max()
            .unwrap_or(0)
    }
}

/// Groups the simplices of the complex into the fibers of `f`, ordered
/// lexicographically by value vector.
pub fn level_sets(complex: &SimplicialComplex, f: &AdmissibleFunction) -> LevelSetDecomposition {
    assert_eq!(
        f.len(),
        complex.len(),
        "function and complex must have the same simplex count"
    );
    let mut order: Vec<SimplexId> = complex.ids().collect();
    order.sort_by(|&a, &b| lex_cmp(f.value(a), f.value(b)).then(a.cmp(&b)));
    let mut levels: Vec<Level> = Vec::new();
    let mut level_of = vec![0usize; complex.len()];
    for s in order {
        let value = f.value(s);
        match levels.last_mut() {
            Some(last) if last.value == value => {
                last.members.insert(s);
            }
            _ => {
                let mut members = SimplexSet::new();
                members.insert(s);
                levels.push(Level {
                    value: value.to_vec(),
                    members,
                });
            }
        }
        level_of[s.index()] = levels.len() - 1;
    }
    LevelSetDecomposition { levels, level_of }
}

fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y).expect("values are finite") {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

/// `a` componentwise-below-or-equal `b`.
pub fn leq(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn admissibility_detects_first_violation() {
        let mut k = SimplicialComplex::new();
        k.insert_simplex(&[0, 1]).unwrap();
        // Vertex 1 above the edge in component 0.
        let values = vec![0.0, 2.0, 1.0];
        let err = check_admissible(&k, 1, &values).unwrap_err();
        assert_eq!(
            err,
            FiltrationError::NotAdmissible {
                face: SimplexId(1),
                coface: SimplexId(2),
                component: 0,
            }
        );
    }

    #[test]
    fn square_bifiltration_is_admissible() {
        let fx = fixtures::square_bifiltration();
        // Already validated during construction; double-check through the
        // public entry point.
        assert!(check_admissible(&fx.complex, 2, fx.f.rows()).is_ok());
    }

    #[test]
    fn admissible_iff_every_component_is() {
        // Forward: projecting an admissible function to one component stays
        // admissible. Backward: zipping admissible scalars is admissible.
        let fx = fixtures::square_bifiltration();
        let n = fx.complex.len();
        for i in 0..2 {
            let comp: Vec<f64> = (0..n).map(|s| fx.f.component(SimplexId(s), i)).collect();
            let part = AdmissibleFunction::from_values(&fx.complex, 1, comp).unwrap();
            let zipped = combine(&[&part, &part]).unwrap();
            assert!(check_admissible(&fx.complex, 2, zipped.rows()).is_ok());
        }
        // A function with one bad component is rejected even when the other
        // component is fine.
        let mut bad = fx.f.rows().to_vec();
        // Lower the second component of the last simplex below its faces.
        bad[(n - 1) * 2 + 1] = -10.0;
        assert!(check_admissible(&fx.complex, 2, &bad).is_err());
    }

    #[test]
    fn max_extension_matches_hand_values_on_square() {
        let fx = fixtures::square_bifiltration();
        // Vertex values A=(1,2), B=(0,0), C=(0,0), D=(2,1).
        assert_eq!(fx.f.value(fx.ad), &[2.0, 2.0]);
        assert_eq!(fx.f.value(fx.bd), &[2.0, 1.0]);
        assert_eq!(fx.f.value(fx.abd), &[2.0, 2.0]);
        assert_eq!(fx.f.value(fx.ab), &[1.0, 2.0]);
    }

    #[test]
    fn max_extension_of_constant_zero_is_constant_zero() {
        let mut k = SimplicialComplex::new();
        k.insert_simplex(&[0, 1, 2]).unwrap();
        let f = max_extension(&k, 1, &[0.0, 0.0, 0.0]).unwrap();
        assert!(f.rows().iter().all(|&v| v == 0.0));
        let ls = level_sets(&k, &f);
        assert_eq!(ls.len(), 1);
        assert_eq!(ls.levels()[0].members.len(), k.len());
    }

    #[test]
    fn rips_diameter_on_unit_edge_and_345_triangle() {
        let mut k = SimplicialComplex::new();
        k.insert_simplex(&[0, 1]).unwrap();
        let f = rips_diameter_map(&k, &[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]).unwrap();
        let e = k.id_of(&[0, 1]).unwrap();
        assert_eq!(f.value(e), &[1.0]);
        assert_eq!(f.value(k.id_of(&[0]).unwrap()), &[0.0]);

        let mut k = SimplicialComplex::new();
        let t = k.insert_simplex(&[0, 1, 2]).unwrap();
        // A 3-4-5 right triangle: diameter 5.
        let coords = [[0.0, 0.0, 0.0], [3.0, 0.0, 0.0], [0.0, 4.0, 0.0]];
        let f = rips_diameter_map(&k, &coords).unwrap();
        assert_eq!(f.value(t), &[5.0]);
    }

    #[test]
    fn square_bifiltration_level_sets() {
        let fx = fixtures::square_bifiltration();
        let ls = level_sets(&fx.complex, &fx.f);
        assert_eq!(ls.len(), 4);
        let values: Vec<&[f64]> = ls.levels().iter().map(|l| l.value.as_slice()).collect();
        assert_eq!(
            values,
            vec![
                &[0.0, 0.0][..],
                &[1.0, 2.0][..],
                &[2.0, 1.0][..],
                &[2.0, 2.0][..]
            ]
        );
        let level0: Vec<SimplexId> = ls.levels()[0].members.iter().collect();
        assert_eq!(level0, vec![fx.vc, fx.vb]);
        let level3: Vec<SimplexId> = ls.levels()[3].members.iter().collect();
        assert_eq!(level3, vec![fx.ad, fx.acd, fx.abd]);
    }

    #[test]
    fn level_sets_partition_and_are_face_convex() {
        let fx = fixtures::square_bifiltration();
        let ls = level_sets(&fx.complex, &fx.f);
        let total: usize = ls.levels().iter().map(|l| l.members.len()).sum();
        assert_eq!(total, fx.complex.len());
        // Face-convexity: if a <= t <= b with a, b in a level, t is too.
        for level in ls.levels() {
            for t in fx.complex.ids() {
                if level.members.contains(t) {
                    continue;
                }
                let has_face = level
                    .members
                    .iter()
                    .any(|a| fx.complex.is_face_of(a, t) && a != t);
                let has_coface = level
                    .members
                    .iter()
                    .any(|b| fx.complex.is_face_of(t, b) && b != t);
                assert!(
                    !(has_face && has_coface),
                    "level fiber is not face-convex at {t}"
                );
            }
        }
    }

    #[test]
    fn level_order_refines_componentwise_order() {
        let fx = fixtures::square_bifiltration();
        let ls = level_sets(&fx.complex, &fx.f);
        for (i, a) in ls.levels().iter().enumerate() {
            for b in &ls.levels()[i + 1..] {
                let strictly_below = leq(&b.value, &a.value) && b.value != a.value;
                assert!(!strictly_below, "later level strictly below earlier one");
            }
        }
    }

    #[test]
    fn injective_max_extension_levels_are_lower_stars() {
        // Componentwise-injective vertex values on a full triangle: each
        // level is exactly the set of cofaces of its minimum-vertex simplex
        // sharing the same value (its lower star).
        let mut k = SimplicialComplex::new();
        k.insert_simplex(&[0, 1, 2]).unwrap();
        let f = max_extension(&k, 2, &[0.0, 10.0, 1.0, 20.0, 2.0, 30.0]).unwrap();
        let ls = level_sets(&k, &f);
        assert_eq!(ls.len(), 3);
        for level in ls.levels() {
            // The primary member: the unique vertex whose value equals the
            // level value.
            let vertex = level
                .members
                .iter()
                .find(|&s| k.dim_of(s) == 0)
                .expect("each level of an injective max-extension holds its vertex");
            let lower_star: Vec<SimplexId> = k
                .star(&[vertex].into_iter().collect())
                .iter()
                .filter(|&s| f.value(s) == f.value(vertex))
                .collect();
            let members: Vec<SimplexId> = level.members.iter().collect();
            assert_eq!(members, lower_star);
        }
    }

    #[test]
    fn combine_roundtrip() {
        let fx = fixtures::square_bifiltration();
        let n = fx.complex.len();
        let c0: Vec<f64> = (0..n).map(|s| fx.f.component(SimplexId(s), 0)).collect();
        let c1: Vec<f64> = (0..n).map(|s| fx.f.component(SimplexId(s), 1)).collect();
        let p0 = AdmissibleFunction::from_values(&fx.complex, 1, c0).unwrap();
        let p1 = AdmissibleFunction::from_values(&fx.complex, 1, c1).unwrap();
        let zipped = combine(&[&p0, &p1]).unwrap();
        assert_eq!(zipped, fx.f);
    }

    #[test]
    fn negative_zero_is_normalized() {
        let mut k = SimplicialComplex::new();
        k.insert_simplex(&[0]).unwrap();
        let f = AdmissibleFunction::from_values(&k, 1, vec![-0.0]).unwrap();
        assert_eq!(f.value(SimplexId(0))[0].to_bits(), 0.0f64.to_bits());
    }
}
