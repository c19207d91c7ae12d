//! Simplicial homology over the integers and over the two-element field.
//!
//! Two deliberately independent computation routes are kept side by side:
//! integer ranks and torsion come from a Smith normal form over
//! arbitrary-precision integers, while ranks over the two-element field
//! come from bitset Gaussian elimination. Tests play the routes against
//! each other.
//!
//! Relative homology of a face-convex subset `S` is computed on the basis
//! `S` itself, dropping boundary terms that fall outside the subset; this
//! equals the homology of the pair (closure of `S`, closure minus `S`).

use crate::complex::{SimplexId, SimplexSet, SimplicialComplex};
use crate::filtration::LevelSetDecomposition;
use crate::vector_field::DiscreteVectorField;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Coefficient choice for rank and homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    /// The integers: ranks via Smith normal form, torsion reported.
    Z,
    /// The field with two elements: ranks via bitset elimination.
    Z2,
}

impl std::fmt::Display for Ring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ring::Z => write!(f, "Z"),
            Ring::Z2 => write!(f, "Z2"),
        }
    }
}

/// Errors from homology computations.
#[derive(Debug, Error, PartialEq)]
pub enum HomologyError {
    #[error(
        "subset is not face-convex: {excluded} is outside the set but its face {face} is inside"
    )]
    NotFaceConvex {
        excluded: SimplexId,
        face: SimplexId,
    },
}

/// A dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    /// Matrix product, used by tests to confirm that consecutive boundary
    /// maps compose to zero.
    pub fn multiply(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row_a -= q * row_b
    fn row_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.get(a, c) - q * self.get(b, c);
            self.set(a, c, v);
        }
    }

    /// col_a -= q * col_b
    fn col_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.get(r, a) - q * self.get(r, b);
            self.set(r, a, v);
        }
    }
}

/// The diagonal of the Smith normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct SnfResult {
    /// Nonnegative invariant factors, each dividing the next, padded with
    /// zeros up to min(rows, cols).
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    /// The invariant factors larger than one: the torsion coefficients of
    /// the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| **d > BigInt::from(1))
            .cloned()
            .collect()
    }
}

/// Diagonalizes an integer matrix by row and column operations, returning
/// the invariant factors. Pivots are chosen of minimal absolute value to
/// keep entries small.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut a = m.clone();
    let bound = a.rows.min(a.cols);
    let mut t = 0;
    while t < bound {
        // Minimal-absolute-value nonzero pivot in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..a.rows {
            for c in t..a.cols {
                if !a.get(r, c).is_zero()
                    && pivot.is_none_or(|(pr, pc)| a.get(r, c).abs() < a.get(pr, pc).abs())
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        // Clear the pivot row and column; when a remainder survives it is
        // strictly smaller than the pivot, so swapping it in terminates.
        'reduce: loop {
            for r in t + 1..a.rows {
                if a.get(r, t).is_zero() {
                    continue;
                }
                let q = a.get(r, t) / a.get(t, t);
                a.row_sub(r, t, &q);
                if !a.get(r, t).is_zero() {
                    a.swap_rows(t, r);
                    continue 'reduce;
                }
            }
            for c in t + 1..a.cols {
                if a.get(t, c).is_zero() {
                    continue;
                }
                let q = a.get(t, c) / a.get(t, t);
                a.col_sub(c, t, &q);
                if !a.get(t, c).is_zero() {
                    a.swap_cols(t, c);
                    continue 'reduce;
                }
            }
            break;
        }
        t += 1;
    }
    let mut diagonal: Vec<BigInt> = (0..bound).map(|i| a.get(i, i).abs()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    // Enforce the divisibility chain d1 | d2 | ... by replacing offending
    // pairs with their gcd and lcm until stable.
    loop {
        let mut changed = false;
        for i in 0..rank {
            for j in i + 1..rank {
                if (&diagonal[j] % &diagonal[i]).is_zero() {
                    continue;
                }
                let g = gcd(diagonal[i].clone(), diagonal[j].clone());
                let l = &diagonal[i] / &g * &diagonal[j];
                diagonal[i] = g;
                diagonal[j] = l;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    diagonal[..rank].sort();
    SnfResult { diagonal, rank }
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    a = a.abs();
    b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// A dense matrix over the field with two elements, rows packed into
/// 64-bit words.
#[derive(Clone, Debug, PartialEq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        Self {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    /// Reduction of an integer matrix modulo two.
    pub fn from_int_matrix(m: &IntMatrix) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if (m.get(r, c) % 2u8).is_zero() {
                    continue;
                }
                out.set(r, c, true);
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let word = r * self.words + c / 64;
        let bit = 1u64 << (c % 64);
        if v {
            self.data[word] |= bit;
        } else {
            self.data[word] &= !bit;
        }
    }

    /// Rank by Gaussian elimination on a scratch copy, one word-parallel
    /// xor per eliminated row.
    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        let words = self.words;
        let mut rank = 0;
        for c in 0..self.cols {
            let word = c / 64;
            let bit = 1u64 << (c % 64);
            let Some(pivot) = (rank..self.rows).find(|&r| data[r * words + word] & bit != 0) else {
                continue;
            };
            for w in 0..words {
                data.swap(rank * words + w, pivot * words + w);
            }
            for r in 0..self.rows {
                if r != rank && data[r * words + word] & bit != 0 {
                    for w in 0..words {
                        data[r * words + w] ^= data[rank * words + w];
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Position of the vertex of `s` missing from its facet `a`; the sign of
/// `a` in the boundary of `s` is minus one to this power.
fn dropped_position(complex: &SimplicialComplex, s: SimplexId, a: SimplexId) -> usize {
    let sv = complex.vertices_of(s);
    let av = complex.vertices_of(a);
    av.iter()
        .zip(sv)
        .position(|(x, y)| x != y)
        .unwrap_or(av.len())
}

/// The matrix of the boundary map from p-chains to (p-1)-chains, rows and
/// columns indexed by the id order of the simplices of each dimension.
/// Entries are the alternating signs of vertex deletion in sorted vertex
/// order. For p = 0 the matrix has zero rows.
pub fn boundary_matrix(complex: &SimplicialComplex, p: usize) -> IntMatrix {
    let cols: Vec<SimplexId> = complex.ids_of_dim(p).collect();
    if p == 0 {
        return IntMatrix::zeros(0, cols.len());
    }
    let rows: Vec<SimplexId> = complex.ids_of_dim(p - 1).collect();
    let row_index: std::collections::HashMap<SimplexId, usize> =
        rows.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (j, &s) in cols.iter().enumerate() {
        for &a in complex.facets_of(s) {
            let sign = if dropped_position(complex, s, a) % 2 == 0 {
                1
            } else {
                -1
            };
            m.set(row_index[&a], j, BigInt::from(sign));
        }
    }
    m
}

fn matrix_rank(m: &IntMatrix, ring: Ring) -> usize {
    match ring {
        Ring::Z => smith_normal_form(m).rank,
        Ring::Z2 => Gf2Matrix::from_int_matrix(m).rank(),
    }
}

/// Betti numbers in all dimensions up to the dimension of the complex.
pub fn betti_numbers(complex: &SimplicialComplex, ring: Ring) -> Vec<usize> {
    let Some(dim) = complex.dim() else {
        return Vec::new();
    };
    // ranks[p] = rank of the boundary map out of dimension p.
    let ranks: Vec<usize> = (0..=dim + 1)
        .map(|p| {
            if p == 0 || p > dim {
                0
            } else {
                matrix_rank(&boundary_matrix(complex, p), ring)
            }
        })
        .collect();
    (0..=dim)
        .map(|p| complex.count_of_dim(p) - ranks[p] - ranks[p + 1])
        .collect()
}

/// Homology groups summarized: one Betti number per dimension, and for
/// integer coefficients the torsion coefficients per dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct HomologySummary {
    pub ring: Ring,
    pub betti: Vec<usize>,
    /// torsion[p]: invariant factors > 1 of the boundary map into
    /// dimension p. Always empty over the two-element field.
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologySummary {
    /// Whether any homology group is nonzero (free part or torsion).
    pub fn is_nonzero(&self) -> bool {
        self.betti.iter().any(|&b| b > 0) || self.torsion.iter().any(|t| !t.is_empty())
    }

    fn trivial(ring: Ring) -> Self {
        Self {
            ring,
            betti: Vec::new(),
            torsion: Vec::new(),
        }
    }
}

/// Homology of the pair (closure of the subset, closure minus subset),
/// computed on the subset itself as basis with outside boundary terms
/// dropped. The subset must be face-convex: no simplex outside it may sit
/// between two of its members. With the full complex as subset this is
/// plain homology, torsion included.
pub fn relative_homology(
    complex: &SimplicialComplex,
    members: &SimplexSet,
    ring: Ring,
) -> Result<HomologySummary, HomologyError> {
    if members.is_empty() {
        return Ok(HomologySummary::trivial(ring));
    }
    // Face-convexity: an excluded simplex of the closure with a facet
    // inside the set witnesses a violation.
    let closure = complex.closure(members);
    for t in closure.iter() {
        if members.contains(t) {
            continue;
        }
        for &a in complex.facets_of(t) {
            if members.contains(a) {
                return Err(HomologyError::NotFaceConvex {
                    excluded: t,
                    face: a,
                });
            }
        }
    }
    let dim = members
        .iter()
        .map(|s| complex.dim_of(s))
        .max()
        .expect("set is nonempty");
    let mut basis: Vec<Vec<SimplexId>> = vec![Vec::new(); dim + 1];
    for s in members.iter() {
        basis[complex.dim_of(s)].push(s);
    }
    // Relative boundary matrices between consecutive basis dimensions.
    let matrices: Vec<IntMatrix> = (0..=dim + 1)
        .map(|p| {
            if p == 0 || p > dim {
                return IntMatrix::zeros(0, 0);
            }
            let row_index: std::collections::HashMap<SimplexId, usize> = basis[p - 1]
                .iter()
                .enumerate()
                .map(|(i, &s)| (s, i))
                .collect();
            let mut m = IntMatrix::zeros(basis[p - 1].len(), basis[p].len());
            for (j, &s) in basis[p].iter().enumerate() {
                for &a in complex.facets_of(s) {
                    let Some(&i) = row_index.get(&a) else {
                        continue;
                    };
                    let sign = if dropped_position(complex, s, a) % 2 == 0 {
                        1
                    } else {
                        -1
                    };
                    m.set(i, j, BigInt::from(sign));
                }
            }
            m
        })
        .collect();
    let mut betti = Vec::with_capacity(dim + 1);
    let mut torsion = Vec::with_capacity(dim + 1);
    let mut snfs: Vec<Option<SnfResult>> = vec![None; dim + 2];
    for p in 0..=dim {
        let rank_out = if p == 0 {
            0
        } else {
            rank_for(&matrices[p], ring, &mut snfs, p)
        };
        let rank_in = if p + 1 > dim {
            0
        } else {
            rank_for(&matrices[p + 1], ring, &mut snfs, p + 1)
        };
        betti.push(basis[p].len() - rank_out - rank_in);
        torsion.push(match (ring, &snfs[p + 1]) {
            (Ring::Z, Some(snf)) => snf.torsion(),
            _ => Vec::new(),
        });
    }
    Ok(HomologySummary {
        ring,
        betti,
        torsion,
    })
}

fn rank_for(m: &IntMatrix, ring: Ring, snfs: &mut [Option<SnfResult>], p: usize) -> usize {
    match ring {
        Ring::Z => {
            if snfs[p].is_none() {
                snfs[p] = Some(smith_normal_form(m));
            }
            snfs[p].as_ref().unwrap().rank
        }
        Ring::Z2 => Gf2Matrix::from_int_matrix(m).rank(),
    }
}

/// One row of the level-by-level comparison: critical simplices of the
/// field in this level versus the ranks of the relative homology of the
/// level.
#[derive(Clone, Debug)]
pub struct MorseCountRow {
    pub level: Vec<f64>,
    pub morse: Vec<usize>,
    pub homology: Vec<usize>,
}

/// Comparison of critical-simplex counts against homology, globally and
/// level by level.
#[derive(Clone, Debug)]
pub struct MorseCountTable {
    pub ring: Ring,
    pub rows: Vec<MorseCountRow>,
    /// Critical simplices per dimension over the whole complex.
    pub total_morse: Vec<usize>,
    /// Betti numbers of the whole complex.
    pub betti: Vec<usize>,
}

impl MorseCountTable {
    /// Whether every level realizes its relative homology exactly.
    pub fn relative_perfect(&self) -> bool {
        self.rows.iter().all(|r| r.morse == r.homology)
    }

    /// Whether each global count dominates the matching Betti number.
    pub fn satisfies_morse_inequalities(&self) -> bool {
        self.total_morse
            .iter()
            .zip(&self.betti)
            .all(|(m, b)| m >= b)
            && self.total_morse.len() >= self.betti.len()
    }
}

/// Counts critical simplices per level of a decomposition and compares
/// them with the relative homology of each level, padding both sides to
/// the dimension of the complex.
pub fn morse_count_check(
    complex: &SimplicialComplex,
    levels: &LevelSetDecomposition,
    field: &DiscreteVectorField,
    ring: Ring,
) -> Result<MorseCountTable, HomologyError> {
    let width = complex.dim().map_or(0, |d| d + 1);
    let mut rows = Vec::with_capacity(levels.len());
    for level in levels.levels() {
        let mut morse = vec![0usize; width];
        for s in level.members.iter() {
            if field.is_critical(s) {
                morse[complex.dim_of(s)] += 1;
            }
        }
        let mut homology = relative_homology(complex, &level.members, ring)?.betti;
        homology.resize(width, 0);
        rows.push(MorseCountRow {
            level: level.value.clone(),
            morse,
            homology,
        });
    }
    Ok(MorseCountTable {
        ring,
        rows,
        total_morse: field.morse_counts(complex),
        betti: betti_numbers(complex, ring),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::IndexingMap;
    use crate::filtration::level_sets;
    use crate::fixtures;
    use crate::mdm::generate_mdm;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn snf_small_examples() {
        // Identity stays the identity.
        let id = IntMatrix::from_rows(&[vec![1, 0], vec![0, 1]]);
        let snf = smith_normal_form(&id);
        assert_eq!(snf.diagonal, vec![big(1), big(1)]);
        assert_eq!(snf.rank, 2);
        // [[2,4],[6,8]]: gcd of entries 2, |det| 8, so factors (2, 4).
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal, vec![big(2), big(4)]);
        assert_eq!(snf.torsion(), vec![big(2), big(4)]);
        // [[0,2],[3,0]]: gcd 1, |det| 6, so factors (1, 6).
        let m = IntMatrix::from_rows(&[vec![0, 2], vec![3, 0]]);
        assert_eq!(smith_normal_form(&m).diagonal, vec![big(1), big(6)]);
        // Zero matrix has rank zero.
        let z = IntMatrix::zeros(3, 2);
        let snf = smith_normal_form(&z);
        assert_eq!(snf.rank, 0);
        assert_eq!(snf.diagonal, vec![big(0), big(0)]);
        // A rectangular rank-1 example.
        let m = IntMatrix::from_rows(&[vec![2, 4, 6]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.rank, 1);
        assert_eq!(snf.diagonal, vec![big(2)]);
    }

    #[test]
    fn integer_and_mod2_ranks_differ_on_even_entries() {
        let m = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(smith_normal_form(&m).rank, 1);
        assert_eq!(Gf2Matrix::from_int_matrix(&m).rank(), 0);
    }

    #[test]
    fn gf2_rank_on_wide_matrix_crossing_word_boundaries() {
        // 3 x 130 with three independent rows, bits beyond bit 64.
        let mut m = Gf2Matrix::zeros(3, 130);
        m.set(0, 0, true);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(2, 0, true);
        m.set(2, 64, true);
        assert_eq!(m.rank(), 3);
        // Make row 2 the sum of rows 0 and 1 plus nothing new: rank drops.
        let mut m = Gf2Matrix::zeros(3, 130);
        m.set(0, 0, true);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(2, 0, true);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn boundary_matrix_of_filled_triangle() {
        let mut k = SimplicialComplex::new();
        k.insert_simplex(&[0, 1, 2]).unwrap();
        let d1 = boundary_matrix(&k, 1);
        // Columns: edges [0,1], [0,2], [1,2]; rows: vertices 0, 1, 2.
        let expect = IntMatrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(d1, expect);
        let d2 = boundary_matrix(&k, 2);
        let expect = IntMatrix::from_rows(&[vec![1], vec![-1], vec![1]]);
        assert_eq!(d2, expect);
        assert!(d1.multiply(&d2).is_zero());
        // Boundary out of dimension zero has no rows.
        assert_eq!(boundary_matrix(&k, 0).rows(), 0);
        assert_eq!(boundary_matrix(&k, 0).cols(), 3);
    }

    #[test]
    fn consecutive_boundaries_compose_to_zero() {
        let (k, _) = fixtures::octahedron();
        let d1 = boundary_matrix(&k, 1);
        let d2 = boundary_matrix(&k, 2);
        assert!(d1.multiply(&d2).is_zero());
        let k = fixtures::projective_plane();
        assert!(boundary_matrix(&k, 1)
            .multiply(&boundary_matrix(&k, 2))
            .is_zero());
    }

    #[test]
    fn betti_numbers_of_reference_spaces() {
        let (circle, _) = fixtures::circle_complex();
        assert_eq!(betti_numbers(&circle, Ring::Z), vec![1, 1]);
        assert_eq!(betti_numbers(&circle, Ring::Z2), vec![1, 1]);

        let mut triangle = SimplicialComplex::new();
        triangle.insert_simplex(&[0, 1, 2]).unwrap();
        assert_eq!(betti_numbers(&triangle, Ring::Z), vec![1, 0, 0]);

        let mut two_points = SimplicialComplex::new();
        two_points.insert_simplex(&[0]).unwrap();
        two_points.insert_simplex(&[1]).unwrap();
        assert_eq!(betti_numbers(&two_points, Ring::Z), vec![2]);

        let (oct, _) = fixtures::octahedron();
        assert_eq!(betti_numbers(&oct, Ring::Z), vec![1, 0, 1]);
        let (sphere, _) = fixtures::suspended_circle_sphere();
        assert_eq!(betti_numbers(&sphere, Ring::Z), vec![1, 0, 1]);

        let torus = fixtures::csaszar_torus();
        assert_eq!(betti_numbers(&torus, Ring::Z), vec![1, 2, 1]);
        assert_eq!(betti_numbers(&torus, Ring::Z2), vec![1, 2, 1]);

        let dunce = fixtures::dunce_hat();
        assert_eq!(betti_numbers(&dunce, Ring::Z), vec![1, 0, 0]);
    }

    #[test]
    fn torsion_surfaces_differ_between_rings() {
        // Projective plane: integral homology (Z, Z/2, 0).
        let rp2 = fixtures::projective_plane();
        assert_eq!(betti_numbers(&rp2, Ring::Z), vec![1, 0, 0]);
        assert_eq!(betti_numbers(&rp2, Ring::Z2), vec![1, 1, 1]);
        let all: SimplexSet = rp2.ids().collect();
        let h = relative_homology(&rp2, &all, Ring::Z).unwrap();
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion, vec![vec![], vec![big(2)], vec![]]);

        // Klein bottle: integral homology (Z, Z + Z/2, 0).
        let kb = fixtures::klein_bottle();
        assert_eq!(betti_numbers(&kb, Ring::Z), vec![1, 1, 0]);
        assert_eq!(betti_numbers(&kb, Ring::Z2), vec![1, 2, 1]);
        let all: SimplexSet = kb.ids().collect();
        let h = relative_homology(&kb, &all, Ring::Z).unwrap();
        assert_eq!(h.torsion, vec![vec![], vec![big(2)], vec![]]);

        // Universal coefficients: mod-2 Betti = integer Betti plus torsion
        // counts in this and the previous dimension.
        for k in [&rp2, &kb] {
            let all: SimplexSet = k.ids().collect();
            let hz = relative_homology(k, &all, Ring::Z).unwrap();
            let b2 = betti_numbers(k, Ring::Z2);
            for p in 0..b2.len() {
                let below = if p == 0 { 0 } else { hz.torsion[p - 1].len() };
                assert_eq!(b2[p], hz.betti[p] + hz.torsion[p].len() + below);
            }
        }
    }

    #[test]
    fn relative_homology_of_disk_interior_is_a_shifted_point() {
        // The open triangle relative to its boundary: one class in the top
        // dimension, nothing else.
        let mut k = SimplicialComplex::new();
        let t = k.insert_simplex(&[0, 1, 2]).unwrap();
        let interior: SimplexSet = [t].into_iter().collect();
        let h = relative_homology(&k, &interior, Ring::Z).unwrap();
        assert_eq!(h.betti, vec![0, 0, 1]);
        // A half-open pair that deformation-retracts away: all groups
        // vanish.
        let e = k.id_of(&[0, 1]).unwrap();
        let pair: SimplexSet = [e, t].into_iter().collect();
        let h = relative_homology(&k, &pair, Ring::Z).unwrap();
        assert!(!h.is_nonzero());
        // The full complex as subset gives plain homology.
        let all: SimplexSet = k.ids().collect();
        let h = relative_homology(&k, &all, Ring::Z).unwrap();
        assert_eq!(h.betti, vec![1, 0, 0]);
    }

    #[test]
    fn relative_homology_rejects_non_convex_subsets() {
        let mut k = SimplicialComplex::new();
        let t = k.insert_simplex(&[0, 1, 2]).unwrap();
        let v = k.id_of(&[0]).unwrap();
        let bad: SimplexSet = [v, t].into_iter().collect();
        let err = relative_homology(&k, &bad, Ring::Z).unwrap_err();
        assert!(matches!(err, HomologyError::NotFaceConvex { .. }));
    }

    #[test]
    fn square_levels_are_relative_perfect() {
        let fx = fixtures::square_bifiltration();
        let index = IndexingMap::insertion_order(&fx.complex);
        let (_, field, _) = generate_mdm(&fx.complex, &fx.f, &index, 0.5).unwrap();
        let levels = level_sets(&fx.complex, &fx.f);
        let table = morse_count_check(&fx.complex, &levels, &field, Ring::Z).unwrap();
        assert_eq!(table.total_morse, vec![2, 2, 1]);
        assert_eq!(table.betti, vec![1, 0, 0]);
        assert!(table.satisfies_morse_inequalities());
        assert!(table.relative_perfect());
        // Level (1,2) = {A, AB, AC}: one critical edge, relative homology
        // rank one in degree one.
        let row = &table.rows[1];
        assert_eq!(row.morse, vec![0, 1, 0]);
        assert_eq!(row.homology, vec![0, 1, 0]);
    }

    #[test]
    fn circle_with_coordinate_pair_is_relative_perfect() {
        let (k, coords) = fixtures::circle_complex();
        let f = fixtures::circle_xy_function(&k, &coords);
        let index = IndexingMap::insertion_order(&k);
        let (_, field, _) = generate_mdm(&k, &f, &index, 0.5).unwrap();
        let levels = level_sets(&k, &f);
        let table = morse_count_check(&k, &levels, &field, Ring::Z).unwrap();
        assert!(table.relative_perfect());
        assert_eq!(table.total_morse, vec![6, 6]);
        assert_eq!(table.betti, vec![1, 1]);
    }
}
