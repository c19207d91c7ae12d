//! Finite abstract simplicial complexes and the face-poset operators.
//!
//! A [`SimplicialComplex`] stores simplices as sorted vertex lists and keeps
//! facet/cofacet adjacency precomputed. Subsets of a complex are represented
//! by [`SimplexSet`]; the operators [`SimplicialComplex::closure`],
//! [`SimplicialComplex::star`], [`SimplicialComplex::interior`],
//! [`SimplicialComplex::boundary`] and [`SimplicialComplex::exit_set`] are
//! the operators of the Alexandrov topology on the face poset, in which the
//! open sets are exactly the unions of stars.

use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

/// Identifier of a simplex within one [`SimplicialComplex`]: its insertion
/// index.
///
/// Ids are dense (`0..complex.len()`) and stable. Because
/// [`SimplicialComplex::insert_simplex`] inserts missing faces before the
/// simplex itself, a face always has a smaller id than any of its cofaces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexId(pub usize);

impl SimplexId {
    /// The raw index, for addressing per-simplex arrays.
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl std::fmt::Display for SimplexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Errors from complex construction and indexing-map validation.
#[derive(Debug, Error, PartialEq)]
pub enum ComplexError {
    #[error("a simplex needs at least one vertex")]
    EmptyVertexList,
    #[error("vertex {0} appears twice in one simplex")]
    DuplicateVertex(usize),
    #[error("simplex id {0} does not belong to this complex")]
    UnknownSimplex(SimplexId),
    #[error("expected one value per simplex ({expected}), got {got}")]
    ValueCountMismatch { expected: usize, got: usize },
    #[error("indexing value for simplex {0} is not finite")]
    NonFiniteIndexValue(SimplexId),
    #[error("indexing map not injective: simplices {0} and {1} share a value")]
    IndexingNotInjective(SimplexId, SimplexId),
    #[error("indexing map not monotone: face {face} has a value above its coface {coface}")]
    IndexingNotMonotone { face: SimplexId, coface: SimplexId },
    #[error("coordinates provided for {got} vertices, but vertex id {vertex} is used")]
    MissingCoordinate { vertex: usize, got: usize },
}

/// A finite abstract simplicial complex with precomputed facet/cofacet
/// adjacency.
///
/// Vertices are dense integers chosen by the caller; simplices are
/// identified by [`SimplexId`]s assigned in insertion order. The complex is
/// always downward closed: inserting a simplex inserts all of its missing
/// faces first.
#[derive(Clone, Debug, Default)]
pub struct SimplicialComplex {
    /// Sorted vertex list per simplex, indexed by `SimplexId`.
    simplices: Vec<Vec<usize>>,
    /// Codimension-1 faces per simplex.
    facets: Vec<Vec<SimplexId>>,
    /// Codimension-1 cofaces per simplex, in insertion order.
    cofacets: Vec<Vec<SimplexId>>,
    /// Lookup from sorted vertex list to id.
    by_vertices: HashMap<Vec<usize>, SimplexId>,
    /// Simplex count per dimension.
    dim_counts: Vec<usize>,
}

impl SimplicialComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// Total number of simplices, all dimensions together.
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Dimension of the complex, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.dim_counts.len().checked_sub(1)
    }

    /// Number of `p`-simplices.
    pub fn count_of_dim(&self, p: usize) -> usize {
        self.dim_counts.get(p).copied().unwrap_or(0)
    }

    /// Inserts the simplex with the given vertices (any order, no
    /// duplicates) together with all of its missing faces, and returns its
    /// id. Re-inserting an existing simplex is a no-op returning the
    /// original id.
    pub fn insert_simplex(&mut self, vertices: &[usize]) -> Result<SimplexId, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::EmptyVertexList);
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(ComplexError::DuplicateVertex(w[0]));
            }
        }
        Ok(self.insert_sorted(sorted))
    }

    fn insert_sorted(&mut self, sorted: Vec<usize>) -> SimplexId {
        if let Some(&id) = self.by_vertices.get(&sorted) {
            return id;
        }
        // Insert the facets first (in lexicographic order of their vertex
        // lists) so that every face has a smaller id than the new simplex.
        let mut facet_ids = Vec::new();
        if sorted.len() > 1 {
            for drop in (0..sorted.len()).rev() {
                let mut facet = sorted.clone();
                facet.remove(drop);
                facet_ids.push(self.insert_sorted(facet));
            }
        }
        let id = SimplexId(self.simplices.len());
        let dim = sorted.len() - 1;
        for &facet in &facet_ids {
            self.cofacets[facet.index()].push(id);
        }
        self.by_vertices.insert(sorted.clone(), id);
        self.simplices.push(sorted);
        self.facets.push(facet_ids);
        self.cofacets.push(Vec::new());
        if self.dim_counts.len() <= dim {
            self.dim_counts.resize(dim + 1, 0);
        }
        self.dim_counts[dim] += 1;
        id
    }

    /// Looks up a simplex by its vertices.
    pub fn id_of(&self, vertices: &[usize]) -> Option<SimplexId> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        self.by_vertices.get(&sorted).copied()
    }

    /// The sorted vertex list of a simplex.
    pub fn vertices_of(&self, s: SimplexId) -> &[usize] {
        &self.simplices[s.index()]
    }

    /// Dimension of a simplex (vertex count minus one).
    pub fn dim_of(&self, s: SimplexId) -> usize {
        self.simplices[s.index()].len() - 1
    }

    /// Codimension-1 faces.
    pub fn facets_of(&self, s: SimplexId) -> &[SimplexId] {
        &self.facets[s.index()]
    }

    /// Codimension-1 cofaces.
    pub fn cofacets_of(&self, s: SimplexId) -> &[SimplexId] {
        &self.cofacets[s.index()]
    }

    /// Whether `a` is a face of `b` (not necessarily proper).
    pub fn is_face_of(&self, a: SimplexId, b: SimplexId) -> bool {
        let (va, vb) = (self.vertices_of(a), self.vertices_of(b));
        if va.len() > vb.len() {
            return false;
        }
        // Both lists are sorted: subset test by merge walk.
        let mut it = vb.iter();
        'outer: for x in va {
            for y in it.by_ref() {
                match y.cmp(x) {
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Less => {}
                }
            }
            return false;
        }
        true
    }

    /// All simplex ids, in insertion order.
    pub fn ids(&self) -> impl Iterator<Item = SimplexId> + '_ {
        (0..self.simplices.len()).map(SimplexId)
    }

    /// Ids of all `p`-simplices, in insertion order.
    pub fn ids_of_dim(&self, p: usize) -> impl Iterator<Item = SimplexId> + '_ {
        self.ids().filter(move |&s| self.dim_of(s) == p)
    }

    /// All vertex ids used by the complex, ascending.
    pub fn vertex_ids(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.ids_of_dim(0).map(|s| self.vertices_of(s)[0]).collect();
        out.sort_unstable();
        out
    }

    /// All proper faces of `s`.
    pub fn faces_of(&self, s: SimplexId) -> SimplexSet {
        let mut out = SimplexSet::new();
        let mut stack = self.facets[s.index()].clone();
        while let Some(t) = stack.pop() {
            if out.insert(t) {
                stack.extend_from_slice(&self.facets[t.index()]);
            }
        }
        out
    }

    /// All proper cofaces of `s`.
    pub fn cofaces_of(&self, s: SimplexId) -> SimplexSet {
        let mut out = SimplexSet::new();
        let mut stack = self.cofacets[s.index()].clone();
        while let Some(t) = stack.pop() {
            if out.insert(t) {
                stack.extend_from_slice(&self.cofacets[t.index()]);
            }
        }
        out
    }

    /// Closure `Cl S`: all members together with all their faces. The
    /// smallest subcomplex containing `S`.
    pub fn closure(&self, s: &SimplexSet) -> SimplexSet {
        let mut out = s.clone();
        for m in s.iter() {
            let mut stack = self.facets[m.index()].clone();
            while let Some(t) = stack.pop() {
                if out.insert(t) {
                    stack.extend_from_slice(&self.facets[t.index()]);
                }
            }
        }
        out
    }

    /// Star `St S`: all members together with all their cofaces. The
    /// smallest open set containing `S`.
    pub fn star(&self, s: &SimplexSet) -> SimplexSet {
        let mut out = s.clone();
        for m in s.iter() {
            let mut stack = self.cofacets[m.index()].clone();
            while let Some(t) = stack.pop() {
                if out.insert(t) {
                    stack.extend_from_slice(&self.cofacets[t.index()]);
                }
            }
        }
        out
    }

    /// Interior `Int S`: the members all of whose cofaces stay in `S`. The
    /// largest open set contained in `S`.
    pub fn interior(&self, s: &SimplexSet) -> SimplexSet {
        let mut out = SimplexSet::new();
        'member: for m in s.iter() {
            let mut seen = BTreeSet::new();
            let mut stack = self.cofacets[m.index()].clone();
            while let Some(t) = stack.pop() {
                if !s.contains(t) {
                    continue 'member;
                }
                if seen.insert(t) {
                    stack.extend_from_slice(&self.cofacets[t.index()]);
                }
            }
            out.insert(m);
        }
        out
    }

    /// Boundary `Bd S = Cl S \ Int S`.
    pub fn boundary(&self, s: &SimplexSet) -> SimplexSet {
        let interior = self.interior(s);
        self.closure(s)
            .iter()
            .filter(|&m| !interior.contains(m))
            .collect()
    }

    /// Exit set `Ex S = Cl S \ S`: the faces through which `S` is attached
    /// to the rest of the complex.
    pub fn exit_set(&self, s: &SimplexSet) -> SimplexSet {
        self.closure(s).iter().filter(|&m| !s.contains(m)).collect()
    }

    /// Connected components of `S` under the face relation restricted to
    /// `S`: two members are adjacent when one is a face of the other (any
    /// codimension), and components are the classes of the transitive
    /// closure. Components are returned ordered by their smallest member.
    pub fn connected_components(&self, s: &SimplexSet) -> Vec<SimplexSet> {
        let members: Vec<SimplexId> = s.iter().collect();
        let pos: HashMap<SimplexId, usize> =
            members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut uf = UnionFind::new(members.len());
        for (i, &m) in members.iter().enumerate() {
            // Linking each member to its faces inside S covers every
            // face-relation edge: for any pair alpha < sigma in S the union
            // happens when sigma is processed.
            for t in self.faces_of(m).iter() {
                if let Some(&j) = pos.get(&t) {
                    uf.union(i, j);
                }
            }
        }
        let mut groups: HashMap<usize, SimplexSet> = HashMap::new();
        for (i, &m) in members.iter().enumerate() {
            groups.entry(uf.find(i)).or_default().insert(m);
        }
        let mut out: Vec<SimplexSet> = groups.into_values().collect();
        out.sort_by_key(|g| g.iter().next());
        out
    }
}

/// A subset of the simplices of one complex, ordered by id.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplexSet {
    members: BTreeSet<SimplexId>,
}

impl SimplexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Inserts a member; returns whether it was new.
    pub fn insert(&mut self, s: SimplexId) -> bool {
        self.members.insert(s)
    }

    pub fn contains(&self, s: SimplexId) -> bool {
        self.members.contains(&s)
    }

    /// Members in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = SimplexId> + '_ {
        self.members.iter().copied()
    }
}

impl FromIterator<SimplexId> for SimplexSet {
    fn from_iter<T: IntoIterator<Item = SimplexId>>(iter: T) -> Self {
        Self {
            members: iter.into_iter().collect(),
        }
    }
}

impl Extend<SimplexId> for SimplexSet {
    fn extend<T: IntoIterator<Item = SimplexId>>(&mut self, iter: T) {
        self.members.extend(iter);
    }
}

/// An injective simplex-to-real map that strictly increases along the face
/// relation. It fixes the processing priority inside each level set.
#[derive(Clone, Debug)]
pub struct IndexingMap {
    values: Vec<f64>,
    ranks: Vec<usize>,
}

impl IndexingMap {
    /// The indexing map that orders simplices by insertion: `I(s) = id(s)`.
    /// Monotone because faces are always inserted before cofaces.
    pub fn insertion_order(complex: &SimplicialComplex) -> Self {
        let values: Vec<f64> = (0..complex.len()).map(|i| i as f64).collect();
        let ranks = (0..complex.len()).collect();
        Self { values, ranks }
    }

    /// Builds an indexing map from explicit values (one per simplex, in id
    /// order), validating finiteness, injectivity and monotonicity along
    /// the face relation.
    pub fn from_values(
        complex: &SimplicialComplex,
        values: Vec<f64>,
    ) -> Result<Self, ComplexError> {
        if values.len() != complex.len() {
            return Err(ComplexError::ValueCountMismatch {
                expected: complex.len(),
                got: values.len(),
            });
        }
        for s in complex.ids() {
            if !values[s.index()].is_finite() {
                return Err(ComplexError::NonFiniteIndexValue(s));
            }
        }
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
        for w in order.windows(2) {
            if values[w[0]] == values[w[1]] {
                return Err(ComplexError::IndexingNotInjective(
                    SimplexId(w[0].min(w[1])),
                    SimplexId(w[0].max(w[1])),
                ));
            }
        }
        // Checking facet pairs suffices: monotonicity is transitive.
        for s in complex.ids() {
            for &t in complex.facets_of(s) {
                if values[t.index()] >= values[s.index()] {
                    return Err(ComplexError::IndexingNotMonotone { face: t, coface: s });
                }
            }
        }
        let mut ranks = vec![0usize; values.len()];
        for (rank, &idx) in order.iter().enumerate() {
            ranks[idx] = rank;
        }
        Ok(Self { values, ranks })
    }

    /// The value assigned to a simplex.
    pub fn value(&self, s: SimplexId) -> f64 {
        self.values[s.index()]
    }

    /// Position of the simplex in ascending value order; ranks are a
    /// permutation of `0..len` and give an exact integer priority.
    pub fn rank(&self, s: SimplexId) -> usize {
        self.ranks[s.index()]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A coordinate axis of embedded vertex positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

/// Whether the axis indexing map should follow the coordinate upward or
/// downward.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxisDirection {
    Increasing,
    Decreasing,
}

/// Builds the indexing map induced by a coordinate axis: vertices are
/// relabeled in coordinate order (ties broken by vertex id), every simplex
/// is represented by its vertex labels in descending order, and simplices
/// are ranked lexicographically on those label lists.
///
/// The resulting order puts every face before its cofaces, so the map is
/// admissible for any complex; it is injective because distinct simplices
/// have distinct vertex sets.
pub fn axis_indexing_map(
    complex: &SimplicialComplex,
    coords: &[[f64; 3]],
    axis: Axis,
    direction: AxisDirection,
) -> Result<IndexingMap, ComplexError> {
    let vertices = complex.vertex_ids();
    for &v in &vertices {
        if v >= coords.len() {
            return Err(ComplexError::MissingCoordinate {
                vertex: v,
                got: coords.len(),
            });
        }
    }
    let mut by_coord = vertices.clone();
    let c = axis.index();
    by_coord.sort_by(|&a, &b| {
        let (ca, cb) = (coords[a][c], coords[b][c]);
        let ord = ca.partial_cmp(&cb).expect("non-finite coordinate");
        match direction {
            AxisDirection::Increasing => ord.then(a.cmp(&b)),
            AxisDirection::Decreasing => ord.reverse().then(a.cmp(&b)),
        }
    });
    let max_vertex = vertices.iter().copied().max().unwrap_or(0);
    let mut label = vec![0usize; max_vertex + 1];
    for (rank, &v) in by_coord.iter().enumerate() {
        label[v] = rank;
    }
    // Descending label list per simplex, then lexicographic rank.
    let mut keyed: Vec<(Vec<usize>, SimplexId)> = complex
        .ids()
        .map(|s| {
            let mut labels: Vec<usize> = complex.vertices_of(s).iter().map(|&v| label[v]).collect();
            labels.sort_unstable_by(|a, b| b.cmp(a));
            (labels, s)
        })
        .collect();
    keyed.sort();
    let mut values = vec![0.0; complex.len()];
    for (rank, (_, s)) in keyed.iter().enumerate() {
        values[s.index()] = rank as f64;
    }
    IndexingMap::from_values(complex, values)
}

/// Union-find with path compression and union by size.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}
