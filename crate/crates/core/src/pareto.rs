//! Discrete Pareto sets and critical components.
//!
//! A fiber of the level-set decomposition splits into connected
//! components; a component is Pareto-critical when the relative homology
//! of (its closure, closure minus component) is nonzero. The Pareto set
//! is the union of the Pareto-critical components, reported together with
//! its own connected components.
//!
//! Critical simplices of a gradient field are grouped into classes by
//! three equivalence relations, each the transitive closure of "some
//! value component agrees and the two simplices touch" for different
//! notions of value (the Morse function or the input function) and of
//! touching (gradient connections or face contact inside fibers).

use crate::complex::{SimplexId, SimplexSet, SimplicialComplex, UnionFind};
use crate::filtration::{level_sets, AdmissibleFunction, LevelSetDecomposition};
use crate::homology::{relative_homology, HomologySummary, Ring};
use crate::mdm::MdmFunction;
use crate::vector_field::{connection, DiscreteVectorField};

/// One Pareto-critical fiber component.
#[derive(Clone, Debug)]
pub struct ParetoComponent {
    /// Index of the level in the decomposition of the function.
    pub level: usize,
    /// The level value.
    pub value: Vec<f64>,
    /// The simplices of the component.
    pub members: SimplexSet,
    /// Its nonzero relative homology.
    pub homology: HomologySummary,
}

/// The discrete Pareto set of a function.
#[derive(Clone, Debug)]
pub struct ParetoSet {
    /// The Pareto-critical fiber components, in level order.
    pub fiber_components: Vec<ParetoComponent>,
    /// The union of all Pareto-critical simplices.
    pub simplices: SimplexSet,
    /// Connected components of that union, ordered by smallest member.
    pub components: Vec<SimplexSet>,
}

impl ParetoSet {
    /// Number of connected components of the Pareto set.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Whether a simplex is Pareto-critical.
    pub fn contains(&self, s: SimplexId) -> bool {
        self.simplices.contains(s)
    }

    /// Index of the connected component containing a simplex, if any.
    pub fn component_of(&self, s: SimplexId) -> Option<usize> {
        self.components.iter().position(|c| c.contains(s))
    }

    /// The Pareto-critical values: the distinct function values whose
    /// fiber contributes to the Pareto set, in level order.
    pub fn critical_values(&self) -> Vec<Vec<f64>> {
        let mut values: Vec<Vec<f64>> = Vec::new();
        for c in &self.fiber_components {
            if values.last() != Some(&c.value) {
                values.push(c.value.clone());
            }
        }
        values
    }
}

/// Computes the Pareto set of an admissible function: every fiber
/// component whose relative homology (with the requested coefficients) is
/// nonzero contributes its simplices.
pub fn pareto_set(complex: &SimplicialComplex, f: &AdmissibleFunction, ring: Ring) -> ParetoSet {
    let levels = level_sets(complex, f);
    let mut fiber_components = Vec::new();
    let mut simplices = SimplexSet::new();
    for (li, level) in levels.levels().iter().enumerate() {
        for members in complex.connected_components(&level.members) {
            let homology = relative_homology(complex, &members, ring)
                .expect("fiber components are face-convex");
            if homology.is_nonzero() {
                simplices.extend(members.iter());
                fiber_components.push(ParetoComponent {
                    level: li,
                    value: level.value.clone(),
                    members,
                    homology,
                });
            }
        }
    }
    let components = complex.connected_components(&simplices);
    ParetoSet {
        fiber_components,
        simplices,
        components,
    }
}

/// The primary simplex of a level, if one exists: the member that is a
/// face of every member, so the fiber is exactly the part of its star at
/// that value. At most one member can qualify.
pub fn primary_simplex(
    complex: &SimplicialComplex,
    levels: &LevelSetDecomposition,
    level: usize,
) -> Option<SimplexId> {
    let members = &levels.levels()[level].members;
    members
        .iter()
        .find(|&s| members.iter().all(|t| complex.is_face_of(s, t)))
}

/// The three relations used to group critical simplices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Some component of the Morse function values agrees (the first one
    /// compared with its symbolic offset) and the simplices are joined by
    /// a face contact or a gradient path.
    SimG,
    /// Some component of the input function values agrees and the
    /// simplices are joined by a face contact or a gradient path.
    SimGPrime,
    /// Some component of the input function values agrees and the fiber
    /// components of the two simplices contain a pair of simplices in
    /// face contact.
    SimF,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Relation::SimG => write!(f, "g"),
            Relation::SimGPrime => write!(f, "g-prime"),
            Relation::SimF => write!(f, "f"),
        }
    }
}

/// The classes of critical simplices under the transitive closure of one
/// of the relations.
#[derive(Clone, Debug)]
pub struct CriticalComponents {
    pub relation: Relation,
    /// Classes ordered by their smallest member.
    pub classes: Vec<SimplexSet>,
}

impl CriticalComponents {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing a critical simplex, if any.
    pub fn class_of(&self, s: SimplexId) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(s))
    }
}

/// Groups the critical simplices of a field into classes: the chosen base
/// relation is evaluated on every pair and closed transitively.
pub fn critical_components(
    complex: &SimplicialComplex,
    g: &MdmFunction,
    f: &AdmissibleFunction,
    field: &DiscreteVectorField,
    relation: Relation,
) -> CriticalComponents {
    let criticals: Vec<SimplexId> = field.critical_simplices().iter().collect();
    // For the fiber-based relation: the connected component of each
    // critical simplex inside its own fiber.
    let fibers: Option<Vec<SimplexSet>> = (relation == Relation::SimF).then(|| {
        let levels = level_sets(complex, f);
        let mut out: Vec<Option<SimplexSet>> = vec![None; criticals.len()];
        for level in levels.levels() {
            for comp in complex.connected_components(&level.members) {
                for (i, &s) in criticals.iter().enumerate() {
                    if comp.contains(s) {
                        out[i] = Some(comp.clone());
                    }
                }
            }
        }
        out.into_iter()
            .map(|c| c.expect("every simplex lies in some fiber component"))
            .collect()
    });

    let values_share_component = |a: SimplexId, b: SimplexId| -> bool {
        match relation {
            Relation::SimG => (0..g.k()).any(|i| g.component_eq(a, b, i)),
            Relation::SimGPrime | Relation::SimF => {
                f.value(a).iter().zip(f.value(b)).any(|(x, y)| x == y)
            }
        }
    };
    let touches = |i: usize, j: usize| -> bool {
        let (a, b) = (criticals[i], criticals[j]);
        match relation {
            Relation::SimG | Relation::SimGPrime => {
                connection(complex, field, a, b) || connection(complex, field, b, a)
            }
            Relation::SimF => {
                let ca = &fibers.as_ref().unwrap()[i];
                let cb = &fibers.as_ref().unwrap()[j];
                ca.iter().any(|x| {
                    cb.iter()
                        .any(|y| complex.is_face_of(x, y) || complex.is_face_of(y, x))
                })
            }
        }
    };

    let mut uf = UnionFind::new(criticals.len());
    for i in 0..criticals.len() {
        for j in i + 1..criticals.len() {
            if values_share_component(criticals[i], criticals[j]) && touches(i, j) {
                uf.union(i, j);
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, SimplexSet> = Default::default();
    for (i, &s) in criticals.iter().enumerate() {
        let root = uf.find(i);
        by_root.entry(root).or_default().insert(s);
    }
    let mut classes: Vec<SimplexSet> = by_root.into_values().collect();
    classes.sort_by_key(|c| c.iter().next());
    CriticalComponents { relation, classes }
}
