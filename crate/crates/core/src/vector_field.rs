//! Discrete vector fields: matchings of simplices with a cofacet, the
//! gradient field of a Morse function, acyclicity, and the connection
//! relation between simplices through gradient paths.

use crate::complex::{SimplexId, SimplexSet, SimplicialComplex};
use crate::filtration::AdmissibleFunction;
use crate::mdm::{verify_mdm, MdmError, MdmFunction};
use std::cmp::Ordering;
use std::collections::VecDeque;
use thiserror::Error;

/// Errors from building or validating a field.
#[derive(Debug, Error, PartialEq)]
pub enum FieldError {
    #[error("field covers {field} simplices, complex has {complex}")]
    SizeMismatch { field: usize, complex: usize },
    #[error("{coface} is not a cofacet of {face}")]
    NotACofacet { face: SimplexId, coface: SimplexId },
    #[error("simplex {0} appears in more than one pair")]
    Reused(SimplexId),
    #[error("simplex {0} is neither paired nor critical")]
    Unclassified(SimplexId),
    #[error("simplex {0} is marked critical but belongs to a pair")]
    CriticalButPaired(SimplexId),
}

/// A gradient path that closes on itself, returned as the witness when
/// acyclicity fails. The simplices alternate between the lower and upper
/// member of consecutive pairs; the last entry repeats the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPath {
    pub simplices: Vec<SimplexId>,
}

/// A discrete vector field on a complex: a partial matching of simplices
/// with one of their cofacets, with the unmatched simplices critical.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteVectorField {
    pair_up: Vec<Option<SimplexId>>,
    pair_down: Vec<Option<SimplexId>>,
    critical: Vec<bool>,
}

impl DiscreteVectorField {
    /// Builds a field from the upward pairs `(face, cofacet)`. Every
    /// simplex of the complex not appearing in a pair becomes critical.
    pub fn from_pairs(
        complex: &SimplicialComplex,
        pairs: &[(SimplexId, SimplexId)],
    ) -> Result<Self, FieldError> {
        let n = complex.len();
        let mut field = Self {
            pair_up: vec![None; n],
            pair_down: vec![None; n],
            critical: vec![true; n],
        };
        for &(a, b) in pairs {
            if !complex.facets_of(b).contains(&a) {
                return Err(FieldError::NotACofacet { face: a, coface: b });
            }
            for s in [a, b] {
                if !field.critical[s.index()] {
                    return Err(FieldError::Reused(s));
                }
                field.critical[s.index()] = false;
            }
            field.pair_up[a.index()] = Some(b);
            field.pair_down[b.index()] = Some(a);
        }
        Ok(field)
    }

    pub(crate) fn from_raw(
        pair_up: Vec<Option<SimplexId>>,
        pair_down: Vec<Option<SimplexId>>,
        critical: Vec<bool>,
    ) -> Self {
        Self {
            pair_up,
            pair_down,
            critical,
        }
    }

    /// Number of simplices covered.
    pub fn len(&self) -> usize {
        self.critical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.critical.is_empty()
    }

    /// The cofacet this simplex is matched with, if it is the lower member
    /// of a pair.
    pub fn pair_up(&self, s: SimplexId) -> Option<SimplexId> {
        self.pair_up[s.index()]
    }

    /// The facet this simplex is matched with, if it is the upper member
    /// of a pair.
    pub fn pair_down(&self, s: SimplexId) -> Option<SimplexId> {
        self.pair_down[s.index()]
    }

    /// The simplex this one is matched with, in either direction.
    pub fn partner(&self, s: SimplexId) -> Option<SimplexId> {
        self.pair_up[s.index()].or(self.pair_down[s.index()])
    }

    pub fn is_critical(&self, s: SimplexId) -> bool {
        self.critical[s.index()]
    }

    /// All upward pairs `(face, cofacet)`, ordered by the face.
    pub fn pairs(&self) -> impl Iterator<Item = (SimplexId, SimplexId)> + '_ {
        self.pair_up
            .iter()
            .enumerate()
            .filter_map(|(i, up)| up.map(|b| (SimplexId(i), b)))
    }

    /// The set of critical simplices.
    pub fn critical_simplices(&self) -> SimplexSet {
        self.critical
            .iter()
            .enumerate()
            .filter_map(|(i, &c)| c.then_some(SimplexId(i)))
            .collect()
    }

    /// Number of critical simplices in each dimension, up to the dimension
    /// of the complex.
    pub fn morse_counts(&self, complex: &SimplicialComplex) -> Vec<usize> {
        let mut counts = vec![0; complex.dim().map_or(0, |d| d + 1)];
        for s in complex.ids() {
            if self.critical[s.index()] {
                counts[complex.dim_of(s)] += 1;
            }
        }
        counts
    }

    /// Re-checks the structural invariants against a complex: sizes agree,
    /// every pair joins a facet to a cofacet, the two directions mirror
    /// each other, no simplex sits in two pairs, and the critical flags
    /// mark exactly the unpaired simplices.
    pub fn validate(&self, complex: &SimplicialComplex) -> Result<(), FieldError> {
        if self.len() != complex.len() {
            return Err(FieldError::SizeMismatch {
                field: self.len(),
                complex: complex.len(),
            });
        }
        for s in complex.ids() {
            let up = self.pair_up[s.index()];
            let down = self.pair_down[s.index()];
            if let Some(b) = up {
                if !complex.facets_of(b).contains(&s) {
                    return Err(FieldError::NotACofacet { face: s, coface: b });
                }
                if self.pair_down[b.index()] != Some(s) {
                    return Err(FieldError::Reused(b));
                }
            }
            if let Some(a) = down {
                if self.pair_up[a.index()] != Some(s) {
                    return Err(FieldError::Reused(a));
                }
            }
            if up.is_some() && down.is_some() {
                return Err(FieldError::Reused(s));
            }
            match (self.critical[s.index()], up.is_some() || down.is_some()) {
                (true, true) => return Err(FieldError::CriticalButPaired(s)),
                (false, false) => return Err(FieldError::Unclassified(s)),
                _ => {}
            }
        }
        Ok(())
    }

    /// Checks that no nontrivial gradient path closes on itself. On
    /// failure returns a closed path as witness.
    ///
    /// A gradient path moves from a paired-up simplex to its cofacet, then
    /// down to any other facet of that cofacet, and so on; a cycle can only
    /// run through paired-up simplices of a single dimension.
    pub fn is_acyclic(&self, complex: &SimplicialComplex) -> Result<(), VPath> {
        // Iterative depth-first search over lower pair members, three
        // colors: 0 unseen, 1 on the current path, 2 finished.
        let mut color = vec![0u8; self.len()];
        let mut path: Vec<SimplexId> = Vec::new();
        for start in complex.ids() {
            if self.pair_up[start.index()].is_none() || color[start.index()] != 0 {
                continue;
            }
            // Stack of (simplex, next successor position to try).
            let mut stack: Vec<(SimplexId, usize)> = vec![(start, 0)];
            color[start.index()] = 1;
            path.push(start);
            while let Some(&mut (s, ref mut next)) = stack.last_mut() {
                let up = self.pair_up[s.index()].expect("only paired-up simplices enter");
                let successors: Vec<SimplexId> = complex
                    .facets_of(up)
                    .iter()
                    .copied()
                    .filter(|&a| a != s && self.pair_up[a.index()].is_some())
                    .collect();
                if *next < successors.len() {
                    let a = successors[*next];
                    *next += 1;
                    match color[a.index()] {
                        0 => {
                            color[a.index()] = 1;
                            path.push(a);
                            stack.push((a, 0));
                        }
                        1 => {
                            // Closed path: from the first occurrence of
                            // `a` on the current path back around.
                            let at = path
                                .iter()
                                .position(|&x| x == a)
                                .expect("gray lies on path");
                            let mut simplices = Vec::new();
                            for &x in &path[at..] {
                                simplices.push(x);
                                simplices.push(self.pair_up[x.index()].unwrap());
                            }
                            simplices.push(a);
                            return Err(VPath { simplices });
                        }
                        _ => {}
                    }
                } else {
                    color[s.index()] = 2;
                    path.pop();
                    stack.pop();
                }
            }
        }
        Ok(())
    }

    /// Whether the field only pairs simplices with equal function values.
    pub fn is_compatible(&self, f: &AdmissibleFunction) -> bool {
        self.compatibility_violation(f).is_none()
    }

    /// The first pair whose members carry different function values.
    pub fn compatibility_violation(
        &self,
        f: &AdmissibleFunction,
    ) -> Option<(SimplexId, SimplexId)> {
        self.pairs().find(|&(a, b)| f.value(a) != f.value(b))
    }
}

/// Reads the gradient field off a verified Morse function: each simplex is
/// matched with its unique head cofacet (one whose value is below-or-equal)
/// when that head exists; simplices with empty head and tail are critical.
pub fn gradient_of(
    complex: &SimplicialComplex,
    g: &MdmFunction,
) -> Result<DiscreteVectorField, MdmError> {
    let report = verify_mdm(complex, g);
    if let Some(first) = report.violations.first() {
        return Err(MdmError::NotMdm {
            violations: report.violations.len(),
            first: first.simplex,
        });
    }
    let n = complex.len();
    let mut pair_up = vec![None; n];
    let mut pair_down = vec![None; n];
    let mut critical = vec![false; n];
    for s in complex.ids() {
        let head = complex
            .cofacets_of(s)
            .iter()
            .copied()
            .find(|&t| matches!(g.partial_cmp(t, s), Some(Ordering::Less | Ordering::Equal)));
        if let Some(t) = head {
            pair_up[s.index()] = Some(t);
            pair_down[t.index()] = Some(s);
        }
    }
    for s in complex.ids() {
        critical[s.index()] = pair_up[s.index()].is_none() && pair_down[s.index()].is_none();
    }
    let field = DiscreteVectorField::from_raw(pair_up, pair_down, critical);
    debug_assert!(field.validate(complex).is_ok());
    Ok(field)
}

/// Whether there is a connection from `from` to `to`: either `to` is a
/// face of `from`, or some gradient path starting at a face of `from`
/// reaches a simplex having `to` as a face.
pub fn connection(
    complex: &SimplicialComplex,
    field: &DiscreteVectorField,
    from: SimplexId,
    to: SimplexId,
) -> bool {
    if complex.is_face_of(to, from) {
        return true;
    }
    // Breadth-first search over lower pair members reachable from the
    // faces of `from`; both members of each traversed pair are checked
    // for having `to` as a face.
    let mut visited = vec![false; complex.len()];
    let mut queue: VecDeque<SimplexId> = VecDeque::new();
    for a in complex.closure(&SimplexSet::from_iter([from])).iter() {
        if field.pair_up(a).is_some() && !visited[a.index()] {
            visited[a.index()] = true;
            queue.push_back(a);
        }
    }
    while let Some(a) = queue.pop_front() {
        let b = field.pair_up(a).expect("queue holds paired-up simplices");
        if complex.is_face_of(to, b) {
            return true;
        }
        for &a2 in complex.facets_of(b) {
            if a2 == a {
                continue;
            }
            if complex.is_face_of(to, a2) {
                return true;
            }
            if field.pair_up(a2).is_some() && !visited[a2.index()] {
                visited[a2.index()] = true;
                queue.push_back(a2);
            }
        }
    }
    false
}
