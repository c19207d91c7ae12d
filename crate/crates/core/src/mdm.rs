//! Construction and verification of multiparameter discrete Morse functions.
//!
//! Given an admissible `f: K -> R^k`, an indexing map and a tolerance
//! `eps`, [`generate_mdm`] produces a discrete Morse function `g` with
//! `||g - f||_inf < eps` together with its gradient vector field, by
//! sweeping the level sets of `f` in lexicographic order and, inside each
//! level, pairing each simplex with a free facet whenever possible (two
//! priority queues ordered by the indexing map decide who goes first).
//!
//! Values of `g` are kept symbolic: every value is `f(s)` plus an integer
//! multiple of a per-run offset `delta` added to the first component only.
//! `delta` is chosen so small (below `min(eps, smallest gap between
//! distinct first components) / |K|`, with fewer than `|K|` offsets ever
//! stacked) that comparing two values reduces to comparing `(base_1, bump)`
//! lexicographically in exact arithmetic; no floating-point tolerance enters
//! any comparison.

use crate::complex::{IndexingMap, SimplexId, SimplicialComplex};
use crate::filtration::{level_sets, AdmissibleFunction, LevelSetDecomposition};
use crate::vector_field::DiscreteVectorField;
use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use thiserror::Error;

/// Errors from the construction routines.
#[derive(Debug, Error, PartialEq)]
pub enum MdmError {
    #[error("eps must be a positive finite number, got {0}")]
    BadEpsilon(f64),
    #[error("the complex is empty")]
    EmptyComplex,
    #[error("function covers {f} simplices, complex has {complex}")]
    SizeMismatch { f: usize, complex: usize },
    #[error("indexing map covers {index} simplices, complex has {complex}")]
    IndexSizeMismatch { index: usize, complex: usize },
    #[error("facet {facet} of {simplex} has no value yet; levels must be expanded in order")]
    MissingFacetValue {
        simplex: SimplexId,
        facet: SimplexId,
    },
    #[error("simplex {0} was already processed")]
    AlreadyProcessed(SimplexId),
    #[error("candidate function violates the Morse conditions ({violations} violations, first at simplex {first})")]
    NotMdm { violations: usize, first: SimplexId },
}

/// A value of a constructed Morse function: `base` is the value of the
/// input function, and the first component is understood as
/// `base[0] + bump * delta` for the run's offset `delta`.
#[derive(Clone, Debug, PartialEq)]
pub struct MdmValue {
    pub base: Vec<f64>,
    pub bump: u32,
}

impl MdmValue {
    /// The floating-point vector this value stands for.
    pub fn realized(&self, delta: f64) -> Vec<f64> {
        let mut out = self.base.clone();
        out[0] += self.bump as f64 * delta;
        out
    }
}

/// A (candidate) discrete Morse function over a complex, with symbolic
/// values.
///
/// For functions built by [`generate_mdm`], `delta` satisfies
/// `|K| * delta <= min(eps, gap)` where `gap` is the smallest difference
/// between distinct first components of the input, and every bump count
/// stays below `|K|`; under those bounds the realized values compare
/// exactly as `(base_1, bump)` lexicographically, which is how all
/// comparisons here are implemented.
#[derive(Clone, Debug)]
pub struct MdmFunction {
    k: usize,
    delta: f64,
    epsilon: f64,
    base: Vec<f64>,
    bump: Vec<u32>,
}

impl MdmFunction {
    /// Wraps an admissible function as a candidate Morse function with all
    /// bumps zero (used to test whether `f` itself is already Morse).
    pub fn from_admissible(f: &AdmissibleFunction) -> Self {
        Self {
            k: f.k(),
            delta: 0.0,
            epsilon: 0.0,
            base: f.rows().to_vec(),
            bump: vec![0; f.len()],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of simplices covered.
    pub fn len(&self) -> usize {
        self.bump.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bump.is_empty()
    }

    /// The per-run offset multiplying bump counts.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// The tolerance the construction was asked to respect.
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// The symbolic value of a simplex.
    pub fn value(&self, s: SimplexId) -> MdmValue {
        MdmValue {
            base: self.base(s).to_vec(),
            bump: self.bump[s.index()],
        }
    }

    /// The input-function part of the value.
    pub fn base(&self, s: SimplexId) -> &[f64] {
        &self.base[s.index() * self.k..(s.index() + 1) * self.k]
    }

    /// Number of offsets stacked on the first component.
    pub fn bump(&self, s: SimplexId) -> u32 {
        self.bump[s.index()]
    }

    /// The floating-point value of a simplex.
    pub fn realized(&self, s: SimplexId) -> Vec<f64> {
        self.value(s).realized(self.delta)
    }

    /// Exact comparison of one component across two simplices.
    pub fn component_cmp(&self, a: SimplexId, b: SimplexId, i: usize) -> Ordering {
        if i == 0 {
            let first = self.base(a)[0]
                .partial_cmp(&self.base(b)[0])
                .expect("values are finite");
            first.then(self.bump[a.index()].cmp(&self.bump[b.index()]))
        } else {
            self.base(a)[i]
                .partial_cmp(&self.base(b)[i])
                .expect("values are finite")
        }
    }

    /// Exact equality of one component across two simplices.
    pub fn component_eq(&self, a: SimplexId, b: SimplexId, i: usize) -> bool {
        self.component_cmp(a, b, i) == Ordering::Equal
    }

    /// The componentwise partial order on values: `Some(Less)` when every
    /// component of `a` is below-or-equal and at least one is strictly
    /// below, `None` when components disagree in direction.
    pub fn partial_cmp(&self, a: SimplexId, b: SimplexId) -> Option<Ordering> {
        let mut seen_less = false;
        let mut seen_greater = false;
        for i in 0..self.k {
            match self.component_cmp(a, b, i) {
                Ordering::Less => seen_less = true,
                Ordering::Greater => seen_greater = true,
                Ordering::Equal => {}
            }
            if seen_less && seen_greater {
                return None;
            }
        }
        Some(match (seen_less, seen_greater) {
            (false, false) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (true, true) => unreachable!(),
        })
    }

    /// Whether the two simplices carry exactly equal values.
    pub fn values_equal(&self, a: SimplexId, b: SimplexId) -> bool {
        self.partial_cmp(a, b) == Some(Ordering::Equal)
    }

    /// Largest absolute difference between the realized values and a
    /// reference function, over all simplices and components.
    pub fn max_deviation(&self, f: &AdmissibleFunction) -> f64 {
        let mut worst = 0.0f64;
        for s in 0..self.len() {
            let s = SimplexId(s);
            let realized = self.realized(s);
            for (a, b) in realized.iter().zip(f.value(s)) {
                worst = worst.max((a - b).abs());
            }
        }
        worst
    }
}

/// Computes the per-run offset: `eps / |K|` when all first components are
/// equal, otherwise `min(eps, gap) / |K|` where `gap` is the smallest
/// difference between distinct first components. The gap is computed
/// exactly by sorting the distinct values.
pub fn compute_delta(
    complex: &SimplicialComplex,
    f: &AdmissibleFunction,
    eps: f64,
) -> Result<f64, MdmError> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(MdmError::BadEpsilon(eps));
    }
    if complex.is_empty() {
        return Err(MdmError::EmptyComplex);
    }
    if f.len() != complex.len() {
        return Err(MdmError::SizeMismatch {
            f: f.len(),
            complex: complex.len(),
        });
    }
    let mut firsts: Vec<f64> = complex.ids().map(|s| f.value(s)[0]).collect();
    firsts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    firsts.dedup();
    let mut bound = eps;
    for w in firsts.windows(2) {
        bound = bound.min(w[1] - w[0]);
    }
    Ok(bound / complex.len() as f64)
}

/// How a simplex was processed during generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProcessedRole {
    /// Left unpaired; a critical simplex of the output field.
    Critical,
    /// Paired downward: the recorded partner is its facet.
    PairedWithFacet(SimplexId),
    /// Paired upward: the recorded partner is its cofacet.
    PairedWithCofacet(SimplexId),
}

/// Per-level summary recorded during generation.
#[derive(Clone, Debug)]
pub struct LevelStats {
    pub value: Vec<f64>,
    pub size: usize,
    pub paired: usize,
    pub critical: usize,
}

/// The processing log of one generation run. Each simplex appears exactly
/// once in `order`; members of a pair appear consecutively, facet first.
#[derive(Clone, Debug, Default)]
pub struct GenerationTrace {
    pub order: Vec<(SimplexId, ProcessedRole)>,
    pub level_stats: Vec<LevelStats>,
}

impl GenerationTrace {
    /// Position of each simplex in the processing order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.order.len()];
        for (at, &(s, _)) in self.order.iter().enumerate() {
            pos[s.index()] = at;
        }
        pos
    }
}

/// In-progress state of a generation run: values and pairings settled so
/// far, plus the processed flags the expansion of the next level relies on.
///
/// Levels must be expanded in the order given by the decomposition; the
/// expansion of a level assumes every earlier level is done.
pub struct MdmExpansion<'a> {
    complex: &'a SimplicialComplex,
    f: &'a AdmissibleFunction,
    delta: f64,
    epsilon: f64,
    base: Vec<f64>,
    bump: Vec<u32>,
    has_value: Vec<bool>,
    pair_up: Vec<Option<SimplexId>>,
    pair_down: Vec<Option<SimplexId>>,
    critical: Vec<bool>,
    processed: Vec<bool>,
    trace: GenerationTrace,
    // Scratch, reused across levels.
    unprocessed_facets: Vec<u32>,
    queued: Vec<bool>,
}

impl<'a> MdmExpansion<'a> {
    pub fn new(
        complex: &'a SimplicialComplex,
        f: &'a AdmissibleFunction,
        delta: f64,
        epsilon: f64,
    ) -> Self {
        let n = complex.len();
        Self {
            complex,
            f,
            delta,
            epsilon,
            base: vec![0.0; n * f.k()],
            bump: vec![0; n],
            has_value: vec![false; n],
            pair_up: vec![None; n],
            pair_down: vec![None; n],
            critical: vec![false; n],
            processed: vec![false; n],
            trace: GenerationTrace::default(),
            unprocessed_facets: vec![0; n],
            queued: vec![false; n],
        }
    }

    /// The value computation for one simplex: the first component is the
    /// maximum of `f_1(s)` and the settled first components of the facets
    /// other than the optional pairing partner `t`; the other components
    /// are those of `f(s)`; and whenever the result collides with the value
    /// of one of those facets, one more offset is stacked on top.
    pub fn compute_g(&self, s: SimplexId, t: Option<SimplexId>) -> Result<MdmValue, MdmError> {
        let fval = self.f.value(s);
        if self.complex.dim_of(s) == 0 {
            return Ok(MdmValue {
                base: fval.to_vec(),
                bump: 0,
            });
        }
        // Pick the lexicographically largest (first component, bump) among
        // f(s) and the facet values; exactness of this comparison is the
        // point of the symbolic representation.
        let mut best = (fval[0], 0u32);
        for &a in self.complex.facets_of(s) {
            if Some(a) == t {
                continue;
            }
            if !self.has_value[a.index()] {
                return Err(MdmError::MissingFacetValue {
                    simplex: s,
                    facet: a,
                });
            }
            let cand = (self.base[a.index() * self.f.k()], self.bump[a.index()]);
            if cand.0 > best.0 || (cand.0 == best.0 && cand.1 > best.1) {
                best = cand;
            }
        }
        let mut base = fval.to_vec();
        base[0] = best.0;
        let mut w = MdmValue { base, bump: best.1 };
        let collides = self.complex.facets_of(s).iter().any(|&a| {
            Some(a) != t
                && self.bump[a.index()] == w.bump
                && self.facet_base(a) == w.base.as_slice()
        });
        if collides {
            w.bump += 1;
        }
        Ok(w)
    }

    fn facet_base(&self, a: SimplexId) -> &[f64] {
        let k = self.f.k();
        &self.base[a.index() * k..(a.index() + 1) * k]
    }

    fn set_value(&mut self, s: SimplexId, w: &MdmValue) {
        let k = self.f.k();
        self.base[s.index() * k..(s.index() + 1) * k].copy_from_slice(&w.base);
        self.bump[s.index()] = w.bump;
        self.has_value[s.index()] = true;
    }

    fn mark_processed(
        &mut self,
        s: SimplexId,
        role: ProcessedRole,
        levels: &LevelSetDecomposition,
        level_idx: usize,
    ) -> Result<(), MdmError> {
        if self.processed[s.index()] {
            return Err(MdmError::AlreadyProcessed(s));
        }
        self.processed[s.index()] = true;
        self.trace.order.push((s, role));
        for &b in self.complex.cofacets_of(s) {
            if levels.level_of(b) == level_idx {
                self.unprocessed_facets[b.index()] -= 1;
            }
        }
        Ok(())
    }

    /// Processes one level set completely: every member ends up paired or
    /// critical, with its value settled.
    ///
    /// Two min-queues ordered by the indexing map drive the sweep: one for
    /// members whose facets inside the level are all settled (candidates
    /// for critical), one for members with exactly one free facet
    /// (candidates for pairing). Pairing a member can free or enqueue its
    /// cofacets; a simplex already queued or processed is never re-queued.
    pub fn expand_level(
        &mut self,
        levels: &LevelSetDecomposition,
        level_idx: usize,
        index: &IndexingMap,
    ) -> Result<(), MdmError> {
        let level = &levels.levels()[level_idx];
        let mut pq_zero: BinaryHeap<Reverse<(usize, SimplexId)>> = BinaryHeap::new();
        let mut pq_one: BinaryHeap<Reverse<(usize, SimplexId)>> = BinaryHeap::new();
        for s in level.members.iter() {
            let count = self
                .complex
                .facets_of(s)
                .iter()
                .filter(|&&a| levels.level_of(a) == level_idx && !self.processed[a.index()])
                .count() as u32;
            self.unprocessed_facets[s.index()] = count;
            self.queued[s.index()] = false;
            match count {
                0 => pq_zero.push(Reverse((index.rank(s), s))),
                1 => {
                    pq_one.push(Reverse((index.rank(s), s)));
                    self.queued[s.index()] = true;
                }
                _ => {}
            }
        }
        let paired_before = self.trace.order.len();
        let mut critical_count = 0usize;
        loop {
            while let Some(Reverse((_, s))) = pq_one.pop() {
                if self.unprocessed_facets[s.index()] == 0 {
                    // All facets settled in the meantime: now a candidate
                    // for critical instead.
                    pq_zero.push(Reverse((index.rank(s), s)));
                    continue;
                }
                let t = self
                    .complex
                    .facets_of(s)
                    .iter()
                    .copied()
                    .find(|&a| levels.level_of(a) == level_idx && !self.processed[a.index()])
                    .expect("counter says one unprocessed facet remains");
                let w = self.compute_g(s, Some(t))?;
                self.set_value(s, &w);
                self.set_value(t, &w);
                self.pair_up[t.index()] = Some(s);
                self.pair_down[s.index()] = Some(t);
                self.mark_processed(t, ProcessedRole::PairedWithCofacet(s), levels, level_idx)?;
                self.mark_processed(s, ProcessedRole::PairedWithFacet(t), levels, level_idx)?;
                self.add_cofacets(s, levels, level_idx, index, &mut pq_one);
                self.add_cofacets(t, levels, level_idx, index, &mut pq_one);
            }
            match pq_zero.pop() {
                Some(Reverse((_, s))) => {
                    if !self.processed[s.index()] {
                        let w = self.compute_g(s, None)?;
                        self.set_value(s, &w);
                        self.critical[s.index()] = true;
                        self.mark_processed(s, ProcessedRole::Critical, levels, level_idx)?;
                        critical_count += 1;
                        self.add_cofacets(s, levels, level_idx, index, &mut pq_one);
                    }
                }
                None => {
                    if pq_one.is_empty() {
                        break;
                    }
                }
            }
        }
        let processed_here = self.trace.order.len() - paired_before;
        debug_assert_eq!(processed_here, level.members.len());
        self.trace.level_stats.push(LevelStats {
            value: level.value.clone(),
            size: level.members.len(),
            paired: processed_here - critical_count,
            critical: critical_count,
        });
        Ok(())
    }

    fn add_cofacets(
        &mut self,
        s: SimplexId,
        levels: &LevelSetDecomposition,
        level_idx: usize,
        index: &IndexingMap,
        pq_one: &mut BinaryHeap<Reverse<(usize, SimplexId)>>,
    ) {
        for &b in self.complex.cofacets_of(s) {
            if levels.level_of(b) == level_idx
                && !self.processed[b.index()]
                && !self.queued[b.index()]
                && self.unprocessed_facets[b.index()] == 1
            {
                pq_one.push(Reverse((index.rank(b), b)));
                self.queued[b.index()] = true;
            }
        }
    }

    /// Finishes the run, returning the function, its gradient field and the
    /// trace. All levels must have been expanded.
    pub fn finish(self) -> Result<(MdmFunction, DiscreteVectorField, GenerationTrace), MdmError> {
        if let Some(unseen) = self.processed.iter().position(|&p| !p) {
            return Err(MdmError::MissingFacetValue {
                simplex: SimplexId(unseen),
                facet: SimplexId(unseen),
            });
        }
        let g = MdmFunction {
            k: self.f.k(),
            delta: self.delta,
            epsilon: self.epsilon,
            base: self.base,
            bump: self.bump,
        };
        let field = DiscreteVectorField::from_raw(self.pair_up, self.pair_down, self.critical);
        debug_assert!(field.validate(self.complex).is_ok());
        Ok((g, field, self.trace))
    }
}

/// Runs the whole construction: computes the offset, sweeps all level sets
/// in lexicographic order, and returns the Morse function, its gradient
/// field and the processing trace.
pub fn generate_mdm(
    complex: &SimplicialComplex,
    f: &AdmissibleFunction,
    index: &IndexingMap,
    eps: f64,
) -> Result<(MdmFunction, DiscreteVectorField, GenerationTrace), MdmError> {
    if index.len() != complex.len() {
        return Err(MdmError::IndexSizeMismatch {
            index: index.len(),
            complex: complex.len(),
        });
    }
    let delta = compute_delta(complex, f, eps)?;
    let levels = level_sets(complex, f);
    let mut expansion = MdmExpansion::new(complex, f, delta, eps);
    for level_idx in 0..levels.len() {
        expansion.expand_level(&levels, level_idx, index)?;
    }
    expansion.finish()
}

/// Which of the four Morse conditions a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdmCondition {
    /// More than one cofacet with a value below-or-equal.
    HeadTooLarge,
    /// More than one facet with a value above-or-equal.
    TailTooLarge,
    /// A cofacet whose value is incomparable.
    CofacetIncomparable,
    /// A facet whose value is incomparable.
    FacetIncomparable,
}

/// One violation found by [`verify_mdm`].
#[derive(Clone, Debug)]
pub struct MdmViolation {
    pub simplex: SimplexId,
    pub condition: MdmCondition,
    /// The facets/cofacets witnessing the violation.
    pub witnesses: Vec<SimplexId>,
}

/// Outcome of the four-condition check.
#[derive(Clone, Debug, Default)]
pub struct MdmReport {
    pub violations: Vec<MdmViolation>,
}

impl MdmReport {
    pub fn is_mdm(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the four conditions defining a multiparameter discrete Morse
/// function at every simplex: at most one head cofacet, at most one tail
/// facet, and comparability of the value with every facet and cofacet
/// value. Returns all violations.
pub fn verify_mdm(complex: &SimplicialComplex, g: &MdmFunction) -> MdmReport {
    assert_eq!(g.len(), complex.len(), "function and complex sizes differ");
    let mut report = MdmReport::default();
    for s in complex.ids() {
        let mut head = Vec::new();
        for &t in complex.cofacets_of(s) {
            match g.partial_cmp(t, s) {
                Some(Ordering::Less) | Some(Ordering::Equal) => head.push(t),
                Some(Ordering::Greater) => {}
                None => report.violations.push(MdmViolation {
                    simplex: s,
                    condition: MdmCondition::CofacetIncomparable,
                    witnesses: vec![t],
                }),
            }
        }
        if head.len() > 1 {
            report.violations.push(MdmViolation {
                simplex: s,
                condition: MdmCondition::HeadTooLarge,
                witnesses: head,
            });
        }
        let mut tail = Vec::new();
        for &a in complex.facets_of(s) {
            match g.partial_cmp(a, s) {
                Some(Ordering::Greater) | Some(Ordering::Equal) => tail.push(a),
                Some(Ordering::Less) => {}
                None => report.violations.push(MdmViolation {
                    simplex: s,
                    condition: MdmCondition::FacetIncomparable,
                    witnesses: vec![a],
                }),
            }
        }
        if tail.len() > 1 {
            report.violations.push(MdmViolation {
                simplex: s,
                condition: MdmCondition::TailTooLarge,
                witnesses: tail,
            });
        }
    }
    report
}
