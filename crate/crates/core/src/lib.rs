//! Multiparameter discrete Morse theory on finite simplicial complexes.
//!
//! Starting from a multifiltering function `f: K -> R^k` (componentwise
//! monotone along the face relation), this crate constructs a discrete Morse
//! function `g` within any `eps` of `f`, together with a compatible acyclic
//! gradient vector field, by processing the level sets of `f` in
//! lexicographic order and pairing simplices greedily inside each level.
//!
//! On top of that engine the crate provides:
//!
//! * the Alexandrov-topology operators (closure, star, interior, boundary,
//!   exit set) and connected components on subsets of a complex
//!   ([`complex`]);
//! * multifiltering functions, max-extensions of vertex maps, Rips diameter
//!   filtrations and level-set decompositions ([`filtration`]);
//! * discrete vector fields with validation, acyclicity certificates and
//!   compatibility checks ([`vector_field`]);
//! * simplicial homology over the integers (Smith normal form) and over
//!   GF(2) (independent bitset elimination), including relative homology of
//!   face-convex subsets and per-level Morse count checks ([`homology`]);
//! * discrete Pareto sets and critical components of multiparameter
//!   gradient fields ([`pareto`]);
//! * OFF/CSV input, legacy-VTK annotated output and a JSON analysis report
//!   ([`io`]).
//!
//! The construction follows the generate/expand/compute-value scheme in
//! which each level set is swept with two priority queues ordered by an
//! indexing map; see [`mdm::generate_mdm`] for the entry point.

pub mod complex;
pub mod filtration;
pub mod fixtures;
pub mod homology;
pub mod io;
pub mod mdm;
pub mod pareto;
pub mod vector_field;

pub use complex::{
    axis_indexing_map, Axis, AxisDirection, ComplexError, IndexingMap, SimplexId, SimplexSet,
    SimplicialComplex,
};
pub use filtration::{
    check_admissible, combine, level_sets, max_extension, rips_diameter_map, AdmissibleFunction,
    FiltrationError, LevelSetDecomposition,
};
pub use homology::{
    betti_numbers, boundary_matrix, morse_count_check, relative_homology, smith_normal_form,
    Gf2Matrix, HomologyError, HomologySummary, IntMatrix, MorseCountTable, Ring, SnfResult,
};
pub use mdm::{
    compute_delta, generate_mdm, verify_mdm, GenerationTrace, MdmError, MdmExpansion, MdmFunction,
    MdmReport, MdmValue, ProcessedRole,
};
pub use pareto::{
    critical_components, pareto_set, primary_simplex, CriticalComponents, ParetoComponent,
    ParetoSet, Relation,
};
pub use vector_field::{connection, gradient_of, DiscreteVectorField, FieldError, VPath};
