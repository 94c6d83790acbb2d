//! Exact-rational computations in the cone of Betti diagrams and the cone
//! of cohomology tables.
//!
//! The crate implements, over arbitrary-precision rationals with no
//! tolerances anywhere:
//!
//! - [`diagrams`]: Betti diagrams, degree sequences, windows, pure
//!   diagrams and the Herzog-Kuhl residuals;
//! - [`decomposition`]: the greedy Boij-Soderberg decomposition of a
//!   diagram into a positive chain combination of pure diagrams
//!   (Cohen-Macaulay and general modes), a brute-force chain-enumeration
//!   membership oracle, and integrality reporting;
//! - [`fan`]: maximal chains of degree-sequence intervals, exterior facet
//!   classification, the upper/lower facet-equation diagrams and the
//!   pairing between diagrams and cohomology tables;
//! - [`cohomology`]: cohomology tables on a finite twist range, root
//!   sequences, supernatural tables, corner positions and the corner
//!   peeling decomposition;
//! - [`constructions`]: closed-form ranks of the equivariant and
//!   generic-matrix pure resolutions via Weyl's dimension formula.
//!
//! All types are immutable in use and all operations are pure functions,
//! safe to call from any number of threads.

pub mod cohomology;
pub mod constructions;
pub mod decomposition;
pub mod diagrams;
pub mod error;
pub mod fan;
pub mod linalg;
pub mod rational;

#[cfg(test)]
pub(crate) mod testutil;

pub use cohomology::{
    corner_peel_coefficient, corner_positions, decompose_cohomology, dim_table,
    gamma_facet_functional, root_sequence_of, supernatural_table, CohomologyTable, Normalization,
    RootSequence, TableDecomposition, TableTerm,
};
pub use constructions::{
    binomial, conjugate, equivariant_betti, generic_matrix_betti, schur_dimension, Partition,
};
pub use decomposition::{
    decompose_betti, integrality_report, max_peel_coefficient, oracle_membership,
    verify_decomposition, DecomposeMode, Decomposition, DecompositionTerm, IntegralityReport,
    DEFAULT_CHAIN_CAP,
};
pub use diagrams::{
    compare_deg, hk_residual, lower_bound_sequence, pure_diagram, BettiDiagram, DegOrder,
    DegreeSequence, PureDiagram, Window,
};
pub use error::{Error, Result};
pub use fan::{
    classify_facet, count_maximal_chains, evaluate_functional, h_table, lower_facet_equation,
    maximal_chains, pairing, upper_facet_equation, CoefficientDiagram, FacetDescriptor, FacetKind,
};
pub use rational::{parse_rational, rat, rat_int, Rational};
