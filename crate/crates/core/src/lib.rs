//! Interval and cyclically-interval edge colorings of trees.
//!
//! The crate provides the cyclic-interval set algebra over a palette
//! `[1, t]`, verifiers for proper/interval/cyclically-interval edge
//! colorings, the path invariant that bounds the feasible palette sizes of
//! a tree, a constructor producing a coloring for every feasible size, and
//! an exhaustive enumeration oracle for small graphs.

pub mod catalog;
pub mod construct;
pub mod cyclic;
pub mod dot;
pub mod fixtures;
pub mod graph;
pub mod invariants;
pub mod oracle;
pub mod verify;

pub use construct::{
    construct, construct_all_t, ConstructError, ConstructOutcome, ConstructionRequest,
    Infeasibility, InfeasibleReason, Mode,
};
pub use cyclic::{
    chained_union, dif, intcyc_closed_1, intcyc_closed_2, intcyc_open_1, intcyc_open_2,
    AlgebraError, ColorSet,
};
pub use graph::{Graph, GraphError, PathData};
pub use invariants::{
    big_m, chromatic_index_tree, max_degree, spectrum_tree, BigM, Provenance, SpectrumReport,
    SpectrumSet,
};
pub use oracle::{
    check_corollary_bound, check_lemma2, check_lemma3, check_lemma4, enumerate_colorings,
    exact_spectrum, for_each_coloring, oracle_report, simple_paths, OracleError, OracleResult,
    Predicate, TCounts, DEFAULT_LIMIT_EDGES,
};
pub use verify::{
    check_cyclic, check_interval, check_proper, colors_of, is_cyclic_coloring,
    is_interval_coloring, is_proper, star_colors, Coloring, ColoringError, Violation,
};
