//! Witness graphs for upper bounds on vertex Folkman numbers
//! `F(a_1, ..., a_r; m - 1)`, an exact vertex-arrowing decision procedure,
//! clique numbers, and replayable certificates.

pub mod arrowing;
pub mod clique;
pub mod construct;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;

pub use arrowing::{
    arrows, arrows_exhaustive, chromatic_exceeds, in_h, is_free_coloring, ArrowResult, Coloring,
    SearchConfig, SearchStats, Verdict, VertexOrder,
};
pub use clique::{clique_number, find_k_clique_within, has_k_clique_within, CliqueResult};
pub use construct::{
    bounds_report, build_gamma, existence_check, make_instance, witness, witness_graph,
    ArrowInstance, BoundReport, GammaGraph, WitnessGraph,
};
pub use error::{Error, Result};
pub use graph::{Graph, VertexPermutation, VertexSet, MAX_VERTICES};
