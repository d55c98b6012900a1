//! Induced monochromatic copies of bipartite graphs in two-colored
//! set-membership graphs `B_{n,k}`.
//!
//! The pieces, from the ground up:
//!
//! - [`subset`]: bitmask sets over `[64]` with lexicographic ranking.
//! - [`graph`]: bipartite graphs, edge colorings, induced-copy witnesses and
//!   their verifier.
//! - [`constructions`]: `K_{n,k}`, `B_{n,k}`, and the embedding of any
//!   bipartite graph in some `B_{a,b}`.
//! - [`pigeonhole`]: monochromatic `K_{a,b}` in a two-colored `K_{n,k}`.
//! - [`hyper`]: subset colorings, homogeneous sets, exact Ramsey numbers.
//! - [`induced`]: induced monochromatic `B_{a,b}` from a homogeneous set.
//! - [`workflow`]: the full pipeline for an arbitrary pattern.
//! - [`oracle`]: brute-force reference search.
//! - [`format`] and [`dot`]: text formats and Graphviz export.

pub mod budget;
pub mod constructions;
pub mod dot;
pub mod error;
pub mod format;
pub mod graph;
pub mod hyper;
pub mod induced;
pub mod oracle;
pub mod pigeonhole;
pub mod subset;
pub mod workflow;

pub use budget::{Budget, BUDGET_ENV};
pub use constructions::{complete_bipartite, embed_into_set_bipartite, set_bipartite, EmbeddingResult};
pub use error::{Error, Result};
pub use graph::{
    induced_subgraph, verify_witness, BipartiteGraph, Color, EdgeColoring, InducedCopyWitness, RightLabel,
    RightLabels,
};
pub use hyper::{
    derive_coloring, find_homogeneous_set, is_homogeneous, ramsey_number_exact, DerivedColor, HomogeneousSet,
    RamseyOutcome, SubsetColoring,
};
pub use induced::{build_right_vertex, extract_induced};
pub use oracle::find_induced_monochromatic;
pub use pigeonhole::extract_monochromatic_complete;
pub use subset::Subset;
pub use workflow::{find_induced_mono_pattern, required_parameters, ParameterReport};
