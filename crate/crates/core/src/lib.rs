//! Identifiable ℓ-subgraphs of bipartite graphs.
//!
//! A bipartite graph `G = (L, R; E)` with at least one edge is *identifiable*
//! when, for every `v ∈ L`, the vertices `L ∖ {v}` can be matched into the
//! non-neighbors `R ∖ N(v)`. For `J ⊆ L` the ℓ-subgraph `G(J)` keeps `J` and
//! the right vertices whose neighbors all lie in `J`.
//!
//! - [`solver::max_identifiable_subgraph`] finds the unique maximum `J` with
//!   an identifiable `G(J)` in polynomial time.
//! - [`oracle`] enumerates all `J` by brute force and solves the minimization
//!   variant exactly on small inputs.
//! - [`reductions`] builds the two gadget graphs that map Multicolored Clique
//!   onto the minimization variant.

pub mod cli;
pub mod error;
pub mod graph;
pub mod identify;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod reductions;
pub mod solver;

pub use error::{Error, Result, Side};
pub use graph::{BipartiteGraph, LSubgraph, Relabeling};
pub use identify::{is_identifiable, is_lsubgraph_identifiable, IdentifiabilityReport};
pub use matching::{has_saturating_matching, max_matching, min_vertex_cover, MatchingResult, VertexCover};
pub use solver::{
    delete_closed_neighborhood, find_minimal_blocker, has_identifiable_subgraph, max_identifiable_subgraph,
    BlockerSet, Outcome, SolveTrace,
};
