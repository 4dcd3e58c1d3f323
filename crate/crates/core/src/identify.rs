//! The identifiability predicate.
//!
//! `G = (L, R; E)` is identifiable when it has at least one edge and, for every
//! `v ∈ L`, the set `L ∖ {v}` can be matched into `R ∖ N(v)`.

use serde::Serialize;

use crate::error::Result;
use crate::graph::BipartiteGraph;
use crate::matching::Matcher;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentifiabilityReport {
    pub identifiable: bool,
    /// Smallest left vertex whose matching test fails. Absent for edgeless graphs.
    pub failing_vertex: Option<usize>,
    pub edgeless: bool,
}

impl IdentifiabilityReport {
    fn edgeless() -> Self {
        IdentifiabilityReport {
            identifiable: false,
            failing_vertex: None,
            edgeless: true,
        }
    }
}

pub fn is_identifiable(g: &BipartiteGraph) -> IdentifiabilityReport {
    identify_counting(g, &mut 0)
}

/// Identifiability of the ℓ-subgraph induced by `j`, with the failing vertex
/// reported in `g`'s coordinates.
pub fn is_lsubgraph_identifiable(g: &BipartiteGraph, j: &[usize]) -> Result<IdentifiabilityReport> {
    let (h, map) = g.induce_lsubgraph(j)?.materialize();
    let mut report = is_identifiable(&h);
    report.failing_vertex = report.failing_vertex.map(|v| map.left[v]);
    Ok(report)
}

/// Whether `L ∖ {v}` has a saturating matching into `R ∖ N(v)`.
pub fn vertex_test_passes(g: &BipartiteGraph, v: usize) -> bool {
    let mut m = vertex_matcher(g, v);
    m.maximize();
    m.deficiency() == 0
}

/// Matcher for the per-vertex test of `v`: `X = L ∖ {v}`, `Y = R ∖ N(v)`.
pub(crate) fn vertex_matcher(g: &BipartiteGraph, v: usize) -> Matcher<'_> {
    let mut in_x = vec![true; g.n_left()];
    in_x[v] = false;
    let mut in_y = vec![true; g.n_right()];
    for &r in g.left_neighbors(v) {
        in_y[r] = false;
    }
    Matcher::new(g, in_x, in_y)
}

/// Same as [`is_identifiable`], adding the number of matching computations to `matchings`.
pub(crate) fn identify_counting(g: &BipartiteGraph, matchings: &mut u64) -> IdentifiabilityReport {
    if g.edge_count() == 0 {
        return IdentifiabilityReport::edgeless();
    }
    let failing_vertex = (0..g.n_left()).find(|&v| {
        *matchings += 1;
        !vertex_test_passes(g, v)
    });
    IdentifiabilityReport {
        identifiable: failing_vertex.is_none(),
        failing_vertex,
        edgeless: false,
    }
}
