//! Maximum identifiable ℓ-subgraph by repeated blocker deletion.
//!
//! While the residual graph has edges but is not identifiable, pick the
//! smallest left vertex `v` whose test fails, find an inclusion-minimal
//! `K ⊆ L ∖ {v}` with no matching into `R ∖ N(v)`, and delete `K ∪ N(K)`.
//! No identifiable ℓ-subgraph contains a vertex of such a `K`, and deleting
//! `N[K]` leaves the ℓ-subgraphs induced by sets avoiding `K` untouched, so
//! the first identifiable residual graph is the unique maximum one.

use serde::Serialize;

use crate::error::{Error, Result, Side};
use crate::graph::{indices_of, BipartiteGraph, Relabeling};
use crate::identify::{identify_counting, vertex_matcher};
use crate::matching::has_saturating_matching;

/// A minimal left set `K ⊆ L ∖ {pivot}` with no matching into `R ∖ N(pivot)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockerSet {
    pub pivot: usize,
    pub members: Vec<usize>,
}

/// Where the minimality scan starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BlockerStart {
    /// The alternating-path Hall violator of a maximum matching of `L ∖ {v}`.
    #[default]
    Violator,
    /// All of `L ∖ {v}`.
    AllOthers,
}

/// Ways a candidate blocker can fail the minimal-blocker conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockerDefect {
    Empty,
    ContainsPivot,
    Saturable,
    NotMinimal { removable: usize },
    NoHallDeficit { neighbors: usize, size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Iteration {
    /// Size of the residual left side before this iteration.
    pub remaining_left: usize,
    pub pivot: usize,
    pub blocker: Vec<usize>,
    /// `N(K)` within the residual graph.
    pub deleted_right: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Found,
    NoneExists,
}

/// Full record of a solve. All indices refer to the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveTrace {
    pub iterations: Vec<Iteration>,
    pub result: Option<Vec<usize>>,
    pub outcome: Outcome,
    /// Full matchings plus single-augmentation queries performed.
    pub matchings_run: u64,
}

pub fn find_minimal_blocker(g: &BipartiteGraph, v: usize) -> Result<BlockerSet> {
    find_minimal_blocker_from(g, v, BlockerStart::Violator)
}

pub fn find_minimal_blocker_from(g: &BipartiteGraph, v: usize, start: BlockerStart) -> Result<BlockerSet> {
    g.check_indices(Side::Left, &[v])?;
    blocker_counting(g, v, start, &mut 0)
}

fn blocker_counting(g: &BipartiteGraph, v: usize, start: BlockerStart, matchings: &mut u64) -> Result<BlockerSet> {
    let mut m = vertex_matcher(g, v);
    m.maximize();
    *matchings += 1;
    if m.deficiency() == 0 {
        return Err(Error::PivotNotBlocked { v });
    }
    if start == BlockerStart::Violator {
        // the matching restricted to the violator is still maximum for it
        let violator = m.violator().expect("deficient matching has a violator");
        let mut keep = vec![false; g.n_left()];
        for &l in &violator {
            keep[l] = true;
        }
        for (l, &kept) in keep.iter().enumerate() {
            if !kept {
                m.remove_left(l);
            }
        }
    }

    // One ascending pass: a vertex that is needed once stays needed in every
    // subset, so restarting the scan after each removal changes nothing.
    let candidates = indices_of(m.in_x());
    for w in candidates {
        if m.deficiency() >= 2 {
            let was_matched = m.is_matched_left(w);
            m.remove_left(w);
            if was_matched {
                m.augment_once();
                *matchings += 1;
            }
        } else if m.is_matched_left(w) {
            m.remove_left(w);
            *matchings += 1;
            if m.augment_once() {
                // K ∖ {w} saturates, so w is needed; the new matching is
                // maximum for K with w as its single free vertex
                m.add_left(w);
            }
        }
        // deficiency 1 with w free: the current matching saturates K ∖ {w}
    }
    debug_assert_eq!(m.deficiency(), 1);
    Ok(BlockerSet {
        pivot: v,
        members: indices_of(m.in_x()),
    })
}

/// Checks the minimal-blocker conditions with independent matching runs:
/// no matching of `K` into `R ∖ N(v)`, a matching for every `K ∖ {w}`, and
/// `|N(K) ∩ (R ∖ N(v))| < |K|`.
pub fn check_blocker(g: &BipartiteGraph, blocker: &BlockerSet) -> Result<(), BlockerDefect> {
    let v = blocker.pivot;
    let k = &blocker.members;
    if k.is_empty() {
        return Err(BlockerDefect::Empty);
    }
    if k.contains(&v) {
        return Err(BlockerDefect::ContainsPivot);
    }
    let target = non_neighbors(g, v);
    let saturates = |x: &[usize]| has_saturating_matching(g, x, &target).expect("indices from g");
    if saturates(k) {
        return Err(BlockerDefect::Saturable);
    }
    for (i, &w) in k.iter().enumerate() {
        let mut rest = k.clone();
        rest.remove(i);
        if !saturates(&rest) {
            return Err(BlockerDefect::NotMinimal { removable: w });
        }
    }
    let mut in_target = vec![false; g.n_right()];
    for &r in &target {
        in_target[r] = true;
    }
    let neighbors = g
        .neighborhood(Side::Left, k)
        .expect("indices from g")
        .into_iter()
        .filter(|&r| in_target[r])
        .count();
    if neighbors >= k.len() {
        return Err(BlockerDefect::NoHallDeficit {
            neighbors,
            size: k.len(),
        });
    }
    Ok(())
}

/// `R ∖ N(v)`.
pub fn non_neighbors(g: &BipartiteGraph, v: usize) -> Vec<usize> {
    let mut in_nbr = vec![false; g.n_right()];
    for &r in g.left_neighbors(v) {
        in_nbr[r] = true;
    }
    (0..g.n_right()).filter(|&r| !in_nbr[r]).collect()
}

/// `G − N[K] = G[L ∖ K, R ∖ N(K)]`, with the map back to `g`'s indices.
pub fn delete_closed_neighborhood(g: &BipartiteGraph, k: &[usize]) -> Result<(BipartiteGraph, Relabeling)> {
    let nk = g.neighborhood(Side::Left, k)?;
    let mut drop_l = vec![false; g.n_left()];
    for &l in k {
        drop_l[l] = true;
    }
    let mut drop_r = vec![false; g.n_right()];
    for &r in &nk {
        drop_r[r] = true;
    }
    let left: Vec<usize> = (0..g.n_left()).filter(|&l| !drop_l[l]).collect();
    let right: Vec<usize> = (0..g.n_right()).filter(|&r| !drop_r[r]).collect();
    g.induced_subgraph(&left, &right)
}

pub fn max_identifiable_subgraph(g: &BipartiteGraph) -> SolveTrace {
    let mut current = g.clone();
    let mut to_input = Relabeling::identity(g);
    let mut iterations = Vec::new();
    let mut matchings = 0u64;
    loop {
        // deletions can empty the edge set, so this is re-tested every round
        if current.edge_count() == 0 {
            return SolveTrace {
                iterations,
                result: None,
                outcome: Outcome::NoneExists,
                matchings_run: matchings,
            };
        }
        let report = identify_counting(&current, &mut matchings);
        let Some(v) = report.failing_vertex else {
            return SolveTrace {
                iterations,
                result: Some(to_input.left.clone()),
                outcome: Outcome::Found,
                matchings_run: matchings,
            };
        };
        let blocker = blocker_counting(&current, v, BlockerStart::Violator, &mut matchings)
            .expect("failing vertex has a blocker");
        let (next, to_current) =
            delete_closed_neighborhood(&current, &blocker.members).expect("blocker indices are valid");
        let deleted_right = current
            .neighborhood(Side::Left, &blocker.members)
            .expect("blocker indices are valid");
        iterations.push(Iteration {
            remaining_left: current.n_left(),
            pivot: to_input.left[v],
            blocker: to_input.map_left(&blocker.members),
            deleted_right: to_input.map_right(&deleted_right),
        });
        to_input = to_current.then(&to_input);
        current = next;
    }
}

pub fn has_identifiable_subgraph(g: &BipartiteGraph) -> bool {
    max_identifiable_subgraph(g).outcome == Outcome::Found
}
