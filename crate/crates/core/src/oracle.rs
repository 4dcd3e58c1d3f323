//! Brute-force ground truth over all `J ⊆ L`.
//!
//! Shares nothing with [`crate::matching`]: ℓ-subgraphs are formed from
//! bitmasks and matchings are decided by plain recursive augmenting paths.
//! Subsets are visited by ascending size, then lexicographically.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Default cap on `|L|` for exhaustive enumeration.
pub const DEFAULT_GUARD: usize = 20;

/// Subsets are stored as `u64` masks.
pub const MAX_GUARD: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    /// Every `J` whose ℓ-subgraph is identifiable, in enumeration order.
    pub identifiable_sets: Vec<Vec<usize>>,
    /// First set of maximum cardinality.
    pub max_set: Option<Vec<usize>>,
    /// How many sets attain the maximum cardinality.
    pub max_count: usize,
    pub min_size: Option<usize>,
}

impl EnumerationResult {
    pub fn uniqueness_violated(&self) -> bool {
        self.max_count > 1
    }
}

pub fn enumerate_identifiable(g: &BipartiteGraph, limit: usize) -> Result<EnumerationResult> {
    let oracle = Oracle::new(g, limit)?;
    let identifiable_sets: Vec<Vec<usize>> = subsets_by_size(g.n_left(), g.n_left())
        .filter(|j| oracle.identifiable(to_mask(j)))
        .collect();
    let max_len = identifiable_sets.last().map(Vec::len);
    let mut maxima = identifiable_sets.iter().filter(|j| Some(j.len()) == max_len);
    let max_set = maxima.next().cloned();
    let max_count = max_set.iter().count() + maxima.count();
    Ok(EnumerationResult {
        max_set,
        min_size: identifiable_sets.first().map(Vec::len),
        max_count,
        identifiable_sets,
    })
}

/// A minimum-cardinality `J` with `|J| ≤ k` inducing an identifiable
/// ℓ-subgraph, lexicographically smallest among those; `None` if none exists.
pub fn solve_min_ids_exact(g: &BipartiteGraph, k: usize, limit: usize) -> Result<Option<Vec<usize>>> {
    let oracle = Oracle::new(g, limit)?;
    Ok(subsets_by_size(g.n_left(), k.min(g.n_left())).find(|j| oracle.identifiable(to_mask(j))))
}

/// Whether the ℓ-subgraph induced by `j` is identifiable, decided from scratch.
pub fn induces_identifiable(g: &BipartiteGraph, j: &[usize]) -> Result<bool> {
    let oracle = Oracle::new(g, MAX_GUARD)?;
    Ok(oracle.identifiable(to_mask(j)))
}

/// Whether `x` can be matched into `y` in `g`, by simple augmenting paths.
pub fn naive_saturates(g: &BipartiteGraph, x: &[usize], y: &[usize]) -> bool {
    let mut allowed = vec![false; g.n_right()];
    for &r in y {
        allowed[r] = true;
    }
    let mut x = x.to_vec();
    x.sort_unstable();
    x.dedup();
    let adj: Vec<&[usize]> = (0..g.n_left()).map(|l| g.left_neighbors(l)).collect();
    saturates(&adj, &x, &allowed)
}

fn subsets_by_size(n: usize, max_size: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=max_size).flat_map(move |size| (0..n).combinations(size))
}

fn to_mask(j: &[usize]) -> u64 {
    j.iter().fold(0u64, |m, &l| m | 1 << l)
}

struct Oracle {
    adj: Vec<Vec<usize>>,
    /// For each right vertex, the mask of its left neighbors.
    right_masks: Vec<u64>,
}

impl Oracle {
    fn new(g: &BipartiteGraph, limit: usize) -> Result<Self> {
        let guard = limit.min(MAX_GUARD);
        if g.n_left() > guard {
            return Err(Error::GuardExceeded {
                n_left: g.n_left(),
                guard,
            });
        }
        let mut right_masks = vec![0u64; g.n_right()];
        let adj: Vec<Vec<usize>> = (0..g.n_left()).map(|l| g.left_neighbors(l).to_vec()).collect();
        for (l, nbrs) in adj.iter().enumerate() {
            for &r in nbrs {
                right_masks[r] |= 1 << l;
            }
        }
        Ok(Oracle { adj, right_masks })
    }

    fn identifiable(&self, j: u64) -> bool {
        // r survives iff all of its neighbors lie in J
        let present: Vec<bool> = self.right_masks.iter().map(|&m| m & !j == 0).collect();
        let has_edge = self
            .right_masks
            .iter()
            .zip(&present)
            .any(|(&m, &p)| p && m != 0);
        if !has_edge {
            return false;
        }
        let members: Vec<usize> = (0..self.adj.len()).filter(|&l| j >> l & 1 == 1).collect();
        let adj: Vec<&[usize]> = self.adj.iter().map(Vec::as_slice).collect();
        members.iter().all(|&v| {
            let mut allowed = present.clone();
            for &r in &self.adj[v] {
                allowed[r] = false;
            }
            let others: Vec<usize> = members.iter().copied().filter(|&l| l != v).collect();
            saturates(&adj, &others, &allowed)
        })
    }
}

fn saturates(adj: &[&[usize]], x: &[usize], allowed: &[bool]) -> bool {
    let mut owner = vec![usize::MAX; allowed.len()];
    x.iter().all(|&u| {
        let mut visited = vec![false; allowed.len()];
        try_match(adj, u, allowed, &mut owner, &mut visited)
    })
}

fn try_match(adj: &[&[usize]], u: usize, allowed: &[bool], owner: &mut [usize], visited: &mut [bool]) -> bool {
    for &r in adj[u] {
        if !allowed[r] || visited[r] {
            continue;
        }
        visited[r] = true;
        if owner[r] == usize::MAX || try_match(adj, owner[r], allowed, owner, visited) {
            owner[r] = u;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_by_two() -> BipartiteGraph {
        BipartiteGraph::build(3, 2, &[(0, 0), (1, 1), (2, 1)]).unwrap()
    }

    fn perfect_pair() -> BipartiteGraph {
        BipartiteGraph::build(2, 2, &[(0, 0), (1, 1)]).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let res = enumerate_identifiable(&three_by_two(), DEFAULT_GUARD).unwrap();
        assert_eq!(res.identifiable_sets, vec![vec![0]]);
        assert_eq!(res.max_set, Some(vec![0]));
        assert_eq!(res.min_size, Some(1));
        assert!(!res.uniqueness_violated());

        let res = enumerate_identifiable(&BipartiteGraph::build(3, 2, &[]).unwrap(), DEFAULT_GUARD).unwrap();
        assert!(res.identifiable_sets.is_empty());
        assert_eq!(res.max_set, None);
        assert_eq!(res.min_size, None);

        let res = enumerate_identifiable(&perfect_pair(), DEFAULT_GUARD).unwrap();
        assert_eq!(res.identifiable_sets, vec![vec![0], vec![1], vec![0, 1]]);
        assert_eq!(res.max_set, Some(vec![0, 1]));
        assert_eq!(res.max_count, 1);
    }

    #[test]
    fn min_ids_examples() {
        assert_eq!(solve_min_ids_exact(&three_by_two(), 1, DEFAULT_GUARD).unwrap(), Some(vec![0]));
        assert_eq!(solve_min_ids_exact(&three_by_two(), 0, DEFAULT_GUARD).unwrap(), None);
        assert_eq!(solve_min_ids_exact(&perfect_pair(), 2, DEFAULT_GUARD).unwrap(), Some(vec![0]));
        assert_eq!(solve_min_ids_exact(&perfect_pair(), 99, DEFAULT_GUARD).unwrap(), Some(vec![0]));
    }

    #[test]
    fn guard_is_enforced() {
        let g = BipartiteGraph::build(5, 1, &[]).unwrap();
        assert!(matches!(
            enumerate_identifiable(&g, 4),
            Err(Error::GuardExceeded { n_left: 5, guard: 4 })
        ));
        assert!(solve_min_ids_exact(&g, 1, 4).is_err());
        assert!(enumerate_identifiable(&g, 5).is_ok());
    }

    #[test]
    fn naive_matching() {
        let g = three_by_two();
        assert!(!naive_saturates(&g, &[1, 2], &[1]));
        assert!(naive_saturates(&g, &[0, 1], &[0, 1]));
        assert!(naive_saturates(&g, &[], &[]));
    }

    #[test]
    fn max_count_flags_ties() {
        let res = EnumerationResult {
            identifiable_sets: vec![vec![0], vec![1]],
            max_set: Some(vec![0]),
            max_count: 2,
            min_size: Some(1),
        };
        assert!(res.uniqueness_violated());
    }
}
