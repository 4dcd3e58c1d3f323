//! Maximum-cardinality matching between a left subset `X` and a right subset `Y`.
//!
//! The matcher runs Hopcroft–Karp phases, scanning vertices and neighbor lists
//! in ascending index order so the produced pairs are reproducible. When `X`
//! cannot be saturated, the set of left vertices reachable by alternating paths
//! from unmatched `X`-vertices is returned as a Hall violator.

use std::collections::VecDeque;

use crate::error::{Result, Side};
use crate::graph::{indices_of, mask, BipartiteGraph};

const NONE: usize = usize::MAX;
const INF: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    /// Matched `(l, r)` pairs sorted by `l`.
    pub pairs: Vec<(usize, usize)>,
    pub size: usize,
    /// A left subset `K'` with `|N(K') ∩ Y| < |K'|`, present iff `size < |X|`.
    pub violator: Option<Vec<usize>>,
}

/// A vertex cover of `G[X, Y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCover {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Maximum matching of `x` into `y`. Duplicate indices are ignored.
pub fn max_matching(g: &BipartiteGraph, x: &[usize], y: &[usize]) -> Result<MatchingResult> {
    let mut m = Matcher::from_sets(g, x, y)?;
    m.maximize();
    Ok(MatchingResult {
        pairs: m.pairs(),
        size: m.size(),
        violator: m.violator(),
    })
}

/// Whether every vertex of `x` can be matched into `y`.
pub fn has_saturating_matching(g: &BipartiteGraph, x: &[usize], y: &[usize]) -> Result<bool> {
    let mut m = Matcher::from_sets(g, x, y)?;
    m.maximize();
    Ok(m.deficiency() == 0)
}

/// A minimum vertex cover of `G[x, y]`, read off the alternating-path
/// structure of a maximum matching (König's theorem).
pub fn min_vertex_cover(g: &BipartiteGraph, x: &[usize], y: &[usize]) -> Result<VertexCover> {
    let mut m = Matcher::from_sets(g, x, y)?;
    m.maximize();
    let (reach_l, reach_r) = m.alternating_reach();
    let left = (0..g.n_left()).filter(|&l| m.in_x[l] && !reach_l[l]).collect();
    let right = (0..g.n_right()).filter(|&r| m.in_y[r] && reach_r[r]).collect();
    Ok(VertexCover { left, right })
}

/// Matching state over fixed left/right membership masks.
///
/// Besides full maximization it supports removing a left vertex and
/// attempting a single augmentation, which the blocker search uses to keep
/// one matching alive across many closely related queries.
#[derive(Debug, Clone)]
pub(crate) struct Matcher<'g> {
    g: &'g BipartiteGraph,
    in_x: Vec<bool>,
    in_y: Vec<bool>,
    mate_l: Vec<usize>,
    mate_r: Vec<usize>,
    x_count: usize,
    size: usize,
}

impl<'g> Matcher<'g> {
    pub(crate) fn from_sets(g: &'g BipartiteGraph, x: &[usize], y: &[usize]) -> Result<Self> {
        g.check_indices(Side::Left, x)?;
        g.check_indices(Side::Right, y)?;
        Ok(Self::new(g, mask(g.n_left(), x), mask(g.n_right(), y)))
    }

    pub(crate) fn new(g: &'g BipartiteGraph, in_x: Vec<bool>, in_y: Vec<bool>) -> Self {
        debug_assert_eq!(in_x.len(), g.n_left());
        debug_assert_eq!(in_y.len(), g.n_right());
        let x_count = in_x.iter().filter(|&&b| b).count();
        Matcher {
            g,
            in_x,
            in_y,
            mate_l: vec![NONE; g.n_left()],
            mate_r: vec![NONE; g.n_right()],
            x_count,
            size: 0,
        }
    }

    pub(crate) fn size(&self) -> usize {
        self.size
    }

    /// Number of `X`-vertices left unmatched.
    pub(crate) fn deficiency(&self) -> usize {
        self.x_count - self.size
    }

    pub(crate) fn in_x(&self) -> &[bool] {
        &self.in_x
    }

    pub(crate) fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.g.n_left())
            .filter(|&l| self.mate_l[l] != NONE)
            .map(|l| (l, self.mate_l[l]))
            .collect()
    }

    /// Runs Hopcroft–Karp phases until no augmenting path remains.
    pub(crate) fn maximize(&mut self) {
        let n = self.g.n_left();
        let mut dist = vec![INF; n];
        let mut cursor = vec![0usize; n];
        let mut queue = VecDeque::new();
        let mut stack = Vec::new();
        loop {
            queue.clear();
            for (l, d) in dist.iter_mut().enumerate() {
                if self.in_x[l] && self.mate_l[l] == NONE {
                    *d = 0;
                    queue.push_back(l);
                } else {
                    *d = INF;
                }
            }
            let mut found = false;
            while let Some(u) = queue.pop_front() {
                for &r in self.g.left_neighbors(u) {
                    if !self.in_y[r] {
                        continue;
                    }
                    let w = self.mate_r[r];
                    if w == NONE {
                        found = true;
                    } else if dist[w] == INF {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if !found {
                break;
            }
            cursor.fill(0);
            for l in 0..n {
                if self.in_x[l] && self.mate_l[l] == NONE && self.layered_dfs(l, &mut dist, &mut cursor, &mut stack) {
                    self.size += 1;
                }
            }
        }
    }

    /// Iterative DFS along the BFS layering; augments and returns true on success.
    fn layered_dfs(&mut self, root: usize, dist: &mut [u32], cursor: &mut [usize], stack: &mut Vec<usize>) -> bool {
        stack.clear();
        stack.push(root);
        while let Some(&u) = stack.last() {
            let nbrs = self.g.left_neighbors(u);
            if cursor[u] == nbrs.len() {
                dist[u] = INF;
                stack.pop();
                continue;
            }
            let r = nbrs[cursor[u]];
            cursor[u] += 1;
            if !self.in_y[r] {
                continue;
            }
            let w = self.mate_r[r];
            if w == NONE {
                // stack[i + 1] is currently matched to the edge used to leave stack[i]
                let mut r = r;
                for &l in stack.iter().rev() {
                    let previous = self.mate_l[l];
                    self.mate_l[l] = r;
                    self.mate_r[r] = l;
                    r = previous;
                }
                return true;
            }
            if dist[w] != INF && dist[w] == dist[u] + 1 {
                stack.push(w);
            }
        }
        false
    }

    /// Drops `w` from `X`, unmatching it if needed.
    pub(crate) fn remove_left(&mut self, w: usize) {
        if !self.in_x[w] {
            return;
        }
        self.in_x[w] = false;
        self.x_count -= 1;
        let r = self.mate_l[w];
        if r != NONE {
            self.mate_l[w] = NONE;
            self.mate_r[r] = NONE;
            self.size -= 1;
        }
    }

    /// Puts `w` back into `X` as an unmatched vertex.
    pub(crate) fn add_left(&mut self, w: usize) {
        if !self.in_x[w] {
            self.in_x[w] = true;
            self.x_count += 1;
        }
    }

    pub(crate) fn is_matched_left(&self, l: usize) -> bool {
        self.mate_l[l] != NONE
    }

    /// Searches for one augmenting path from any unmatched `X`-vertex and
    /// applies it. Returns whether the matching grew.
    pub(crate) fn augment_once(&mut self) -> bool {
        let mut seen_l = vec![false; self.g.n_left()];
        let mut from = vec![NONE; self.g.n_right()];
        let mut queue = VecDeque::new();
        for (l, mark) in seen_l.iter_mut().enumerate() {
            if self.in_x[l] && self.mate_l[l] == NONE {
                *mark = true;
                queue.push_back(l);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &r in self.g.left_neighbors(u) {
                if !self.in_y[r] || from[r] != NONE {
                    continue;
                }
                from[r] = u;
                let w = self.mate_r[r];
                if w == NONE {
                    let mut r = r;
                    loop {
                        let l = from[r];
                        let previous = self.mate_l[l];
                        self.mate_l[l] = r;
                        self.mate_r[r] = l;
                        if previous == NONE {
                            break;
                        }
                        r = previous;
                    }
                    self.size += 1;
                    return true;
                }
                if !seen_l[w] {
                    seen_l[w] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    /// Vertices reachable by alternating paths from unmatched `X`-vertices.
    pub(crate) fn alternating_reach(&self) -> (Vec<bool>, Vec<bool>) {
        let mut reach_l = vec![false; self.g.n_left()];
        let mut reach_r = vec![false; self.g.n_right()];
        let mut queue = VecDeque::new();
        for (l, mark) in reach_l.iter_mut().enumerate() {
            if self.in_x[l] && self.mate_l[l] == NONE {
                *mark = true;
                queue.push_back(l);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &r in self.g.left_neighbors(u) {
                if !self.in_y[r] || reach_r[r] {
                    continue;
                }
                reach_r[r] = true;
                let w = self.mate_r[r];
                if w != NONE && !reach_l[w] {
                    reach_l[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (reach_l, reach_r)
    }

    /// The alternating-reachable left set, when the matching is deficient.
    ///
    /// Must be called on a maximum matching: then every reachable right vertex
    /// is matched to a reachable left vertex, and the unmatched roots make the
    /// left side strictly larger.
    pub(crate) fn violator(&self) -> Option<Vec<usize>> {
        if self.deficiency() == 0 {
            return None;
        }
        Some(indices_of(&self.alternating_reach().0))
    }
}
