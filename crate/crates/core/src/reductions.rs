//! Multicolored Clique gadget generators and small exact solvers used to
//! check them.
//!
//! Index layout of generated graphs: the left side lists the source vertices
//! in input order followed by the special vertices `t_1..t_k`; the right side
//! lists the edge-derived blocks for color pairs `(i, j)`, `i < j`, in
//! lexicographic order (edges in input order within a block), then the
//! per-color private blocks in color order (vertices in input order within a
//! color).

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Product-search budget of [`solve_mcq_exact`].
pub const MCQ_SEARCH_LIMIT: u128 = 1_000_000;
pub const MCQ_MAX_COLORS: usize = 6;

/// A vertex-colored graph `(G, k, φ)`. Vertices are `0..n`, colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McqInstance {
    n: usize,
    edges: Vec<(usize, usize)>,
    k: usize,
    coloring: Vec<usize>,
}

impl McqInstance {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, k: usize, coloring: Vec<usize>) -> Result<Self> {
        if coloring.len() != n {
            return Err(Error::Input(format!(
                "coloring covers {} vertices, expected {n}",
                coloring.len()
            )));
        }
        if let Some((v, &c)) = coloring.iter().enumerate().find(|&(_, &c)| c == 0 || c > k) {
            return Err(Error::Input(format!("vertex {} has color {c} outside 1..={k}", v + 1)));
        }
        let mut seen = HashSet::new();
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({}, {}) out of range for {n} vertices", u + 1, v + 1)));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {}", u + 1)));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Input(format!("duplicate edge ({}, {})", u + 1, v + 1)));
            }
        }
        let inst = McqInstance { n, edges, k, coloring };
        if let Some(c) = (1..=k).find(|&c| inst.class(c).is_empty()) {
            return Err(Error::Input(format!("color class {c} is empty")));
        }
        Ok(inst)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Color of `v`, in `1..=k`.
    pub fn color(&self, v: usize) -> usize {
        self.coloring[v]
    }

    /// `V_c`, ascending.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.coloring[v] == c).collect()
    }

    /// Edges between distinct colors as `(edge id, i, j, u, v)` with
    /// `φ(u) = i < j = φ(v)`, grouped by `(i, j)` and in input order within a group.
    fn cross_edges(&self) -> Vec<(usize, usize, usize, usize, usize)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(_, &(u, v))| self.coloring[u] != self.coloring[v])
            .map(|(id, &(u, v))| {
                let (u, v) = if self.coloring[u] < self.coloring[v] { (u, v) } else { (v, u) };
                (id, self.coloring[u], self.coloring[v], u, v)
            })
            .collect();
        // stable sort keeps input order within a color pair
        out.sort_by_key(|&(_, i, j, _, _)| (i, j));
        out
    }

    fn same_color_edge_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| self.coloring[u] == self.coloring[v])
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeftLabel {
    /// A source vertex (0-based).
    Vertex(usize),
    /// Special vertex `t_i`, `i` in `1..=k`.
    Special(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RightLabel {
    /// The subdivision vertex of source edge `edge` between colors `i < j`.
    EdgeVertex { i: usize, j: usize, edge: usize },
    /// Vertex `slot` (1-based) of `F_i`.
    ColorSlot { i: usize, slot: usize },
    /// Private vertex `p_{v,slot}`.
    Private { v: usize, slot: usize },
    /// Copy `q_{edge,copy}` of a source edge.
    EdgeCopy { edge: usize, copy: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: BipartiteGraph,
    pub k_prime: usize,
    pub left_labels: Vec<LeftLabel>,
    pub right_labels: Vec<RightLabel>,
    /// Same-color source edges ignored by the construction.
    pub dropped_edges: usize,
}

fn left_side(inst: &McqInstance) -> Vec<LeftLabel> {
    (0..inst.n)
        .map(LeftLabel::Vertex)
        .chain((1..=inst.k).map(LeftLabel::Special))
        .collect()
}

/// Collects right vertices as label plus left neighbor list, then builds the graph.
struct Builder {
    n_left: usize,
    adj_left: Vec<Vec<usize>>,
    labels: Vec<RightLabel>,
}

impl Builder {
    fn new(n_left: usize) -> Self {
        Builder {
            n_left,
            adj_left: vec![Vec::new(); n_left],
            labels: Vec::new(),
        }
    }

    fn push(&mut self, label: RightLabel, nbrs: impl IntoIterator<Item = usize>) {
        let r = self.labels.len();
        for l in nbrs {
            self.adj_left[l].push(r);
        }
        self.labels.push(label);
    }

    fn finish(self) -> (BipartiteGraph, Vec<RightLabel>) {
        debug_assert_eq!(self.adj_left.len(), self.n_left);
        let n_right = self.labels.len();
        (BipartiteGraph::from_left_adjacency(self.adj_left, n_right), self.labels)
    }
}

/// Reduction to Min-Identifiable Subgraph parameterized by `k' = 2k`.
///
/// Each cross-color edge `{u, v}` becomes a right vertex adjacent to `u`, `v`
/// and every `t_c` with `c` outside the edge's two colors. Each `v ∈ V_i` gets
/// `k` private vertices in `F_i`, which are also adjacent to every `t_c`, `c ≠ i`.
pub fn mcq_to_minids_k(inst: &McqInstance) -> Result<ReductionOutput> {
    let (n, k) = (inst.n, inst.k);
    if k < 3 {
        return Err(Error::Precondition(format!(
            "k = {k} < 3; solve small Multicolored Clique instances directly"
        )));
    }
    let special = |c: usize| n + c - 1;
    let mut b = Builder::new(n + k);
    for (edge, i, j, u, v) in inst.cross_edges() {
        let ts = (1..=k).filter(|&c| c != i && c != j).map(special);
        b.push(RightLabel::EdgeVertex { i, j, edge }, [u, v].into_iter().chain(ts));
    }
    for i in 1..=k {
        for (pos, v) in inst.class(i).into_iter().enumerate() {
            for s in 0..k {
                let ts = (1..=k).filter(|&c| c != i).map(special);
                b.push(
                    RightLabel::ColorSlot {
                        i,
                        slot: pos * k + s + 1,
                    },
                    std::iter::once(v).chain(ts),
                );
            }
        }
    }
    let (graph, right_labels) = b.finish();
    Ok(ReductionOutput {
        graph,
        k_prime: 2 * k,
        left_labels: left_side(inst),
        right_labels,
        dropped_edges: inst.same_color_edge_count(),
    })
}

/// Reduction to Min-Identifiable Subgraph parameterized by `|L| − k'`, with `k' = |L| − k`.
///
/// Each vertex `v` gets `k + 1` private vertices adjacent to `v` and all of
/// `T`. Each cross-color edge `e = {v_i, v_j}` gets `r = n + k` copies, each
/// adjacent to `V_i ∖ {v_i}`, `V_j ∖ {v_j}` and every `t_c` with `c ∉ {i, j}`.
pub fn mcq_to_minids_nl_minus_k(inst: &McqInstance) -> Result<ReductionOutput> {
    let (n, k) = (inst.n, inst.k);
    if k < 3 {
        return Err(Error::Precondition(format!(
            "k = {k} < 3; solve small Multicolored Clique instances directly"
        )));
    }
    let classes: Vec<Vec<usize>> = (1..=k).map(|c| inst.class(c)).collect();
    if let Some(c) = (1..=k).find(|&c| classes[c - 1].len() < 2) {
        return Err(Error::Precondition(format!(
            "color class {c} has {} vertex; every class needs at least two",
            classes[c - 1].len()
        )));
    }
    let special = |c: usize| n + c - 1;
    let copies = n + k;
    let mut b = Builder::new(n + k);
    for (edge, i, j, u, v) in inst.cross_edges() {
        let mut nbrs: Vec<usize> = classes[i - 1].iter().copied().filter(|&x| x != u).collect();
        nbrs.extend(classes[j - 1].iter().copied().filter(|&x| x != v));
        nbrs.extend((1..=k).filter(|&c| c != i && c != j).map(special));
        for copy in 1..=copies {
            b.push(RightLabel::EdgeCopy { edge, copy }, nbrs.iter().copied());
        }
    }
    for class in &classes {
        for &v in class {
            for slot in 1..=k + 1 {
                b.push(RightLabel::Private { v, slot }, std::iter::once(v).chain((1..=k).map(special)));
            }
        }
    }
    let (graph, right_labels) = b.finish();
    let n_left = graph.n_left();
    Ok(ReductionOutput {
        graph,
        k_prime: n_left - k,
        left_labels: left_side(inst),
        right_labels,
        dropped_edges: inst.same_color_edge_count(),
    })
}

/// Exhaustive search for a multicolored clique, choosing one vertex per color
/// in color order. Returns the first hit in that order, as `(v_1, …, v_k)`.
pub fn solve_mcq_exact(inst: &McqInstance) -> Result<Option<Vec<usize>>> {
    if inst.k > MCQ_MAX_COLORS {
        return Err(Error::Precondition(format!(
            "k = {} exceeds the exact solver's limit of {MCQ_MAX_COLORS} colors",
            inst.k
        )));
    }
    let classes: Vec<Vec<usize>> = (1..=inst.k).map(|c| inst.class(c)).collect();
    let combinations = classes.iter().map(|c| c.len() as u128).product::<u128>();
    if combinations > MCQ_SEARCH_LIMIT {
        return Err(Error::SearchTooLarge {
            combinations,
            limit: MCQ_SEARCH_LIMIT,
        });
    }
    let adjacent: HashSet<(usize, usize)> = inst
        .edges
        .iter()
        .flat_map(|&(u, v)| [(u, v), (v, u)])
        .collect();
    let mut chosen = Vec::with_capacity(inst.k);
    Ok(extend_clique(&classes, &adjacent, &mut chosen).then_some(chosen))
}

fn extend_clique(classes: &[Vec<usize>], adjacent: &HashSet<(usize, usize)>, chosen: &mut Vec<usize>) -> bool {
    let Some(class) = classes.get(chosen.len()) else {
        return true;
    };
    for &v in class {
        if chosen.iter().all(|&u| adjacent.contains(&(u, v))) {
            chosen.push(v);
            if extend_clique(classes, adjacent, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Random bipartite graph: every pair `(l, r)`, scanned in row-major order,
/// is kept when a ChaCha8 draw (seeded from `seed`) falls below `p`.
pub fn gen_random_bipartite(n_left: usize, n_right: usize, p: f64, seed: u64) -> Result<BipartiteGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Input(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let adj = (0..n_left)
        .map(|_| (0..n_right).filter(|_| rng.gen::<f64>() < p).collect())
        .collect();
    Ok(BipartiteGraph::from_left_adjacency(adj, n_right))
}

/// Random colored graph with the given class sizes (vertices colored
/// consecutively); every vertex pair, same-colored ones included, becomes an
/// edge with probability `p`.
pub fn gen_random_mcq(class_sizes: &[usize], p: f64, seed: u64) -> Result<McqInstance> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Input(format!("edge probability {p} outside [0, 1]")));
    }
    let coloring: Vec<usize> = class_sizes
        .iter()
        .enumerate()
        .flat_map(|(c, &size)| std::iter::repeat_n(c + 1, size))
        .collect();
    let n = coloring.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    McqInstance::new(n, edges, class_sizes.len(), coloring)
}
