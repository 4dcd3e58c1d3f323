//! Bipartite graph data model and ℓ-subgraph induction.
//!
//! Vertices are identified by 0-based indices per side. A graph is immutable
//! once built; deletions produce a new graph together with a [`Relabeling`]
//! that maps the new indices back to the indices of the graph it came from.

use crate::error::{Error, Result, Side};

/// A bipartite graph `(L, R; E)` with adjacency stored from both sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    adj_left: Vec<Vec<usize>>,
    adj_right: Vec<Vec<usize>>,
    edge_count: usize,
}

impl BipartiteGraph {
    /// Builds a graph from an edge list. Duplicate pairs collapse into one edge.
    pub fn build(n_left: usize, n_right: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj_left = vec![Vec::new(); n_left];
        for &(l, r) in edges {
            if l >= n_left || r >= n_right {
                return Err(Error::EdgeOutOfRange {
                    l,
                    r,
                    n_left,
                    n_right,
                });
            }
            adj_left[l].push(r);
        }
        Ok(Self::from_left_adjacency(adj_left, n_right))
    }

    /// Builds from per-left-vertex neighbor lists whose entries are known to be in range.
    pub(crate) fn from_left_adjacency(mut adj_left: Vec<Vec<usize>>, n_right: usize) -> Self {
        let mut adj_right = vec![Vec::new(); n_right];
        let mut edge_count = 0;
        for (l, nbrs) in adj_left.iter_mut().enumerate() {
            nbrs.sort_unstable();
            nbrs.dedup();
            edge_count += nbrs.len();
            for &r in nbrs.iter() {
                adj_right[r].push(l);
            }
        }
        // left vertices are visited in ascending order, so right lists come out sorted
        BipartiteGraph {
            adj_left,
            adj_right,
            edge_count,
        }
    }

    pub fn n_left(&self) -> usize {
        self.adj_left.len()
    }

    pub fn n_right(&self) -> usize {
        self.adj_right.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn size(&self, side: Side) -> usize {
        match side {
            Side::Left => self.n_left(),
            Side::Right => self.n_right(),
        }
    }

    /// Sorted right-side neighbors of left vertex `l`.
    pub fn left_neighbors(&self, l: usize) -> &[usize] {
        &self.adj_left[l]
    }

    /// Sorted left-side neighbors of right vertex `r`.
    pub fn right_neighbors(&self, r: usize) -> &[usize] {
        &self.adj_right[r]
    }

    pub fn neighbors(&self, side: Side, x: usize) -> &[usize] {
        match side {
            Side::Left => &self.adj_left[x],
            Side::Right => &self.adj_right[x],
        }
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.adj_left
            .get(l)
            .is_some_and(|nbrs| nbrs.binary_search(&r).is_ok())
    }

    /// All edges as `(l, r)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj_left
            .iter()
            .enumerate()
            .flat_map(|(l, nbrs)| nbrs.iter().map(move |&r| (l, r)))
    }

    /// Checks that every index in `xs` is a valid vertex of `side`.
    pub fn check_indices(&self, side: Side, xs: &[usize]) -> Result<()> {
        let size = self.size(side);
        match xs.iter().find(|&&x| x >= size) {
            Some(&index) => Err(Error::IndexOutOfRange { side, index, size }),
            None => Ok(()),
        }
    }

    /// `N(xs)`: the vertices on the opposite side with a neighbor in `xs`.
    pub fn neighborhood(&self, side: Side, xs: &[usize]) -> Result<Vec<usize>> {
        self.check_indices(side, xs)?;
        let mut seen = vec![false; self.size(side.opposite())];
        for &x in xs {
            for &y in self.neighbors(side, x) {
                seen[y] = true;
            }
        }
        Ok(indices_of(&seen))
    }

    /// The ℓ-subgraph induced by `j`: left part `j`, right part `R ∖ N(L ∖ j)`.
    pub fn induce_lsubgraph(&self, j: &[usize]) -> Result<LSubgraph<'_>> {
        self.check_indices(Side::Left, j)?;
        let in_j = mask(self.n_left(), j);
        let r_set = (0..self.n_right())
            .filter(|&r| self.adj_right[r].iter().all(|&l| in_j[l]))
            .collect();
        Ok(LSubgraph {
            parent: self,
            j_set: indices_of(&in_j),
            r_set,
        })
    }

    /// The subgraph induced by `left ∪ right`, renumbered densely in ascending
    /// index order. Inputs must be valid indices.
    pub fn induced_subgraph(&self, left: &[usize], right: &[usize]) -> Result<(BipartiteGraph, Relabeling)> {
        self.check_indices(Side::Left, left)?;
        self.check_indices(Side::Right, right)?;
        let left = indices_of(&mask(self.n_left(), left));
        let right = indices_of(&mask(self.n_right(), right));
        let mut new_right = vec![usize::MAX; self.n_right()];
        for (i, &r) in right.iter().enumerate() {
            new_right[r] = i;
        }
        let adj = left
            .iter()
            .map(|&l| {
                self.adj_left[l]
                    .iter()
                    .filter_map(|&r| (new_right[r] != usize::MAX).then_some(new_right[r]))
                    .collect()
            })
            .collect();
        let graph = BipartiteGraph::from_left_adjacency(adj, right.len());
        Ok((graph, Relabeling { left, right }))
    }

    /// Complete bipartite graph `K_{n_left, n_right}`.
    pub fn complete(n_left: usize, n_right: usize) -> Self {
        let adj = (0..n_left).map(|_| (0..n_right).collect()).collect();
        BipartiteGraph::from_left_adjacency(adj, n_right)
    }
}

/// Maps indices of a derived graph back to the graph it was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    /// `left[i]` is the source index of derived left vertex `i`.
    pub left: Vec<usize>,
    /// `right[i]` is the source index of derived right vertex `i`.
    pub right: Vec<usize>,
}

impl Relabeling {
    pub fn identity(g: &BipartiteGraph) -> Self {
        Relabeling {
            left: (0..g.n_left()).collect(),
            right: (0..g.n_right()).collect(),
        }
    }

    pub fn map_left(&self, xs: &[usize]) -> Vec<usize> {
        xs.iter().map(|&x| self.left[x]).collect()
    }

    pub fn map_right(&self, xs: &[usize]) -> Vec<usize> {
        xs.iter().map(|&x| self.right[x]).collect()
    }

    /// `self` maps derived → middle and `inner` maps middle → source; the
    /// result maps derived → source.
    pub fn then(&self, inner: &Relabeling) -> Relabeling {
        Relabeling {
            left: inner.map_left(&self.left),
            right: inner.map_right(&self.right),
        }
    }
}

/// An ℓ-subgraph `G(J) = G[J, R ∖ N(L ∖ J)]` of a parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LSubgraph<'g> {
    parent: &'g BipartiteGraph,
    j_set: Vec<usize>,
    r_set: Vec<usize>,
}

impl<'g> LSubgraph<'g> {
    pub fn parent(&self) -> &'g BipartiteGraph {
        self.parent
    }

    /// Left part, sorted.
    pub fn j_set(&self) -> &[usize] {
        &self.j_set
    }

    /// Right part, sorted.
    pub fn r_set(&self) -> &[usize] {
        &self.r_set
    }

    /// Edges of the induced subgraph in parent coordinates.
    ///
    /// Every right vertex kept has all of its neighbors inside `J`, so the
    /// induced edges are exactly the parent edges incident to `r_set`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .r_set
            .iter()
            .flat_map(|&r| self.parent.right_neighbors(r).iter().map(move |&l| (l, r)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn edge_count(&self) -> usize {
        self.r_set
            .iter()
            .map(|&r| self.parent.right_neighbors(r).len())
            .sum()
    }

    /// Materializes the subgraph as a standalone graph plus its relabeling.
    pub fn materialize(&self) -> (BipartiteGraph, Relabeling) {
        self.parent
            .induced_subgraph(&self.j_set, &self.r_set)
            .expect("ℓ-subgraph indices come from the parent")
    }
}

pub(crate) fn mask(n: usize, xs: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &x in xs {
        m[x] = true;
    }
    m
}

pub(crate) fn indices_of(m: &[bool]) -> Vec<usize> {
    m.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_by_two() -> BipartiteGraph {
        // 1–r1, 2–r2, 3–r2 in 0-based form
        BipartiteGraph::build(3, 2, &[(0, 0), (1, 1), (2, 1)]).unwrap()
    }

    #[test]
    fn build_counts_edges() {
        assert_eq!(BipartiteGraph::build(2, 2, &[(0, 0), (1, 1)]).unwrap().edge_count(), 2);
        assert_eq!(BipartiteGraph::build(1, 1, &[]).unwrap().edge_count(), 0);
        let g = BipartiteGraph::build(2, 2, &[(0, 0), (0, 0), (1, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.left_neighbors(0), &[0]);
    }

    #[test]
    fn build_rejects_out_of_range() {
        let err = BipartiteGraph::build(2, 2, &[(0, 0), (2, 1)]).unwrap_err();
        match err {
            Error::EdgeOutOfRange { l, r, .. } => assert_eq!((l, r), (2, 1)),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(BipartiteGraph::build(2, 2, &[(0, 5)]).is_err());
    }

    #[test]
    fn adjacency_is_consistent() {
        let g = BipartiteGraph::build(3, 3, &[(2, 0), (0, 2), (1, 0), (0, 0), (2, 2)]).unwrap();
        for l in 0..3 {
            for &r in g.left_neighbors(l) {
                assert!(g.right_neighbors(r).contains(&l));
            }
        }
        assert_eq!(g.right_neighbors(0), &[0, 1, 2]);
        assert_eq!(g.right_neighbors(2), &[0, 2]);
        let total: usize = (0..3).map(|r| g.right_neighbors(r).len()).sum();
        assert_eq!(total, g.edge_count());
    }

    #[test]
    fn neighborhoods() {
        let k22 = BipartiteGraph::complete(2, 2);
        assert_eq!(k22.neighborhood(Side::Left, &[0]).unwrap(), vec![0, 1]);
        assert!(k22.neighborhood(Side::Left, &[]).unwrap().is_empty());
        let pm = BipartiteGraph::build(2, 2, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(pm.neighborhood(Side::Left, &[0, 1]).unwrap(), vec![0, 1]);
        assert_eq!(pm.neighborhood(Side::Right, &[1]).unwrap(), vec![1]);
        assert!(pm.neighborhood(Side::Left, &[2]).is_err());
    }

    #[test]
    fn induce_examples() {
        // u–a, u–b, v–b with J = {u}
        let g = BipartiteGraph::build(2, 2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        let sub = g.induce_lsubgraph(&[0]).unwrap();
        assert_eq!(sub.j_set(), &[0]);
        assert_eq!(sub.r_set(), &[0]);

        let full = g.induce_lsubgraph(&[1, 0]).unwrap();
        assert_eq!(full.r_set(), &[0, 1]);
        assert_eq!(full.edges(), g.edges().collect::<Vec<_>>());

        let g = three_by_two();
        let sub = g.induce_lsubgraph(&[0]).unwrap();
        assert_eq!(sub.r_set(), &[0]);
        assert_eq!(sub.edges(), vec![(0, 0)]);
    }

    #[test]
    fn induce_empty_keeps_isolated_right_vertices() {
        let g = BipartiteGraph::build(2, 3, &[(0, 0), (1, 1)]).unwrap();
        let sub = g.induce_lsubgraph(&[]).unwrap();
        assert_eq!(sub.r_set(), &[2]);
        assert_eq!(sub.edge_count(), 0);
    }

    #[test]
    fn induce_three_by_two_all_subsets() {
        let g = three_by_two();
        // direct set computation: r kept iff N(r) ⊆ J
        let n_r = [vec![0usize], vec![1, 2]];
        for bits in 0u32..8 {
            let j: Vec<usize> = (0..3).filter(|&i| bits >> i & 1 == 1).collect();
            let expect: Vec<usize> = (0..2)
                .filter(|&r| n_r[r].iter().all(|l| j.contains(l)))
                .collect();
            assert_eq!(g.induce_lsubgraph(&j).unwrap().r_set(), expect.as_slice());
        }
    }

    #[test]
    fn materialize_relabels() {
        let g = three_by_two();
        let sub = g.induce_lsubgraph(&[1, 2]).unwrap();
        let (h, map) = sub.materialize();
        assert_eq!(h.n_left(), 2);
        assert_eq!(h.n_right(), 1);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(map.left, vec![1, 2]);
        assert_eq!(map.right, vec![1]);
    }

    #[test]
    fn relabeling_composes() {
        let g = BipartiteGraph::complete(4, 4);
        let (h1, m1) = g.induced_subgraph(&[1, 2, 3], &[0, 2, 3]).unwrap();
        let (_, m2) = h1.induced_subgraph(&[0, 2], &[1]).unwrap();
        let m = m2.then(&m1);
        assert_eq!(m.left, vec![1, 3]);
        assert_eq!(m.right, vec![2]);
    }
}
