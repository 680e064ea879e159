//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitrows.

mod enumerate;
mod family;
pub mod graph6;

pub use enumerate::{canonical_code, canonical_form, code_of, enumerate_connected, enumerate_trees, MAX_ENUMERATION_N, MAX_TREE_N};
pub use family::{bridge_join, build_family, corona, disjoint_union, FamilySpec};

use crate::error::{Error, Result};
use std::fmt;

/// Largest vertex count a [`Graph`] can hold (one `u64` adjacency row per vertex).
pub const MAX_VERTICES: usize = 64;

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency holds the neighbor set of `v` as a bitmask. Rows are
/// kept symmetric and loop-free by every mutating method.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "{n} vertices exceeds the {MAX_VERTICES}-vertex bitrow limit"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and the absence of loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        let g = Graph { n, adj };
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!("{n} vertices")));
        }
        let mask = low_mask(n);
        for v in 0..n {
            let row = g.adj[v];
            if row & !mask != 0 {
                return Err(Error::invalid(format!("row {v} names a vertex >= {n}")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::invalid(format!("loop at vertex {v}")));
            }
            for u in bits(row) {
                if g.adj[u] >> v & 1 == 0 {
                    return Err(Error::invalid(format!("asymmetric adjacency between {v} and {u}")));
                }
            }
        }
        Ok(g)
    }

    /// Adds `{u, v}`. Adding an existing edge is a no-op; loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "edge {{{u},{v}}} has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    ///
    /// This is the column order of the graph6 upper triangle, and the order in
    /// which signs of a [`SignedGraph`](crate::SignedGraph) are listed.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for v in 0..self.n {
            for u in bits(self.adj[v] & low_mask(v)) {
                out.push((u, v));
            }
        }
        out
    }

    /// True iff a traversal from vertex 0 reaches every vertex. Graphs with at
    /// most one vertex are connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0) == low_mask(self.n)
    }

    /// Vertex set reachable from `start`.
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = low_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_of(left.trailing_zeros() as usize);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// A proper 2-coloring (`false`/`true` per vertex) if the graph has no odd
    /// cycle. The smallest vertex of each component gets `false`.
    pub fn is_bipartite(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut stack = Vec::new();
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            stack.push(root);
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for u in bits(self.adj[v]) {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            stack.push(u);
                        }
                        Some(cu) if cu == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// `K_{1,k}` with `k >= 1` leaves; returns the leaf count. `K_2` counts as a
    /// star with one leaf.
    pub fn star_leaves(&self) -> Option<usize> {
        if self.n < 2 || !self.is_tree() {
            return None;
        }
        let leaves = self.n - 1;
        (0..self.n).any(|v| self.degree(v) == leaves).then_some(leaves)
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True iff `{u, v}` is an edge whose removal increases the number of
    /// components.
    pub fn is_bridge(&self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        let mut h = self.clone();
        h.remove_edge(u, v);
        h.component_of(u) >> v & 1 == 0
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from vertex count"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::invalid("not a permutation"));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for u in bits(self.adj[v]) {
                adj[perm[v]] |= 1 << perm[u];
            }
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Subgraph induced by the vertices in `mask`, renumbered in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask & low_mask(self.n)).collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect();
        Graph { n: keep.len(), adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator over the set bit positions of a mask, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
