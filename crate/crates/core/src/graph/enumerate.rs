//! Isomorphism-free enumeration of small graphs.
//!
//! The canonical representative of a class is the labeling whose upper-triangle
//! bitstring (graph6 column order, first pair most significant) is
//! lexicographically smallest over all vertex permutations. The search fixes
//! one column of the matrix per level and prunes as soon as a prefix exceeds
//! the best code found so far.

use super::Graph;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Largest `n` served by [`enumerate_connected`]; bigger orders must come from
/// graph6 files produced by an external generator.
pub const MAX_ENUMERATION_N: usize = 6;
/// Largest `n` served by [`enumerate_trees`].
pub const MAX_TREE_N: usize = 9;
/// Codes are packed into a `u64`, so canonicalization needs `n(n-1)/2 <= 64`.
const MAX_CANON_N: usize = 11;

fn pair_bits(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Upper-triangle code of `g` as labeled, first pair in the most significant bit.
pub fn code_of(g: &Graph) -> u64 {
    let mut code = 0u64;
    for v in 1..g.n() {
        for u in 0..v {
            code = code << 1 | g.has_edge(u, v) as u64;
        }
    }
    code
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = pair_bits(n);
    let mut g = Graph::empty(n).expect("n is small");
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> (total - 1 - k) & 1 == 1 {
                g.add_edge(u, v).expect("in range");
            }
            k += 1;
        }
    }
    g
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    total: u32,
    order: Vec<usize>,
    best: u64,
}

impl CanonSearch<'_> {
    fn descend(&mut self, depth: usize, used: u64, prefix: u64) {
        if depth == self.n {
            self.best = self.best.min(prefix);
            return;
        }
        for cand in 0..self.n {
            if used >> cand & 1 == 1 {
                continue;
            }
            let row = self.g.neighbors(cand);
            let mut p = prefix;
            for i in 0..depth {
                p = p << 1 | (row >> self.order[i] & 1);
            }
            let len = pair_bits(depth + 1);
            if len > 0 && p > self.best >> (self.total - len) {
                continue;
            }
            self.order[depth] = cand;
            self.descend(depth + 1, used | 1 << cand, p);
        }
    }
}

/// Canonical code: the minimum [`code_of`] over all relabelings of `g`.
///
/// Two graphs with the same order are isomorphic iff their canonical codes
/// agree.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(Error::UnsupportedSize(format!(
            "canonical form is limited to n <= {MAX_CANON_N}, got {n}"
        )));
    }
    if n <= 1 {
        return Ok(0);
    }
    let mut s = CanonSearch {
        g,
        n,
        total: pair_bits(n),
        order: vec![0; n],
        best: u64::MAX,
    };
    s.descend(0, 0, 0);
    Ok(s.best)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(graph_from_code(g.n(), canonical_code(g)?))
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, each in canonical form, sorted by canonical code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::UnsupportedSize(format!(
            "built-in enumeration covers 1 <= n <= {MAX_ENUMERATION_N}, got {n}; \
             generate larger graphs externally and pass them as graph6"
        )));
    }
    let total = pair_bits(n);
    let mut classes = BTreeSet::new();
    for code in 0..1u64 << total {
        let g = graph_from_code(n, code);
        if !g.is_connected() {
            continue;
        }
        let canon = canonical_code(&g)?;
        // a labeled graph whose code is already minimal represents its class
        if canon == code {
            classes.insert(code);
        }
    }
    Ok(classes.into_iter().map(|c| graph_from_code(n, c)).collect())
}

/// Non-isomorphic trees on `n` vertices in canonical form, sorted by code.
///
/// Built by attaching a leaf to every vertex of every tree on `n - 1`
/// vertices, which reaches every tree without scanning all graphs on `n`.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_TREE_N).contains(&n) {
        return Err(Error::UnsupportedSize(format!(
            "tree enumeration covers 1 <= n <= {MAX_TREE_N}, got {n}"
        )));
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for size in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = graph_from_code(size, code);
            for v in 0..size {
                let mut g = Graph::empty(size + 1)?;
                for (a, b) in base.edges() {
                    g.add_edge(a, b)?;
                }
                g.add_edge(v, size)?;
                next.insert(canonical_code(&g)?);
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|c| graph_from_code(n, c)).collect())
}
