//! Brute-force oracles that share no code paths with the solvers they check.
#![allow(dead_code)]

use parity_signed::parity::induce_signs;
use parity_signed::{Graph, Labeling};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Calls `f` with every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Every negative-edge count over all `n!` labelings, computed through
/// `induce_signs`.
pub fn labeling_spectrum(g: &Graph) -> BTreeSet<usize> {
    let mut seen = BTreeSet::new();
    for_each_permutation(g.n(), |p| {
        let f = Labeling::new(p.iter().map(|&x| x + 1).collect()).unwrap();
        seen.insert(induce_signs(g, &f).unwrap().negative_count());
    });
    seen
}

pub fn labeling_min(g: &Graph) -> usize {
    *labeling_spectrum(g).first().unwrap()
}

/// Edge list as plain pairs, read from the adjacency queries only.
pub fn edge_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| g.has_edge(u, v)).collect()
}

fn connected_by_search(n: usize, edges: &[(usize, usize)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == v { b } else if b == v { a } else { continue };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Labeled graphs on `n` vertices grouped into isomorphism classes by
/// marking whole permutation orbits. Only connected classes are kept.
pub struct BruteClasses {
    slots: Vec<(usize, usize)>,
    class_of: Vec<Option<usize>>,
    pub reps: Vec<Graph>,
}

impl BruteClasses {
    pub fn new(n: usize) -> Self {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let index = |u: usize, v: usize| slots.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
        let mut class_of = vec![None; 1 << slots.len()];
        let mut reps = Vec::new();
        for mask in 0..class_of.len() {
            if class_of[mask].is_some() {
                continue;
            }
            let edges: Vec<(usize, usize)> =
                slots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            if !connected_by_search(n, &edges) {
                continue;
            }
            let id = reps.len();
            for_each_permutation(n, |p| {
                let image = edges.iter().fold(0usize, |acc, &(u, v)| acc | 1 << index(p[u], p[v]));
                class_of[image] = Some(id);
            });
            reps.push(Graph::from_edges(n, &edges).unwrap());
        }
        BruteClasses { slots, class_of, reps }
    }

    /// The class of a connected graph, by looking up its exact edge set.
    pub fn class(&self, g: &Graph) -> Option<usize> {
        let mask = self.slots.iter().enumerate().filter(|(_, &(u, v))| g.has_edge(u, v)).fold(0, |acc, (i, _)| acc | 1 << i);
        self.class_of[mask]
    }
}

/// A random spanning tree plus independent extra edges with probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    for v in 0..n {
        for u in 0..v {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Any graph: each edge independently with probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_labeling(rng: &mut ChaCha8Rng, n: usize) -> Labeling {
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    Labeling::new(labels).unwrap()
}
