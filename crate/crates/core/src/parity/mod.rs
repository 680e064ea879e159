//! Parity labelings and the signed graphs they induce.
//!
//! A labeling only contributes one bit per vertex to the signs (odd or even
//! label), so most operations work on a [`Bipartition`]: the set of
//! odd-labeled vertices, which always has `ceil(n/2)` members.

mod balance;

pub use balance::{all_negative_realizable, homogeneity, is_balanced, is_parity_realizable, Homogeneity};

use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, Graph};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Number of odd integers in `1..=n`.
#[inline]
pub fn odd_count(n: usize) -> usize {
    n.div_ceil(2)
}

/// Bijection from vertices `0..n` onto labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Labeling(Vec<usize>);

impl Labeling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for (v, &l) in labels.iter().enumerate() {
            if l == 0 || l > n {
                return Err(Error::invalid(format!("label {l} of vertex {v} is outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[l], true) {
                return Err(Error::invalid(format!("label {l} is used twice")));
            }
        }
        Ok(Labeling(labels))
    }

    /// `f(v) = v + 1`.
    pub fn identity(n: usize) -> Self {
        Labeling((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    /// Collects the odd-labeled vertices.
    pub fn to_bipartition(&self) -> Bipartition {
        let odd = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &l)| l % 2 == 1)
            .fold(0u64, |acc, (v, _)| acc | 1 << v);
        Bipartition { odd, n: self.0.len() }
    }
}

impl TryFrom<Vec<usize>> for Labeling {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Labeling::new(v)
    }
}

impl From<Labeling> for Vec<usize> {
    fn from(l: Labeling) -> Self {
        l.0
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Labeling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Labeling(Vec::new()));
        }
        let labels = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::invalid(format!("`{t}` is not a label"))))
            .collect::<Result<Vec<_>>>()?;
        Labeling::new(labels)
    }
}

/// The odd-labeled vertex class of some labeling on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bipartition {
    odd: u64,
    n: usize,
}

impl Bipartition {
    /// Checks that `odd` lies within `0..n` and has exactly `ceil(n/2)` members.
    pub fn new(odd: u64, n: usize) -> Result<Self> {
        if n > 64 || odd & !low_mask(n) != 0 {
            return Err(Error::invalid(format!("odd set {odd:#b} names vertices outside 0..{n}")));
        }
        let k = odd.count_ones() as usize;
        if k != odd_count(n) {
            return Err(Error::invalid(format!(
                "odd class has {k} vertices, a labeling of {n} vertices has {} odd labels",
                odd_count(n)
            )));
        }
        Ok(Bipartition { odd, n })
    }

    pub fn from_vertices(odd: &[usize], n: usize) -> Result<Self> {
        let mut mask = 0u64;
        for &v in odd {
            if v >= n.min(64) {
                return Err(Error::invalid(format!("vertex {v} outside 0..{n}")));
            }
            if mask >> v & 1 == 1 {
                return Err(Error::invalid(format!("vertex {v} listed twice")));
            }
            mask |= 1 << v;
        }
        Bipartition::new(mask, n)
    }

    pub(crate) fn from_mask_unchecked(odd: u64, n: usize) -> Self {
        debug_assert!(Bipartition::new(odd, n).is_ok());
        Bipartition { odd, n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn odd_mask(&self) -> u64 {
        self.odd
    }

    pub fn is_odd(&self, v: usize) -> bool {
        self.odd >> v & 1 == 1
    }

    /// Odd-class vertices in increasing order.
    pub fn odd_vertices(&self) -> Vec<usize> {
        bits(self.odd).collect()
    }

    /// Odd labels `1, 3, 5, ...` to the odd class and `2, 4, ...` to the rest,
    /// both in increasing vertex order.
    pub fn to_labeling(&self) -> Labeling {
        let mut next_odd = 1;
        let mut next_even = 2;
        let labels = (0..self.n)
            .map(|v| {
                let slot = if self.is_odd(v) { &mut next_odd } else { &mut next_even };
                let l = *slot;
                *slot += 2;
                l
            })
            .collect();
        Labeling(labels)
    }
}

/// Lexicographic order of two odd sets of equal size compared as sorted
/// vertex lists: the smaller set owns the lowest vertex where they differ.
#[inline]
pub(crate) fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a >> diff.trailing_zeros() & 1 == 1
}

pub fn labeling_to_bipartition(f: &Labeling) -> Bipartition {
    f.to_bipartition()
}

pub fn bipartition_to_labeling(b: &Bipartition) -> Labeling {
    b.to_labeling()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// A graph with a sign on every edge.
///
/// Negative edges are held as a symmetric sub-adjacency; every other edge is
/// positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    graph: Graph,
    negative: Vec<u64>,
}

impl SignedGraph {
    /// Signs listed in [`Graph::edges`] order.
    pub fn from_signs(graph: Graph, signs: &[Sign]) -> Result<Self> {
        let edges = graph.edges();
        if edges.len() != signs.len() {
            return Err(Error::invalid(format!(
                "graph has {} edges but {} signs were given",
                edges.len(),
                signs.len()
            )));
        }
        let mut negative = vec![0u64; graph.n()];
        for (&(u, v), &s) in edges.iter().zip(signs) {
            if s == Sign::Negative {
                negative[u] |= 1 << v;
                negative[v] |= 1 << u;
            }
        }
        Ok(SignedGraph { graph, negative })
    }

    pub fn all_negative(graph: Graph) -> Self {
        let negative = graph.adjacency().to_vec();
        SignedGraph { graph, negative }
    }

    pub fn all_positive(graph: Graph) -> Self {
        let negative = vec![0; graph.n()];
        SignedGraph { graph, negative }
    }

    /// Parses the `+`/`-` sign string paired with a graph in codec edge order.
    pub fn from_sign_str(graph: Graph, signs: &str) -> Result<Self> {
        let signs = signs
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Positive),
                '-' => Ok(Sign::Negative),
                other => Err(Error::invalid(format!("`{other}` is not a sign; use + or -"))),
            })
            .collect::<Result<Vec<_>>>()?;
        SignedGraph::from_signs(graph, &signs)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        if !self.graph.has_edge(u, v) {
            None
        } else if self.negative[u] >> v & 1 == 1 {
            Some(Sign::Negative)
        } else {
            Some(Sign::Positive)
        }
    }

    /// Negative neighbors of `v`.
    pub fn negative_neighbors(&self, v: usize) -> u64 {
        self.negative[v]
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.graph.edges().into_iter().map(|(u, v)| self.sign(u, v).unwrap()).collect()
    }

    pub fn sign_string(&self) -> String {
        self.signs().into_iter().map(Sign::as_char).collect()
    }

    pub fn negative_count(&self) -> usize {
        self.negative.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn positive_count(&self) -> usize {
        self.graph.m() - self.negative_count()
    }
}

/// Signs each edge `+` when its endpoints' labels share a parity, `-` otherwise.
pub fn induce_signs(g: &Graph, f: &Labeling) -> Result<SignedGraph> {
    if f.len() != g.n() {
        return Err(Error::invalid(format!(
            "labeling has {} entries for a graph on {} vertices",
            f.len(),
            g.n()
        )));
    }
    Ok(signs_from_bipartition(g, &f.to_bipartition()))
}

/// The signed graph whose negative edges are exactly the cut of `b`.
pub fn signs_from_bipartition(g: &Graph, b: &Bipartition) -> SignedGraph {
    let odd = b.odd_mask();
    let negative = (0..g.n())
        .map(|v| {
            let other = if b.is_odd(v) { !odd } else { odd };
            g.neighbors(v) & other
        })
        .collect();
    SignedGraph { graph: g.clone(), negative }
}

/// Edges with exactly one endpoint in the odd class.
pub fn negative_edge_count(g: &Graph, b: &Bipartition) -> Result<usize> {
    if b.n() != g.n() {
        return Err(Error::invalid(format!(
            "bipartition is over {} vertices, graph has {}",
            b.n(),
            g.n()
        )));
    }
    Ok(cut_size(g.adjacency(), b.odd_mask()))
}

/// Number of edges leaving `set`.
#[inline]
pub(crate) fn cut_size(adj: &[u64], set: u64) -> usize {
    let mut cut = 0;
    for v in bits(set) {
        cut += (adj[v] & !set).count_ones() as usize;
    }
    cut
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;

    fn fam(s: &str) -> Graph {
        build_family(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn c4_figure_labelings() {
        let c4 = fam("cycle:4");
        // edges in codec order: (0,1) (1,2) (0,3) (2,3)
        let s = induce_signs(&c4, &"1,2,3,4".parse().unwrap()).unwrap();
        assert_eq!(s.negative_count(), 4);
        let s = induce_signs(&c4, &"1,3,2,4".parse().unwrap()).unwrap();
        assert_eq!(s.sign(0, 1), Some(Sign::Positive));
        assert_eq!(s.sign(1, 2), Some(Sign::Negative));
        assert_eq!(s.sign(2, 3), Some(Sign::Positive));
        assert_eq!(s.sign(3, 0), Some(Sign::Negative));
    }

    #[test]
    fn k2_forced_negative() {
        let s = induce_signs(&fam("complete:2"), &Labeling::identity(2)).unwrap();
        assert_eq!(s.sign_string(), "-");
    }

    #[test]
    fn labeling_validation() {
        assert!(Labeling::new(vec![1, 1, 2]).is_err());
        assert!(Labeling::new(vec![0, 1]).is_err());
        assert!(Labeling::new(vec![1, 4, 2]).is_err());
        assert!("1,x".parse::<Labeling>().is_err());
        let g = fam("path:3");
        assert!(induce_signs(&g, &Labeling::identity(4)).is_err());
    }

    #[test]
    fn bipartition_conversions() {
        let f: Labeling = "1,2,3,4".parse().unwrap();
        assert_eq!(f.to_bipartition().odd_vertices(), vec![0, 2]);
        let b = Bipartition::from_vertices(&[0, 1], 4).unwrap();
        assert_eq!(b.to_labeling().labels(), &[1, 3, 2, 4]);
        assert!(Bipartition::from_vertices(&[0], 4).is_err());
        assert!(Bipartition::from_vertices(&[0, 4], 4).is_err());
        assert!(Bipartition::new(0b111, 4).is_err());
    }

    #[test]
    fn bipartition_roundtrip_exhaustive() {
        for n in 0..=8usize {
            for odd in 0..1u64 << n {
                if let Ok(b) = Bipartition::new(odd, n) {
                    let f = b.to_labeling();
                    assert!(Labeling::new(f.labels().to_vec()).is_ok());
                    assert_eq!(f.to_bipartition(), b);
                }
            }
        }
    }

    #[test]
    fn negative_counts() {
        let k4 = fam("complete:4");
        for odd in [0b0011u64, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100] {
            assert_eq!(negative_edge_count(&k4, &Bipartition::new(odd, 4).unwrap()).unwrap(), 4);
        }
        let p4 = fam("path:4");
        let b = Bipartition::from_vertices(&[0, 1], 4).unwrap();
        assert_eq!(negative_edge_count(&p4, &b).unwrap(), 1);
        let f = Labeling::new(vec![1, 3, 2, 4]).unwrap();
        assert_eq!(
            negative_edge_count(&p4, &f.to_bipartition()).unwrap(),
            induce_signs(&p4, &f).unwrap().negative_count()
        );
        assert!(negative_edge_count(&k4, &Bipartition::new(0b11, 3).unwrap()).is_err());
    }

    #[test]
    fn sign_string_roundtrip() {
        let g = fam("cycle:4");
        let s = SignedGraph::from_sign_str(g.clone(), "+--+").unwrap();
        assert_eq!(s.sign_string(), "+--+");
        assert!(SignedGraph::from_sign_str(g.clone(), "+-").is_err());
        assert!(SignedGraph::from_sign_str(g, "+-x+").is_err());
    }

    #[test]
    fn lex_order() {
        // {0,3} < {1,2}
        assert!(lex_less(0b1001, 0b0110));
        assert!(!lex_less(0b0110, 0b1001));
        // {0,1,4} < {0,2,3}
        assert!(lex_less(0b10011, 0b01101));
        assert!(!lex_less(0b11, 0b11));
    }
}
