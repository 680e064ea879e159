use super::{odd_count, Bipartition, Labeling, SignedGraph};
use crate::graph::{bits, Graph};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Homogeneity {
    AllPositive,
    AllNegative,
    Heterogeneous,
    /// No edges at all, so both all-positive and all-negative.
    Edgeless,
}

pub fn homogeneity(s: &SignedGraph) -> Homogeneity {
    let neg = s.negative_count();
    let m = s.graph().m();
    if m == 0 {
        Homogeneity::Edgeless
    } else if neg == 0 {
        Homogeneity::AllPositive
    } else if neg == m {
        Homogeneity::AllNegative
    } else {
        Homogeneity::Heterogeneous
    }
}

/// A 2-coloring in which positive edges join equal colors and negative edges
/// join different colors, if one exists.
///
/// The smallest vertex of every component gets `false`, so within a component
/// the coloring is unique.
pub fn is_balanced(s: &SignedGraph) -> Option<Vec<bool>> {
    let g = s.graph();
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        stack.push(root);
        while let Some(v) = stack.pop() {
            let cv = color[v].unwrap();
            let neg = s.negative_neighbors(v);
            for u in bits(g.neighbors(v)) {
                let want = cv ^ (neg >> u & 1 == 1);
                match color[u] {
                    None => {
                        color[u] = Some(want);
                        stack.push(u);
                    }
                    Some(cu) if cu != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

/// A labeling that induces exactly `s`, if any.
///
/// `s` must be balanced; each component then splits into two color classes
/// `(a, b)` whose roles may be swapped independently. The signature is
/// realizable iff some choice of one class per component has `ceil(n/2)`
/// vertices in total, which is a subset-sum over the components.
pub fn is_parity_realizable(s: &SignedGraph) -> Option<Labeling> {
    let coloring = is_balanced(s)?;
    let g = s.graph();
    let n = g.n();
    let target = odd_count(n);

    // (false-colored class, true-colored class) per component
    let comps: Vec<(u64, u64)> = g
        .components()
        .into_iter()
        .map(|c| {
            let light = bits(c).filter(|&v| !coloring[v]).fold(0u64, |acc, v| acc | 1 << v);
            (light, c & !light)
        })
        .collect();

    // reach[i][t]: the first i components can put exactly t vertices in the odd class
    let mut reach = vec![vec![false; target + 1]; comps.len() + 1];
    reach[0][0] = true;
    for (i, &(a, b)) in comps.iter().enumerate() {
        let (a, b) = (a.count_ones() as usize, b.count_ones() as usize);
        for t in 0..=target {
            if reach[i][t] {
                if t + a <= target {
                    reach[i + 1][t + a] = true;
                }
                if t + b <= target {
                    reach[i + 1][t + b] = true;
                }
            }
        }
    }
    if !reach[comps.len()][target] {
        return None;
    }

    let mut odd = 0u64;
    let mut t = target;
    for (i, &(a, b)) in comps.iter().enumerate().rev() {
        let ca = a.count_ones() as usize;
        let cb = b.count_ones() as usize;
        if t >= ca && reach[i][t - ca] {
            odd |= a;
            t -= ca;
        } else {
            debug_assert!(t >= cb && reach[i][t - cb]);
            odd |= b;
            t -= cb;
        }
    }
    Some(Bipartition::from_mask_unchecked(odd, n).to_labeling())
}

/// Whether the signature making every edge of `g` negative is induced by some
/// labeling.
pub fn all_negative_realizable(g: &Graph) -> bool {
    is_parity_realizable(&SignedGraph::all_negative(g.clone())).is_some()
}

#[cfg(test)]
mod tests {
    use super::super::induce_signs;
    use super::*;
    use crate::graph::build_family;

    fn fam(s: &str) -> Graph {
        build_family(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn homogeneity_classes() {
        let p3 = SignedGraph::all_negative(fam("path:3"));
        assert_eq!(homogeneity(&p3), Homogeneity::AllNegative);
        let c4 = induce_signs(&fam("cycle:4"), &"1,3,2,4".parse().unwrap()).unwrap();
        assert_eq!(homogeneity(&c4), Homogeneity::Heterogeneous);
        let k1 = SignedGraph::all_positive(Graph::empty(1).unwrap());
        assert_eq!(homogeneity(&k1), Homogeneity::Edgeless);
        assert_eq!(homogeneity(&SignedGraph::all_positive(fam("path:2"))), Homogeneity::AllPositive);
    }

    #[test]
    fn balance_examples() {
        let c3 = fam("cycle:3");
        let one_neg = SignedGraph::from_sign_str(c3, "-++").unwrap();
        assert!(is_balanced(&one_neg).is_none());
        let c4 = SignedGraph::all_negative(fam("cycle:4"));
        assert_eq!(is_balanced(&c4).unwrap(), vec![false, true, false, true]);
    }

    #[test]
    fn realizability_examples() {
        assert!(is_parity_realizable(&SignedGraph::all_negative(fam("cycle:3"))).is_none());
        assert!(is_parity_realizable(&SignedGraph::all_positive(fam("complete:2"))).is_none());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s = SignedGraph::all_positive(two_k2.clone());
        let f = is_parity_realizable(&s).unwrap();
        assert_eq!(induce_signs(&two_k2, &f).unwrap(), s);
    }

    #[test]
    fn all_negative_families() {
        assert!(all_negative_realizable(&fam("cycle:6")));
        assert!(!all_negative_realizable(&fam("cycle:5")));
        assert!(all_negative_realizable(&fam("corona_cycle_k1:4")));
        assert!(!all_negative_realizable(&fam("corona_cycle_k1:3")));
        assert!(!all_negative_realizable(&fam("star:3")));
        assert!(all_negative_realizable(&fam("path:5")));
    }

    #[test]
    fn witness_reproduces_signature() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (3, 4), (5, 6)]).unwrap();
        let s = SignedGraph::from_signs(
            g.clone(),
            &[super::super::Sign::Negative, super::super::Sign::Positive, super::super::Sign::Negative, super::super::Sign::Positive],
        )
        .unwrap();
        let f = is_parity_realizable(&s).unwrap();
        assert_eq!(induce_signs(&g, &f).unwrap(), s);
    }
}
