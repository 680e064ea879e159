use super::{Method, RnaResult, SpectrumReport, DEFAULT_EXACT_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parity::{cut_size, lex_less, odd_count, Bipartition};
use rayon::prelude::*;

/// Below this order the enumeration runs on the calling thread.
const PARALLEL_FROM: usize = 18;

/// Calls `f` with every `k`-subset of `0..width`, in increasing numeric order.
fn for_each_subset(width: usize, k: usize, mut f: impl FnMut(u64)) {
    if k > width {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit: u128 = 1 << width;
    let mut s: u128 = (1 << k) - 1;
    while s < limit {
        f(s as u64);
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

/// Visits every balanced bipartition of `0..n`, split into independent chunks
/// by the smallest odd-class vertex. Each chunk folds into its own `T`.
fn fold_bipartitions<T, F, M>(n: usize, init: impl Fn() -> T + Sync, visit: F, merge: M) -> T
where
    T: Send,
    F: Fn(&mut T, u64) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    let k = odd_count(n);
    if k == 0 {
        let mut acc = init();
        visit(&mut acc, 0);
        return acc;
    }
    let chunk = |first: usize| {
        let mut acc = init();
        for_each_subset(n - first - 1, k - 1, |rest| visit(&mut acc, 1 << first | rest << (first + 1)));
        acc
    };
    let firsts = 0..=n - k;
    if n >= PARALLEL_FROM {
        firsts.into_par_iter().map(chunk).reduce(&init, &merge)
    } else {
        firsts.map(chunk).fold(init(), &merge)
    }
}

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::Capacity { n: g.n(), limit });
    }
    if g.n() == 0 {
        return Err(Error::invalid("the rna number needs at least one vertex"));
    }
    Ok(())
}

#[derive(Clone, Copy)]
struct Best {
    value: usize,
    odd: u64,
    examined: u64,
}

impl Best {
    const NONE: Best = Best { value: usize::MAX, odd: 0, examined: 0 };

    fn offer(&mut self, value: usize, odd: u64) {
        self.examined += 1;
        if value < self.value || (value == self.value && lex_less(odd, self.odd)) {
            self.value = value;
            self.odd = odd;
        }
    }

    fn merge(mut self, other: Best) -> Best {
        let examined = self.examined + other.examined;
        if other.value < self.value || (other.value == self.value && lex_less(other.odd, self.odd)) {
            self = other;
        }
        self.examined = examined;
        self
    }
}

pub fn rna_exact(g: &Graph) -> Result<RnaResult> {
    rna_exact_with_limit(g, DEFAULT_EXACT_LIMIT)
}

/// Minimum cut over all balanced bipartitions. Among optimal bipartitions the
/// witness is the one whose sorted odd class is lexicographically smallest, so
/// serial and parallel runs agree.
pub fn rna_exact_with_limit(g: &Graph, limit: usize) -> Result<RnaResult> {
    check_limit(g, limit)?;
    let adj = g.adjacency();
    let best = fold_bipartitions(
        g.n(),
        || Best::NONE,
        |b, odd| b.offer(cut_size(adj, odd), odd),
        Best::merge,
    );
    Ok(RnaResult {
        value: best.value,
        witness: Bipartition::from_mask_unchecked(best.odd, g.n()),
        method: Method::Exact,
        examined: best.examined,
    })
}

pub fn sigma_spectrum(g: &Graph) -> Result<SpectrumReport> {
    sigma_spectrum_with_limit(g, DEFAULT_EXACT_LIMIT)
}

/// The set of cut sizes over all balanced bipartitions.
pub fn sigma_spectrum_with_limit(g: &Graph, limit: usize) -> Result<SpectrumReport> {
    check_limit(g, limit)?;
    let adj = g.adjacency();
    let m = g.m();
    let seen = fold_bipartitions(
        g.n(),
        || vec![false; m + 1],
        |seen, odd| seen[cut_size(adj, odd)] = true,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x |= y);
            a
        },
    );
    let values = seen.iter().enumerate().filter(|(_, &s)| s).map(|(v, _)| v).collect();
    Ok(SpectrumReport::from_values(values))
}

pub fn adhika(g: &Graph) -> Result<usize> {
    adhika_with_limit(g, DEFAULT_EXACT_LIMIT)
}

/// Most positive edges any labeling induces: `m - rna`.
pub fn adhika_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    Ok(g.m() - rna_exact_with_limit(g, limit)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;

    fn fam(s: &str) -> Graph {
        build_family(&s.parse().unwrap()).unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn subset_enumeration_counts_and_order() {
        let mut seen = Vec::new();
        for_each_subset(5, 2, |s| seen.push(s));
        assert_eq!(seen.len(), 10);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        assert!(seen.iter().all(|s| s.count_ones() == 2));
        let mut count = 0;
        for_each_subset(64, 1, |_| count += 1);
        assert_eq!(count, 64);
    }

    #[test]
    fn every_bipartition_examined() {
        for n in 1..=20u64 {
            let g = Graph::empty(n as usize).unwrap();
            let r = rna_exact(&g).unwrap();
            assert_eq!(r.examined, binom(n, n.div_ceil(2)), "n={n}");
            assert_eq!(r.value, 0);
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(rna_exact(&fam("complete_bipartite:2,3")).unwrap().value, 3);
        assert_eq!(rna_exact(&fam("path:4")).unwrap().value, 1);
        assert_eq!(sigma_spectrum(&fam("path:4")).unwrap().values, vec![1, 2, 3]);
        assert_eq!(sigma_spectrum(&fam("complete:4")).unwrap().values, vec![4]);
        assert_eq!(sigma_spectrum(&fam("star:3")).unwrap().values, vec![2]);
        assert_eq!(adhika(&fam("cycle:6")).unwrap(), 4);
        assert_eq!(adhika(&fam("complete:2")).unwrap(), 0);
        assert_eq!(adhika(&fam("complete:4")).unwrap(), 2);
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        // P_4 optimum 1 is attained by {0,1} and {2,3}; {0,1} wins
        let r = rna_exact(&fam("path:4")).unwrap();
        assert_eq!(r.witness.odd_vertices(), vec![0, 1]);
    }

    #[test]
    fn parallel_and_serial_agree() {
        let g = fam("cycle:20");
        let r = rna_exact(&g).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.odd_vertices(), (0..10).collect::<Vec<_>>());
        assert_eq!(r.examined, binom(20, 10));
    }

    #[test]
    fn capacity_and_empty() {
        let g = fam("path:25");
        assert!(matches!(rna_exact(&g), Err(Error::Capacity { n: 25, limit: 24 })));
        assert!(rna_exact_with_limit(&fam("path:6"), 5).unwrap_err().is_capacity());
        assert!(sigma_spectrum(&Graph::empty(0).unwrap()).is_err());
        assert_eq!(rna_exact(&Graph::empty(1).unwrap()).unwrap().value, 0);
    }
}
