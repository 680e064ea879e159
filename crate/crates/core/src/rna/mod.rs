//! Minimum and maximum negative-edge counts over all parity labelings.
//!
//! The rna number of a graph is the fewest negative edges any labeling can
//! induce; the adhika number is the most positive edges, i.e. `m` minus the
//! rna number. Both depend only on the underlying graph. Since a labeling's
//! negative edges are the cut of its odd class, the rna number is a minimum
//! cut over balanced bipartitions (odd class of size `ceil(n/2)`).

mod exact;
mod families;
mod heuristic;

pub use exact::{adhika, adhika_with_limit, rna_exact, rna_exact_with_limit, sigma_spectrum, sigma_spectrum_with_limit};
pub use families::{closed_form_rna, proof_labeling};
pub use heuristic::{rna_heuristic, DEFAULT_RESTARTS, DEFAULT_SEED};

use crate::parity::Bipartition;
use serde::{Deserialize, Serialize};

/// Largest vertex count the exact solvers accept by default.
/// `C(24, 12)` is about 2.7 million bipartitions.
pub const DEFAULT_EXACT_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Heuristic,
}

/// A negative-edge count together with a bipartition attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RnaResult {
    pub value: usize,
    pub witness: Bipartition,
    pub method: Method,
    /// Bipartitions evaluated while searching.
    pub examined: u64,
}

/// Every negative-edge count some labeling induces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    /// Sorted, deduplicated.
    pub values: Vec<usize>,
    pub min: usize,
    pub max: usize,
    /// The count does not depend on the labeling at all.
    pub singleton: bool,
}

impl SpectrumReport {
    pub(crate) fn from_values(values: Vec<usize>) -> Self {
        debug_assert!(!values.is_empty());
        SpectrumReport {
            min: values[0],
            max: *values.last().unwrap(),
            singleton: values.len() == 1,
            values,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.values.binary_search(&v).is_ok()
    }
}

/// One line of an rna/spectrum report. `sigma_plus` is `m - sigma_minus`; for
/// heuristic results both are bounds rather than exact values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RnaReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub sigma_minus: usize,
    pub sigma_plus: usize,
    pub spectrum: Option<Vec<usize>>,
    /// Odd-labeled vertices of the witness, sorted.
    pub witness: Vec<usize>,
    pub method: Method,
    pub seed: Option<u64>,
}

impl RnaReport {
    pub fn new(
        g: &crate::Graph,
        result: &RnaResult,
        spectrum: Option<&SpectrumReport>,
        seed: Option<u64>,
    ) -> crate::Result<Self> {
        Ok(RnaReport {
            graph6: crate::graph::graph6::write_graph6(g)?,
            n: g.n(),
            m: g.m(),
            sigma_minus: result.value,
            sigma_plus: g.m() - result.value,
            spectrum: spectrum.map(|s| s.values.clone()),
            witness: result.witness.odd_vertices(),
            method: result.method,
            seed: (result.method == Method::Heuristic).then_some(seed).flatten(),
        })
    }
}
