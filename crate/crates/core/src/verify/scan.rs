use crate::error::{Error, Result};
use crate::graph::graph6::write_graph6;
use crate::graph::{enumerate_connected, Graph};
use crate::rna::{sigma_spectrum_with_limit, SpectrumReport};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// How the condition "the rna number equals the number of negative edges" is
/// read by the scanner: the negative-edge count is the same under every
/// labeling, i.e. the spectrum is a single value.
pub const INTERPRETATION: &str = "singleton = every parity labeling induces the same number of negative edges";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// `m = n(n-1)/2`. Takes precedence, so `K_2 = K_{1,1}` is `Complete`.
    Complete,
    /// A star with an odd number of leaves.
    OddStar,
    Other,
}

impl Classification {
    pub fn of(g: &Graph) -> Self {
        if g.is_complete() {
            Classification::Complete
        } else if is_odd_star(g) {
            Classification::OddStar
        } else {
            Classification::Other
        }
    }
}

fn is_odd_star(g: &Graph) -> bool {
    g.star_leaves().is_some_and(|k| k % 2 == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub spectrum: SpectrumReport,
    pub singleton: bool,
    pub classification: Classification,
}

/// An input that was not scanned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedRecord {
    /// Line number or graph6 string naming the input.
    pub source: String,
    pub reason: String,
    /// Set when the skip was caused by a size bound.
    #[serde(default)]
    pub capacity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub interpretation: String,
    pub scanned: usize,
    pub singletons: usize,
    /// graph6 of every singleton-spectrum complete graph.
    pub complete: Vec<String>,
    /// graph6 of every singleton-spectrum star with an odd leaf count. `K_2`
    /// is listed here and under `complete`.
    pub odd_star: Vec<String>,
    /// Singleton-spectrum graphs that are neither: counterexample candidates,
    /// reported with their full records.
    pub other: Vec<ConjectureRecord>,
    /// Disconnected inputs.
    pub skipped: Vec<SkippedRecord>,
    /// Unreadable or oversized inputs.
    pub errors: Vec<SkippedRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    /// Sorted by `(n, graph6)`.
    pub records: Vec<ConjectureRecord>,
    pub summary: ScanSummary,
}

impl ScanReport {
    pub fn has_candidates(&self) -> bool {
        !self.summary.other.is_empty()
    }
}

/// Keeps the connected acyclic graphs.
pub fn tree_filter<I: IntoIterator<Item = Graph>>(graphs: I) -> impl Iterator<Item = Graph> {
    graphs.into_iter().filter(Graph::is_tree)
}

/// Computes the spectrum of every connected input and buckets the graphs whose
/// spectrum is a single value. Inputs are `(source, graph or parse error)`;
/// disconnected graphs are skipped and bad records are reported without
/// stopping the scan.
pub fn conjecture_scan(inputs: Vec<(String, Result<Graph>)>, limit: usize) -> ScanReport {
    let mut skipped = Vec::new();
    let mut errors = Vec::new();
    let mut graphs = Vec::new();
    for (source, parsed) in inputs {
        match parsed {
            Err(e) => errors.push(SkippedRecord { source, capacity: e.is_capacity(), reason: e.to_string() }),
            Ok(g) if !g.is_connected() || g.n() == 0 => {
                skipped.push(SkippedRecord { source, reason: "not connected".into(), capacity: false })
            }
            Ok(g) => graphs.push((source, g)),
        }
    }

    let outcomes: Vec<(String, Result<ConjectureRecord>)> = graphs
        .into_par_iter()
        .map(|(source, g)| {
            let rec = sigma_spectrum_with_limit(&g, limit).and_then(|spectrum| {
                Ok(ConjectureRecord {
                    graph6: write_graph6(&g)?,
                    n: g.n(),
                    m: g.m(),
                    singleton: spectrum.singleton,
                    classification: Classification::of(&g),
                    spectrum,
                })
            });
            (source, rec)
        })
        .collect();

    let mut records = Vec::new();
    for (source, rec) in outcomes {
        match rec {
            Ok(r) => records.push(r),
            Err(e) => errors.push(SkippedRecord { source, capacity: e.is_capacity(), reason: e.to_string() }),
        }
    }
    records.sort_by(|a, b| (a.n, &a.graph6).cmp(&(b.n, &b.graph6)));

    let singles: Vec<&ConjectureRecord> = records.iter().filter(|r| r.singleton).collect();
    let summary = ScanSummary {
        interpretation: INTERPRETATION.to_string(),
        scanned: records.len(),
        singletons: singles.len(),
        complete: singles
            .iter()
            .filter(|r| r.m == r.n * r.n.saturating_sub(1) / 2)
            .map(|r| r.graph6.clone())
            .collect(),
        odd_star: singles
            .iter()
            .filter(|r| crate::graph::graph6::parse_graph6_str(&r.graph6).is_ok_and(|g| is_odd_star(&g)))
            .map(|r| r.graph6.clone())
            .collect(),
        other: singles
            .iter()
            .filter(|r| r.classification == Classification::Other)
            .map(|r| (*r).clone())
            .collect(),
        skipped,
        errors,
    };
    ScanReport { records, summary }
}

/// Scans every connected graph on `1..=max_n` vertices from the built-in
/// enumeration.
pub fn scan_enumerated(max_n: usize, limit: usize) -> Result<ScanReport> {
    if max_n == 0 {
        return Err(Error::invalid("scan bound must be at least 1"));
    }
    let mut inputs = Vec::new();
    for n in 1..=max_n {
        for g in enumerate_connected(n)? {
            inputs.push((write_graph6(&g)?, Ok(g)));
        }
    }
    Ok(conjecture_scan(inputs, limit))
}
