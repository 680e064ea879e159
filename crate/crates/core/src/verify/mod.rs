//! Desk-scale checks of the known results about parity signed graphs, and a
//! scanner for graphs whose negative-edge count is the same under every
//! labeling.
//!
//! Every check evaluates its statement on concrete instances through the
//! public operations of [`crate::parity`] and [`crate::rna`]. A failing check
//! carries the first counterexample it met, with enough data (graph6, signs,
//! labeling) to reproduce the verdict independently.

mod scan;
mod theorems;

pub use scan::{conjecture_scan, scan_enumerated, tree_filter, Classification, ConjectureRecord, ScanReport, ScanSummary, SkippedRecord};
pub use theorems::{verify_theorems, THEOREM_IDS};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

/// Concrete data behind a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Witness {
    pub graph6: String,
    /// Sign string in codec edge order, when the claim is about a signature.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labeling: Option<String>,
    /// Odd-labeled vertices of a bipartition, when the claim is about counts.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_set: Option<Vec<usize>>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub id: String,
    pub statement: String,
    /// Parameter ranges that were checked.
    pub scope: String,
    pub status: Status,
    /// Instances evaluated.
    pub instances: usize,
    /// Instances on which the statement failed.
    pub failures: usize,
    /// First counterexample for a failing check; stored example data for the
    /// existential checks that pass.
    pub witness: Vec<Witness>,
}

impl TheoremCheck {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
