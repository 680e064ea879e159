//! Report lines for every subcommand.

use crate::output::{list, Row};
use parity_signed::rna::RnaReport;
use parity_signed::verify::{ConjectureRecord, TheoremCheck};
use serde::Serialize;

/// The serde name of a unit enum variant.
pub fn tag<T: Serialize>(t: &T) -> String {
    match serde_json::to_value(t) {
        Ok(serde_json::Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

#[derive(Debug, Serialize)]
pub struct GraphRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub source: String,
}

impl Row for GraphRow {
    const HEADER: &'static [&'static str] = &["graph6", "n", "m", "source"];
    fn fields(&self) -> Vec<String> {
        vec![self.graph6.clone(), self.n.to_string(), self.m.to_string(), self.source.clone()]
    }
    fn graph6(&self) -> &str {
        &self.graph6
    }
}

#[derive(Debug, Serialize)]
pub struct LabelRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub labeling: String,
    /// One sign per edge in graph6 edge order.
    pub signs: String,
    pub negative: usize,
    pub positive: usize,
    pub homogeneity: String,
}

impl Row for LabelRow {
    const HEADER: &'static [&'static str] =
        &["graph6", "n", "m", "labeling", "signs", "negative", "positive", "homogeneity"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.labeling.clone(),
            self.signs.clone(),
            self.negative.to_string(),
            self.positive.to_string(),
            self.homogeneity.clone(),
        ]
    }
    fn graph6(&self) -> &str {
        &self.graph6
    }
}

impl Row for RnaReport {
    const HEADER: &'static [&'static str] =
        &["graph6", "n", "m", "sigma_minus", "sigma_plus", "spectrum", "witness", "method", "seed"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.sigma_minus.to_string(),
            self.sigma_plus.to_string(),
            self.spectrum.as_deref().map(list).unwrap_or_default(),
            list(&self.witness),
            tag(&self.method),
            self.seed.map(|s| s.to_string()).unwrap_or_default(),
        ]
    }
    fn graph6(&self) -> &str {
        &self.graph6
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub values: Vec<usize>,
    pub min: usize,
    pub max: usize,
    pub singleton: bool,
}

impl Row for SpectrumRow {
    const HEADER: &'static [&'static str] = &["graph6", "n", "m", "values", "min", "max", "singleton"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            list(&self.values),
            self.min.to_string(),
            self.max.to_string(),
            self.singleton.to_string(),
        ]
    }
    fn graph6(&self) -> &str {
        &self.graph6
    }
}

#[derive(Debug, Serialize)]
pub struct RealizableRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub signs: String,
    pub homogeneity: String,
    pub balanced: bool,
    pub realizable: bool,
    /// A labeling inducing the signature, when one exists.
    pub labeling: Option<String>,
}

impl Row for RealizableRow {
    const HEADER: &'static [&'static str] =
        &["graph6", "n", "m", "signs", "homogeneity", "balanced", "realizable", "labeling"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.signs.clone(),
            self.homogeneity.clone(),
            self.balanced.to_string(),
            self.realizable.to_string(),
            self.labeling.clone().unwrap_or_default(),
        ]
    }
    fn graph6(&self) -> &str {
        &self.graph6
    }
}

impl Row for TheoremCheck {
    const HEADER: &'static [&'static str] = &[
        "id",
        "status",
        "instances",
        "failures",
        "scope",
        "witness_graph6",
        "witness_signs",
        "witness_labeling",
        "witness_odd_set",
        "note",
    ];
    fn fields(&self) -> Vec<String> {
        let w = self.witness.first();
        vec![
            self.id.clone(),
            tag(&self.status),
            self.instances.to_string(),
            self.failures.to_string(),
            self.scope.clone(),
            w.map(|w| w.graph6.clone()).unwrap_or_default(),
            w.and_then(|w| w.signs.clone()).unwrap_or_default(),
            w.and_then(|w| w.labeling.clone()).unwrap_or_default(),
            w.and_then(|w| w.odd_set.as_deref().map(list)).unwrap_or_default(),
            w.map(|w| w.note.clone()).unwrap_or_default(),
        ]
    }
    fn graph6(&self) -> &str {
        self.witness.first().map_or("", |w| w.graph6.as_str())
    }
}

impl Row for ConjectureRecord {
    const HEADER: &'static [&'static str] =
        &["graph6", "n", "m", "spectrum", "min", "max", "singleton", "classification"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            list(&self.spectrum.values),
            self.spectrum.min.to_string(),
            self.spectrum.max.to_string(),
            self.singleton.to_string(),
            tag(&self.classification),
        ]
    }
    fn graph6(&self) -> &str {
        &self.graph6
    }
}
