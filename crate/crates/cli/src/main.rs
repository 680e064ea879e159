//! `psg`: constructions, solvers and checks for parity signed graphs.

mod input;
mod output;
mod rows;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use input::InputArgs;
use output::{Emitter, Format};
use parity_signed::graph::graph6::write_graph6;
use parity_signed::graph::{build_family, canonical_form, enumerate_connected, enumerate_trees};
use parity_signed::parity::{homogeneity, induce_signs, is_balanced, is_parity_realizable};
use parity_signed::rna::{
    proof_labeling, rna_exact_with_limit, rna_heuristic, sigma_spectrum_with_limit, RnaReport, DEFAULT_RESTARTS,
    DEFAULT_SEED,
};
use parity_signed::verify::{conjecture_scan, verify_theorems, ScanSummary};
use parity_signed::{FamilySpec, Graph, Labeling, SignedGraph, DEFAULT_EXACT_LIMIT};
use rows::{tag, GraphRow, LabelRow, RealizableRow, SpectrumRow};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "psg", version, about = "Parity signed graphs: labelings, rna numbers and theorem checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Report format. Defaults to json-lines, or graph6 for `gen` and `convert`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest order the exact solvers accept.
    #[arg(long, global = true, default_value_t = DEFAULT_EXACT_LIMIT)]
    limit: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit graphs from a family or from the built-in enumeration.
    Gen(GenArgs),
    /// Apply a labeling and print the induced signed graph.
    Label {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated labels in vertex order. Families default to their proof labeling.
        #[arg(long)]
        labels: Option<Labeling>,
    },
    /// Minimum number of negative edges over all labelings.
    Rna {
        #[command(flatten)]
        input: InputArgs,
        /// Use the seeded local search instead of exhaustive search.
        #[arg(long)]
        heuristic: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_RESTARTS)]
        restarts: usize,
    },
    /// Every negative-edge count some labeling induces.
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Whether a signature is induced by some labeling.
    Realizable {
        #[command(flatten)]
        input: InputArgs,
        /// One `+`/`-` per edge in graph6 edge order. Defaults to all negative.
        #[arg(long, conflicts_with = "all_positive")]
        signs: Option<String>,
        /// Test the all-positive signature.
        #[arg(long)]
        all_positive: bool,
    },
    /// Run the theorem checks.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Bucket the graphs whose negative-edge count does not depend on the labeling.
    Scan {
        #[command(flatten)]
        input: InputArgs,
        /// Scan every connected graph on 1..=N vertices.
        #[arg(long, value_name = "N", conflicts_with = "source")]
        enumerate: Option<usize>,
    },
    /// Read graph6 records and write them back.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        /// Relabel each graph to its canonical form (at most 11 vertices).
        #[arg(long)]
        canonical: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GenArgs {
    #[arg(long, value_name = "NAME:PARAMS")]
    family: Option<FamilySpec>,
    /// Every connected graph on N vertices, one per isomorphism class.
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// Every tree on N vertices, one per isomorphism class.
    #[arg(long, value_name = "N")]
    trees: Option<usize>,
}

/// Successful runs end either plainly or with a discovery worth flagging.
enum Outcome {
    Done,
    Flagged,
}

const EXIT_INPUT: u8 = 1;
const EXIT_CAPACITY: u8 = 2;
const EXIT_FLAGGED: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Flagged) => ExitCode::from(EXIT_FLAGGED),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_capacity(&e) { EXIT_CAPACITY } else { EXIT_INPUT })
        }
    }
}

/// Raised after a scan in which some records were over the exact limit.
#[derive(Debug)]
struct OverLimit(usize);

impl std::fmt::Display for OverLimit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "some records exceed --limit {}", self.0)
    }
}

impl std::error::Error for OverLimit {}

fn is_capacity(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.is::<OverLimit>() || c.downcast_ref::<parity_signed::Error>().is_some_and(|pe| pe.is_capacity())
    })
}

fn run(cli: Cli) -> Result<Outcome> {
    let default_format = match cli.command {
        Command::Gen(_) | Command::Convert { .. } => Format::Graph6,
        _ => Format::JsonLines,
    };
    let mut out = Emitter::new(cli.out.as_deref(), cli.format.unwrap_or(default_format))?;
    let limit = cli.limit;
    let outcome = match cli.command {
        Command::Gen(args) => {
            out.rows(&gen(&args)?)?;
            Outcome::Done
        }
        Command::Label { input, labels } => {
            let mut rows = Vec::new();
            for rec in input.graphs()? {
                let f = match (&labels, &rec.family) {
                    (Some(l), _) => l.clone(),
                    (None, Some(fam)) => proof_labeling(fam).with_context(|| format!("record {}", rec.name))?,
                    (None, None) => bail!("--labels is required unless the input is a --family"),
                };
                let s = induce_signs(&rec.graph, &f).with_context(|| format!("record {}", rec.name))?;
                rows.push(LabelRow {
                    graph6: write_graph6(&rec.graph)?,
                    n: rec.graph.n(),
                    m: rec.graph.m(),
                    labeling: f.to_string(),
                    signs: s.sign_string(),
                    negative: s.negative_count(),
                    positive: s.positive_count(),
                    homogeneity: tag(&homogeneity(&s)),
                });
            }
            out.rows(&rows)?;
            Outcome::Done
        }
        Command::Rna { input, heuristic, seed, restarts } => {
            let mut rows = Vec::new();
            for rec in input.graphs()? {
                let g = &rec.graph;
                let report = if heuristic {
                    rna_heuristic(g, seed, restarts).and_then(|r| RnaReport::new(g, &r, None, Some(seed)))
                } else {
                    rna_exact_with_limit(g, limit).and_then(|r| {
                        let spectrum = sigma_spectrum_with_limit(g, limit)?;
                        RnaReport::new(g, &r, Some(&spectrum), None)
                    })
                };
                rows.push(report.with_context(|| format!("record {}", rec.name))?);
            }
            out.rows(&rows)?;
            Outcome::Done
        }
        Command::Spectrum { input } => {
            let mut rows = Vec::new();
            for rec in input.graphs()? {
                let s = sigma_spectrum_with_limit(&rec.graph, limit)
                    .with_context(|| format!("record {}", rec.name))?;
                rows.push(SpectrumRow {
                    graph6: write_graph6(&rec.graph)?,
                    n: rec.graph.n(),
                    m: rec.graph.m(),
                    values: s.values,
                    min: s.min,
                    max: s.max,
                    singleton: s.singleton,
                });
            }
            out.rows(&rows)?;
            Outcome::Done
        }
        Command::Realizable { input, signs, all_positive } => {
            let mut rows = Vec::new();
            for rec in input.graphs()? {
                let g = rec.graph;
                let s = match (&signs, all_positive) {
                    (Some(text), _) => {
                        SignedGraph::from_sign_str(g.clone(), text).with_context(|| format!("--signs for record {}", rec.name))?
                    }
                    (None, true) => SignedGraph::all_positive(g.clone()),
                    (None, false) => SignedGraph::all_negative(g.clone()),
                };
                let labeling = is_parity_realizable(&s);
                rows.push(RealizableRow {
                    graph6: write_graph6(&g)?,
                    n: g.n(),
                    m: g.m(),
                    signs: s.sign_string(),
                    homogeneity: tag(&homogeneity(&s)),
                    balanced: is_balanced(&s).is_some(),
                    realizable: labeling.is_some(),
                    labeling: labeling.map(|f| f.to_string()),
                });
            }
            out.rows(&rows)?;
            Outcome::Done
        }
        Command::Verify { max_n } => {
            let checks = verify_theorems(max_n)?;
            out.rows(&checks)?;
            let failed: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.id.as_str()).collect();
            if failed.is_empty() {
                Outcome::Done
            } else {
                eprintln!("failed checks: {}", failed.join(", "));
                Outcome::Flagged
            }
        }
        Command::Scan { input, enumerate } => {
            let inputs = match enumerate {
                Some(n) => {
                    if n == 0 {
                        bail!("--enumerate must be at least 1");
                    }
                    let mut v = Vec::new();
                    for k in 1..=n {
                        for g in enumerate_connected(k).context("--enumerate")? {
                            v.push((write_graph6(&g)?, Ok(g)));
                        }
                    }
                    v
                }
                None if input.is_given() => input.sources()?.into_iter().map(|s| (s.name, s.graph)).collect(),
                None => bail!("no input: pass one of --enumerate, --family, --in, --g6"),
            };
            let report = conjecture_scan(inputs, limit);
            out.rows(&report.records)?;
            let s = &report.summary;
            if !out.summary(s, &summary_text(s))? {
                eprintln!("summary: {}", serde_json::to_string(s)?);
            }
            for e in &s.errors {
                eprintln!("error: record {}: {}", e.source, e.reason);
            }
            out.finish()?;
            return if report.has_candidates() {
                Ok(Outcome::Flagged)
            } else if s.errors.iter().any(|e| e.capacity) {
                Err(anyhow!(OverLimit(limit)))
            } else if !s.errors.is_empty() {
                Err(anyhow!("{} unreadable records", s.errors.len()))
            } else {
                Ok(Outcome::Done)
            };
        }
        Command::Convert { input, canonical } => {
            let mut rows = Vec::new();
            for rec in input.graphs()? {
                let g = if canonical {
                    canonical_form(&rec.graph).with_context(|| format!("record {}", rec.name))?
                } else {
                    rec.graph
                };
                rows.push(graph_row(&g, rec.name)?);
            }
            out.rows(&rows)?;
            Outcome::Done
        }
    };
    out.finish()?;
    Ok(outcome)
}

fn gen(args: &GenArgs) -> Result<Vec<GraphRow>> {
    if let Some(f) = &args.family {
        return Ok(vec![graph_row(&build_family(f).context("--family")?, f.to_string())?]);
    }
    let (graphs, what) = match (args.enumerate, args.trees) {
        (Some(n), _) => (enumerate_connected(n).context("--enumerate")?, "connected"),
        (_, Some(n)) => (enumerate_trees(n).context("--trees")?, "tree"),
        _ => unreachable!("clap requires one generator"),
    };
    graphs.iter().map(|g| graph_row(g, format!("{what}:{}", g.n()))).collect()
}

fn graph_row(g: &Graph, source: String) -> Result<GraphRow> {
    Ok(GraphRow { graph6: write_graph6(g)?, n: g.n(), m: g.m(), source })
}

fn summary_text(s: &ScanSummary) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "interpretation: {}", s.interpretation);
    let _ = writeln!(t, "scanned: {}", s.scanned);
    let _ = writeln!(t, "singletons: {}", s.singletons);
    let _ = writeln!(t, "complete: {}", s.complete.join(" "));
    let _ = writeln!(t, "odd_star: {}", s.odd_star.join(" "));
    let other: Vec<&str> = s.other.iter().map(|r| r.graph6.as_str()).collect();
    let _ = writeln!(t, "other: {}", other.join(" "));
    let _ = writeln!(t, "skipped: {}", s.skipped.len());
    let _ = writeln!(t, "errors: {}", s.errors.len());
    t
}
