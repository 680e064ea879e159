use anyhow::{bail, Context, Result};
use clap::Args;
use parity_signed::graph::build_family;
use parity_signed::graph::graph6::{parse_graph6_str, parse_lines};
use parity_signed::{FamilySpec, Graph};
use std::path::PathBuf;

#[derive(Debug, Clone, Args)]
#[group(id = "source", multiple = false)]
pub struct InputArgs {
    /// Built-in family, e.g. `path:5`, `complete_bipartite:2,3`.
    #[arg(long, value_name = "NAME:PARAMS")]
    pub family: Option<FamilySpec>,
    /// File with one graph6 record per line.
    #[arg(long = "in", value_name = "FILE")]
    pub file: Option<PathBuf>,
    /// A single inline graph6 string.
    #[arg(long, value_name = "GRAPH6")]
    pub g6: Option<String>,
}

pub struct Source {
    /// Names the record in reports and errors.
    pub name: String,
    pub graph: parity_signed::Result<Graph>,
    pub family: Option<FamilySpec>,
}

impl InputArgs {
    pub fn is_given(&self) -> bool {
        self.family.is_some() || self.file.is_some() || self.g6.is_some()
    }

    /// Every input record, bad ones included.
    pub fn sources(&self) -> Result<Vec<Source>> {
        if let Some(f) = &self.family {
            return Ok(vec![Source { name: f.to_string(), graph: build_family(f), family: Some(*f) }]);
        }
        if let Some(s) = &self.g6 {
            return Ok(vec![Source { name: s.clone(), graph: parse_graph6_str(s), family: None }]);
        }
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path).with_context(|| format!("cannot read --in {}", path.display()))?;
            return Ok(parse_lines(&text)
                .into_iter()
                .map(|(line, graph)| Source { name: format!("{}:{line}", path.display()), graph, family: None })
                .collect());
        }
        bail!("no input: pass one of --family, --in, --g6")
    }

    /// Every input record; the first unreadable one aborts.
    pub fn graphs(&self) -> Result<Vec<Input>> {
        self.sources()?
            .into_iter()
            .map(|s| {
                let graph = s.graph.with_context(|| format!("record {}", s.name))?;
                Ok(Input { name: s.name, graph, family: s.family })
            })
            .collect()
    }
}

pub struct Input {
    pub name: String,
    pub graph: Graph,
    pub family: Option<FamilySpec>,
}
