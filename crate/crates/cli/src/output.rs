use anyhow::{Context, Result};
use clap::ValueEnum;
use serde::Serialize;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    JsonLines,
    /// Comma-separated values with a fixed header.
    Csv,
    /// Aligned columns for reading in a terminal.
    Table,
    /// Bare graph6 records, one per line.
    Graph6,
}

/// A report line that can be rendered in every format.
pub trait Row: Serialize {
    const HEADER: &'static [&'static str];
    fn fields(&self) -> Vec<String>;
    fn graph6(&self) -> &str;
}

pub fn list<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub struct Emitter {
    out: Box<dyn Write>,
    format: Format,
}

impl Emitter {
    pub fn new(path: Option<&Path>, format: Format) -> Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(
                File::create(p).with_context(|| format!("cannot create output file {}", p.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Emitter { out, format })
    }

    pub fn rows<R: Row>(&mut self, rows: &[R]) -> Result<()> {
        match self.format {
            Format::JsonLines => {
                for r in rows {
                    serde_json::to_writer(&mut self.out, r)?;
                    writeln!(self.out)?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut self.out);
                w.write_record(R::HEADER)?;
                for r in rows {
                    w.write_record(r.fields())?;
                }
                w.flush()?;
            }
            Format::Table => {
                let body: Vec<Vec<String>> = rows.iter().map(Row::fields).collect();
                let mut widths: Vec<usize> = R::HEADER.iter().map(|h| h.len()).collect();
                for line in &body {
                    for (w, f) in widths.iter_mut().zip(line) {
                        *w = (*w).max(f.chars().count());
                    }
                }
                let header: Vec<String> = R::HEADER.iter().map(|h| h.to_string()).collect();
                for line in std::iter::once(&header).chain(&body) {
                    let cells: Vec<String> =
                        line.iter().zip(&widths).map(|(f, w)| format!("{f:<w$}")).collect();
                    writeln!(self.out, "{}", cells.join("  ").trim_end())?;
                }
            }
            Format::Graph6 => {
                for r in rows {
                    writeln!(self.out, "{}", r.graph6())?;
                }
            }
        }
        Ok(())
    }

    /// A trailing summary: a JSON line `{"summary": ...}`, pretty text after a
    /// table, and nothing for csv/graph6 output (the caller echoes it to stderr).
    pub fn summary<S: Serialize>(&mut self, summary: &S, text: &str) -> Result<bool> {
        match self.format {
            Format::JsonLines => {
                serde_json::to_writer(&mut self.out, &serde_json::json!({ "summary": summary }))?;
                writeln!(self.out)?;
                Ok(true)
            }
            Format::Table => {
                writeln!(self.out)?;
                write!(self.out, "{text}")?;
                Ok(true)
            }
            Format::Csv | Format::Graph6 => Ok(false),
        }
    }

    pub fn finish(mut self) -> Result<()> {
        self.out.flush()?;
        Ok(())
    }
}
