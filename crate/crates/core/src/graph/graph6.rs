//! graph6 codec restricted to the single-byte size form (`n <= 62`).
//!
//! A record is the byte `63 + n` followed by the upper triangle of the
//! adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed
//! six bits per byte (most significant first), each byte offset by 63. Pad
//! bits in the last byte are zero.

use super::Graph;
use crate::error::{Error, Result};

pub const HEADER: &str = ">>graph6<<";
/// Largest `n` expressible in the single-byte size form.
pub const MAX_N: usize = 62;

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_N {
        return Err(Error::UnsupportedSize(format!(
            "graph6 writer handles n <= {MAX_N}, got {n}"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses one record. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.trim_ascii();
    let text = text.strip_prefix(HEADER.as_bytes()).unwrap_or(text);
    let (&first, body) = text
        .split_first()
        .ok_or_else(|| Error::Malformed("empty record".into()))?;
    if first == 126 {
        return Err(Error::UnsupportedSize(format!(
            "multi-byte size form (n > {MAX_N}) is not supported"
        )));
    }
    if !(63..126).contains(&first) {
        return Err(Error::Malformed(format!("size byte {first} outside [63,126]")));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Malformed(format!(
            "n={n} needs {expected} body bytes, found {}",
            body.len()
        )));
    }
    if let Some((i, &b)) = body.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Error::Malformed(format!("byte {b} at offset {} outside [63,126]", i + 1)));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    for pad in nbits..expected * 6 {
        if bit(pad) {
            return Err(Error::Malformed("nonzero pad bits".into()));
        }
    }
    Ok(g)
}

pub fn parse_graph6_str(text: &str) -> Result<Graph> {
    parse_graph6(text.as_bytes())
}

/// Parses a multi-record text: one record per line, blank lines skipped.
/// Each entry carries its 1-based line number so errors can name the record.
pub fn parse_lines(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6_str(l)))
        .collect()
}
