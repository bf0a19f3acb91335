//! graph6 encoding for graphs of order at most 62.
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order `x(0,1), x(0,2), x(1,2), x(0,3), …`, packed six bits per
//! byte (most significant first), each byte offset by 63. Unused low bits of
//! the final byte are zero.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_GRAPH6_ORDER: usize = 62;

const HEADER: &[u8] = b">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes a single graph6 record (no line terminator).
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let &first = text.first().ok_or_else(|| err(0, "empty input"))?;
    match first {
        b':' => return Err(err(0, "sparse6 input is not supported")),
        b'&' => return Err(err(0, "digraph6 input is not supported")),
        126 => return Err(err(0, "orders above 62 are not supported")),
        63..=125 => {}
        b => return Err(err(0, format!("order byte {b} outside [63, 126]"))),
    }
    let n = (first - 63) as usize;
    let expected = 1 + body_len(n);
    if text.len() < expected {
        return Err(err(
            text.len(),
            format!("truncated: order {n} needs {expected} bytes, got {}", text.len()),
        ));
    }
    if text.len() > expected {
        return Err(err(expected, "trailing data after graph"));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let total = n * n.saturating_sub(1) / 2;
    for (i, &b) in text[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i + 1, format!("byte {b} outside [63, 126]")));
        }
        let value = b - 63;
        for k in 0..6 {
            let set = (value >> (5 - k)) & 1 == 1;
            if bit >= total {
                if set {
                    return Err(err(i + 1, "nonzero padding bits"));
                }
                continue;
            }
            if set {
                let (u, v) = pair_at(bit);
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Column-major position of bit `k` in the upper triangle.
fn pair_at(k: usize) -> (usize, usize) {
    // column j holds bits C(j,2)..C(j+1,2)
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

pub fn write_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::UnsupportedSize {
            what: "graph6 encoding",
            size: n,
            max: MAX_GRAPH6_ORDER,
        });
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(out)
}

/// One non-blank line of a graph6 file.
#[derive(Debug, Clone)]
pub struct CorpusLine {
    /// 1-based line number.
    pub line: usize,
    /// The record with header and line terminator removed.
    pub text: String,
    pub graph: Result<Graph>,
}

/// Splits a graph6 file into records. A leading `>>graph6<<` header is
/// skipped, blank lines are ignored, and a trailing `\r` is tolerated.
pub fn read_graph6_lines(data: &[u8]) -> Vec<CorpusLine> {
    let mut out = Vec::new();
    for (idx, raw) in data.split(|&b| b == b'\n').enumerate() {
        let mut rec = raw.strip_suffix(b"\r").unwrap_or(raw);
        if let Some(rest) = rec.strip_prefix(HEADER) {
            rec = rest;
        }
        if rec.is_empty() {
            continue;
        }
        out.push(CorpusLine {
            line: idx + 1,
            text: String::from_utf8_lossy(rec).into_owned(),
            graph: parse_graph6(rec),
        });
    }
    out
}
