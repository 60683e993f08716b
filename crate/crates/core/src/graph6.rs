//! graph6 import/export (McKay's format, graphs only).
//!
//! The byte layout is N(n) followed by the upper triangle of the adjacency
//! matrix in column order, packed 6 bits per byte with an offset of 63.

use crate::error::{GraphError, Result};
use crate::semigraph::SemiGraph;

const HEADER: &str = ">>graph6<<";

/// Encode a semi-edge-free graph as a graph6 line (no trailing newline).
pub fn emit(g: &SemiGraph) -> Result<String> {
    if !g.is_graph() {
        return Err(GraphError::HasSemiEdges);
    }
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out)?;
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for col in 1..n {
        for row in 0..col {
            bits.push(g.has_edge(row, col));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            if bit {
                b |= 1 << (5 - i);
            }
        }
        out.push(b + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decode one graph6 line (an optional `>>graph6<<` header is accepted).
pub fn parse(line: &str) -> Result<SemiGraph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty input".into()));
    }
    let (n, mut pos) = decode_size(bytes)?;
    let mut builder = SemiGraph::builder(n);
    let pair_count = n * n.saturating_sub(1) / 2;
    let need = pair_count.div_ceil(6);
    if bytes.len() - pos < need {
        return Err(GraphError::Graph6(format!(
            "truncated: need {need} adjacency bytes, found {}",
            bytes.len() - pos
        )));
    }
    let mut bit_index = 0usize;
    let mut pairs = Vec::with_capacity(pair_count);
    for col in 1..n {
        for row in 0..col {
            pairs.push((row, col));
        }
    }
    while bit_index < pair_count {
        let b = bytes[pos];
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6(format!("invalid byte {b} at offset {pos}")));
        }
        let v = b - 63;
        for i in 0..6 {
            if bit_index >= pair_count {
                if v & (1 << (5 - i)) != 0 {
                    return Err(GraphError::Graph6("nonzero padding bits".into()));
                }
                continue;
            }
            if v & (1 << (5 - i)) != 0 {
                let (u, w) = pairs[bit_index];
                builder.edge(u, w).map_err(|e| GraphError::Graph6(e.to_string()))?;
            }
            bit_index += 1;
        }
        pos += 1;
    }
    if pos != bytes.len() {
        return Err(GraphError::Graph6("trailing bytes after adjacency data".into()));
    }
    builder.build().map_err(|e| GraphError::Graph6(e.to_string()))
}

fn encode_size(n: usize, out: &mut Vec<u8>) -> Result<()> {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(GraphError::Graph6(format!("{n} vertices exceed the supported size")));
    }
    Ok(())
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes[0] != 126 {
        let b = bytes[0];
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6(format!("invalid size byte {b}")));
        }
        return Ok(((b - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(GraphError::Graph6("graphs beyond 258047 vertices unsupported".into()));
    }
    if bytes.len() < 4 {
        return Err(GraphError::Graph6("truncated size field".into()));
    }
    let mut n = 0usize;
    for &b in &bytes[1..4] {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6(format!("invalid size byte {b}")));
        }
        n = (n << 6) | (b - 63) as usize;
    }
    Ok((n, 4))
}
