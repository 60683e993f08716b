//! The `.sgf` text format for semi-graphs.
//!
//! ```text
//! # comment lines are allowed anywhere
//! n <count>
//! e <u> <v>        (one per edge, u < v on emit)
//! s <u>            (one per semi-edge)
//! p <name> <u>     (optional named ports)
//! ```
//!
//! Lines end with LF and indices are ASCII decimals. [`emit`] is canonical
//! (edges and semi-edges sorted, ports in declaration order), so
//! `emit(parse(emit(g))) == emit(g)` byte for byte.

use crate::error::{GraphError, Result};
use crate::semigraph::{SemiGraph, SemiGraphBuilder};

pub fn emit(g: &SemiGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("n {}\n", g.n()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    for &s in g.semi() {
        out.push_str(&format!("s {s}\n"));
    }
    for p in g.ports() {
        out.push_str(&format!("p {} {}\n", p.name, p.vertex));
    }
    out
}

pub fn parse(text: &str) -> Result<SemiGraph> {
    let mut builder: Option<SemiGraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_ascii_whitespace();
        let tag = fields.next().unwrap();
        let err = |message: String| GraphError::Parse { line: line_no, message };
        let mut next_index = |what: &str| -> Result<usize> {
            let tok = fields
                .next()
                .ok_or_else(|| err(format!("missing {what}")))?;
            tok.parse::<usize>()
                .map_err(|_| err(format!("invalid {what} `{tok}`")))
        };
        match tag {
            "n" => {
                if builder.is_some() {
                    return Err(err("repeated n line".into()));
                }
                let n = next_index("vertex count")?;
                builder = Some(SemiGraphBuilder::new(n));
            }
            "e" | "s" | "p" => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| err("n line must come first".into()))?;
                let map_err = |e: GraphError| GraphError::Parse {
                    line: line_no,
                    message: e.to_string(),
                };
                match tag {
                    "e" => {
                        let u = next_index("endpoint")?;
                        let v = next_index("endpoint")?;
                        b.edge(u, v).map_err(map_err)?;
                    }
                    "s" => {
                        let u = next_index("vertex")?;
                        b.semi_edge(u).map_err(map_err)?;
                    }
                    _ => {
                        let name = fields
                            .next()
                            .ok_or_else(|| err("missing port name".into()))?
                            .to_string();
                        let tok = fields
                            .next()
                            .ok_or_else(|| err("missing port vertex".into()))?;
                        let u = tok
                            .parse::<usize>()
                            .map_err(|_| err(format!("invalid port vertex `{tok}`")))?;
                        b.port(&name, u).map_err(map_err)?;
                    }
                }
                if fields.next().is_some() {
                    return Err(err("trailing fields".into()));
                }
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    let builder = builder.ok_or(GraphError::Parse {
        line: text.lines().count() + 1,
        message: "missing n line".into(),
    })?;
    builder.build().map_err(|e| GraphError::Parse { line: 0, message: e.to_string() })
}
