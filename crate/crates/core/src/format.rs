//! Line-oriented text format, DIMACS style:
//!
//! ```text
//! c optional comment
//! p multigraph <n> <m>
//! e <u> <v>        (m lines, 1-indexed endpoints)
//! ```
//!
//! Repeated `e` lines encode parallel edges; edge ids follow line order.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub fn parse(text: &str) -> Result<Multigraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate problem line"));
                }
                if fields.next() != Some("multigraph") {
                    return Err(syntax(line, "expected `p multigraph <n> <m>`"));
                }
                let n = number(fields.next(), line, "vertex count")?;
                let m = number(fields.next(), line, "edge count")?;
                expect_end(fields, line)?;
                header = Some((n, m));
            }
            Some("e") => {
                let u = number(fields.next(), line, "endpoint")?;
                let v = number(fields.next(), line, "endpoint")?;
                expect_end(fields, line)?;
                if u == v {
                    return Err(Error::LoopEdge { line, vertex: u });
                }
                let (n, _) = header.ok_or_else(|| syntax(line, "edge before problem line"))?;
                edges.push((endpoint(u, n, line)?, endpoint(v, n, line)?));
            }
            Some(other) => return Err(syntax(line, format!("unknown line type `{other}`"))),
            None => unreachable!("blank lines are skipped"),
        }
    }

    let (n, m) = header.ok_or_else(|| syntax(text.lines().count().max(1), "missing problem line"))?;
    if edges.len() != m {
        return Err(Error::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Multigraph::new(n, edges)
}

/// Canonical text: the problem line followed by one `e` line per edge id.
pub fn serialize(g: &Multigraph) -> String {
    let mut out = String::new();
    writeln!(out, "p multigraph {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn number(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let field = field.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    field
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{field}`")))
}

fn endpoint(v: usize, n: usize, line: usize) -> Result<usize> {
    if v == 0 || v > n {
        return Err(syntax(line, format!("endpoint {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn expect_end<'a>(mut fields: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match fields.next() {
        None => Ok(()),
        Some(extra) => Err(syntax(line, format!("unexpected trailing field `{extra}`"))),
    }
}
