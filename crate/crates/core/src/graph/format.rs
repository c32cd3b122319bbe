//! Text and DOT forms of [`Graph`].
//!
//! ```text
//! graph <n_vertices> <n_arcs>
//! arc <id> <start> <terminal>
//! ```
//!
//! Arcs are written in id order, so writing a parsed canonical file gives
//! back the same bytes.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {} {}", self.n_vertices(), self.n_arcs())?;
        for a in 0..self.n_arcs() {
            let (s, t) = self.arc(a);
            writeln!(f, "arc {a} {s} {t}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = content_lines(s);
        let g = parse_graph_block(&mut lines)?;
        if let Some((n, line)) = lines.next() {
            return Err(Error::parse(n, format!("unexpected line {line:?}")));
        }
        Ok(g)
    }
}

/// Non-blank lines with their 1-based line numbers. `#` starts a comment.
pub(crate) fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

pub(crate) fn parse_usize(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad {what} {tok:?}")))
}

/// Reads one `graph` block (header plus its arc lines) from `lines`.
pub fn parse_graph_block<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<Graph> {
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "expected graph header"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("graph") {
        return Err(Error::parse(hline, format!("expected `graph`, got {header:?}")));
    }
    let n = parse_usize(hline, toks.next(), "vertex count")?;
    let m = parse_usize(hline, toks.next(), "arc count")?;
    if toks.next().is_some() {
        return Err(Error::parse(hline, "trailing tokens in header"));
    }
    let mut arcs = vec![None; m];
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(hline, "missing arc lines"))?;
        let mut toks = line.split_whitespace();
        if toks.next() != Some("arc") {
            return Err(Error::parse(ln, format!("expected `arc`, got {line:?}")));
        }
        let id = parse_usize(ln, toks.next(), "arc id")?;
        let s = parse_usize(ln, toks.next(), "start vertex")?;
        let t = parse_usize(ln, toks.next(), "terminal vertex")?;
        if toks.next().is_some() {
            return Err(Error::parse(ln, "trailing tokens in arc line"));
        }
        if id >= m || arcs[id].is_some() {
            return Err(Error::parse(ln, format!("arc id {id} out of range or repeated")));
        }
        if s >= n || t >= n {
            return Err(Error::parse(ln, "arc endpoint out of range"));
        }
        arcs[id] = Some((s, t));
    }
    let arcs: Vec<_> = arcs.into_iter().map(|a| a.expect("all ids seen")).collect();
    Graph::new(n, &arcs).map_err(|e| Error::parse(hline, e.to_string()))
}

impl Graph {
    /// Graphviz rendering, one directed edge per arc in canonical orientation.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in 0..self.n_vertices() {
            let _ = writeln!(out, "  {v};");
        }
        for a in 0..self.n_arcs() {
            let (s, t) = self.arc(a);
            let _ = writeln!(out, "  {s} -> {t} [label=\"{a}\"];");
        }
        out.push_str("}\n");
        out
    }
}
