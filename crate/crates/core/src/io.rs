//! Line-oriented text formats. All indices in files are 1-based.
//!
//! Bipartite graphs:
//!
//! ```text
//! c comment
//! p bip <n_left> <n_right> <m>
//! e <l> <r>
//! ```
//!
//! Colored graphs for Multicolored Clique:
//!
//! ```text
//! p mcq <n> <m> <k>
//! n <v> <color>
//! e <u> <v>
//! ```
//!
//! Reduction label sidecars have one line per vertex:
//! `L <idx> v <orig>`, `L <idx> t <i>`, `R <idx> E <i> <j> <edge-id>`,
//! `R <idx> F <i> <slot>`, `R <idx> p <v> <slot>`, `R <idx> q <edge-id> <copy>`.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::reductions::{LeftLabel, McqInstance, ReductionOutput, RightLabel};

#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: BipartiteGraph,
    pub warnings: Vec<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Meaningful lines as `(1-based line number, tokens)`, skipping blanks and comments.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, tokens)| !tokens.is_empty() && tokens[0] != "c")
}

fn numbers<const N: usize>(line: usize, tokens: &[&str]) -> Result<[usize; N]> {
    if tokens.len() != N {
        return Err(parse_err(
            line,
            format!("expected {N} numeric fields, found {}", tokens.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, tok) in out.iter_mut().zip(tokens) {
        *slot = tok
            .parse()
            .map_err(|_| parse_err(line, format!("'{tok}' is not a non-negative integer")))?;
    }
    Ok(out)
}

/// Converts a 1-based index into 0-based, checking `1 ≤ x ≤ max`.
fn one_based(line: usize, what: &str, x: usize, max: usize) -> Result<usize> {
    if x == 0 || x > max {
        return Err(parse_err(line, format!("{what} index {x} out of range 1..={max}")));
    }
    Ok(x - 1)
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let mut lines = records(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing header 'p bip <n_left> <n_right> <m>'"))?;
    if header.len() < 2 || header[0] != "p" || header[1] != "bip" {
        return Err(parse_err(hline, "expected header 'p bip <n_left> <n_right> <m>'"));
    }
    let [n_left, n_right, m] = numbers::<3>(hline, &header[2..])?;

    let mut edges = Vec::new();
    let mut distinct = HashSet::new();
    let mut warnings = Vec::new();
    for (line, tokens) in lines {
        match tokens[0] {
            "e" => {
                let [l, r] = numbers::<2>(line, &tokens[1..])?;
                let l = one_based(line, "left", l, n_left)?;
                let r = one_based(line, "right", r, n_right)?;
                if !distinct.insert((l, r)) {
                    warnings.push(format!("line {line}: duplicate edge ({}, {}) ignored", l + 1, r + 1));
                }
                edges.push((l, r));
            }
            "p" => return Err(parse_err(line, "second header line")),
            other => return Err(parse_err(line, format!("unknown line type '{other}'"))),
        }
    }
    if distinct.len() != m {
        if edges.len() == m {
            warnings.push(format!(
                "header counts {m} edge lines but only {} edges are distinct",
                distinct.len()
            ));
        } else {
            return Err(parse_err(
                hline,
                format!("header declares {m} edges but the file has {} distinct edges", distinct.len()),
            ));
        }
    }
    let graph = BipartiteGraph::build(n_left, n_right, &edges)?;
    Ok(ParsedGraph { graph, warnings })
}

pub fn write_graph(g: &BipartiteGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p bip {} {} {}", g.n_left(), g.n_right(), g.edge_count()).unwrap();
    for (l, r) in g.edges() {
        writeln!(out, "e {} {}", l + 1, r + 1).unwrap();
    }
    out
}

pub fn parse_mcq(text: &str) -> Result<McqInstance> {
    let mut lines = records(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing header 'p mcq <n> <m> <k>'"))?;
    if header.len() < 2 || header[0] != "p" || header[1] != "mcq" {
        return Err(parse_err(hline, "expected header 'p mcq <n> <m> <k>'"));
    }
    let [n, m, k] = numbers::<3>(hline, &header[2..])?;
    let mut coloring = vec![0usize; n];
    let mut edges = Vec::new();
    for (line, tokens) in lines {
        match tokens[0] {
            "n" => {
                let [v, c] = numbers::<2>(line, &tokens[1..])?;
                let v = one_based(line, "vertex", v, n)?;
                if c == 0 || c > k {
                    return Err(parse_err(line, format!("color {c} out of range 1..={k}")));
                }
                if coloring[v] != 0 {
                    return Err(parse_err(line, format!("vertex {} colored twice", v + 1)));
                }
                coloring[v] = c;
            }
            "e" => {
                let [u, v] = numbers::<2>(line, &tokens[1..])?;
                edges.push((one_based(line, "vertex", u, n)?, one_based(line, "vertex", v, n)?));
            }
            "p" => return Err(parse_err(line, "second header line")),
            other => return Err(parse_err(line, format!("unknown line type '{other}'"))),
        }
    }
    if let Some(v) = coloring.iter().position(|&c| c == 0) {
        return Err(parse_err(hline, format!("vertex {} has no color line", v + 1)));
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges but the file has {}", edges.len()),
        ));
    }
    McqInstance::new(n, edges, k, coloring)
}

pub fn write_mcq(inst: &McqInstance) -> String {
    let mut out = String::new();
    writeln!(out, "p mcq {} {} {}", inst.n(), inst.edges().len(), inst.k()).unwrap();
    for v in 0..inst.n() {
        writeln!(out, "n {} {}", v + 1, inst.color(v)).unwrap();
    }
    for &(u, v) in inst.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn write_labels(out: &ReductionOutput) -> String {
    let mut s = String::new();
    for (idx, label) in out.left_labels.iter().enumerate() {
        let idx = idx + 1;
        match *label {
            LeftLabel::Vertex(v) => writeln!(s, "L {idx} v {}", v + 1),
            LeftLabel::Special(i) => writeln!(s, "L {idx} t {i}"),
        }
        .unwrap();
    }
    for (idx, label) in out.right_labels.iter().enumerate() {
        let idx = idx + 1;
        match *label {
            RightLabel::EdgeVertex { i, j, edge } => writeln!(s, "R {idx} E {i} {j} {}", edge + 1),
            RightLabel::ColorSlot { i, slot } => writeln!(s, "R {idx} F {i} {slot}"),
            RightLabel::Private { v, slot } => writeln!(s, "R {idx} p {} {slot}", v + 1),
            RightLabel::EdgeCopy { edge, copy } => writeln!(s, "R {idx} q {} {copy}", edge + 1),
        }
        .unwrap();
    }
    s
}
