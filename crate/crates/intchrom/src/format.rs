//! Text formats for graphs, orientations, cycles and k-tuple colorings.
//!
//! Graphs come in two flavors:
//!
//! * DIMACS: `p edge <n> <m>` then `e <u> <v>` lines, nodes numbered from 1;
//! * edge list: `<n> <m>` then `<u> <v>` lines, nodes numbered from 0.
//!
//! Lines starting with `c` or `#` are comments in both.

use std::{fmt::Write as _, str::FromStr};

use intchrom_core::{AcyclicOrientation, Graph, GraphBuilder, KTupleColoring, SimpleCycle};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    EdgeList,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dimacs" | "col" => Ok(Format::Dimacs),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        source: intchrom_core::Error,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Graph { line, .. } => *line,
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn is_comment(line: &str) -> bool {
    line.is_empty() || line.starts_with('#') || line == "c" || line.starts_with("c ")
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !is_comment(l))
}

/// Picks DIMACS when the first content line is a `p` header.
pub fn detect_format(text: &str) -> Format {
    match content_lines(text).next() {
        Some((_, l)) if l.starts_with("p ") || l.starts_with('e') => Format::Dimacs,
        _ => Format::EdgeList,
    }
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N], ParseError> {
    if fields.len() != N {
        return Err(syntax(
            line,
            format!("expected {N} integers, found {} fields", fields.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field
            .parse()
            .map_err(|_| syntax(line, format!("`{field}` is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Dimacs => parse_dimacs(text),
        Format::EdgeList => parse_edgelist(text),
    }
}

struct Pending {
    builder: GraphBuilder,
    declared: usize,
    found: usize,
}

impl Pending {
    fn start(line: usize, n: usize, m: usize) -> Result<Self, ParseError> {
        let builder = GraphBuilder::new(n).map_err(|source| ParseError::Graph { line, source })?;
        Ok(Pending {
            builder,
            declared: m,
            found: 0,
        })
    }

    fn add(&mut self, line: usize, u: usize, v: usize) -> Result<(), ParseError> {
        self.found += 1;
        if self.found > self.declared {
            return Err(syntax(
                line,
                format!("more edges than the {} declared", self.declared),
            ));
        }
        self.builder
            .add_edge(u, v)
            .map_err(|source| ParseError::Graph { line, source })
    }

    fn finish(self, last_line: usize) -> Result<Graph, ParseError> {
        if self.found != self.declared {
            return Err(syntax(
                last_line,
                format!(
                    "header declares {} edges, found {}",
                    self.declared, self.found
                ),
            ));
        }
        Ok(self.builder.build())
    }
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut pending: Option<Pending> = None;
    let mut last_line = 0;
    for (line, content) in content_lines(text) {
        last_line = line;
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if pending.is_some() {
                    return Err(syntax(line, "second `p` header"));
                }
                if fields.len() != 4 || !matches!(fields[1], "edge" | "col") {
                    return Err(syntax(line, "header must read `p edge <n> <m>`"));
                }
                let [n, m] = numbers(line, &fields[2..])?;
                pending = Some(Pending::start(line, n, m)?);
            }
            "e" => {
                let graph = pending
                    .as_mut()
                    .ok_or_else(|| syntax(line, "edge before the `p` header"))?;
                let [u, v] = numbers(line, &fields[1..])?;
                if u == 0 || v == 0 {
                    return Err(syntax(line, "DIMACS nodes are numbered from 1"));
                }
                graph.add(line, u - 1, v - 1)?;
            }
            other => return Err(syntax(line, format!("unexpected line type `{other}`"))),
        }
    }
    pending
        .ok_or_else(|| syntax(last_line.max(1), "missing `p edge <n> <m>` header"))?
        .finish(last_line)
}

fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut pending: Option<Pending> = None;
    let mut last_line = 0;
    for (line, content) in content_lines(text) {
        last_line = line;
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = numbers(line, &fields)?;
        match pending.as_mut() {
            None => pending = Some(Pending::start(line, a, b)?),
            Some(graph) => graph.add(line, a, b)?,
        }
    }
    pending
        .ok_or_else(|| syntax(last_line.max(1), "missing `<n> <m>` header"))?
        .finish(last_line)
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.node_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.node_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs => to_dimacs(g),
        Format::EdgeList => to_edgelist(g),
    }
}

/// Directed pairs `u>v`, one per edge in canonical edge order.
pub fn orientation_arcs(g: &Graph, o: &AcyclicOrientation) -> Vec<String> {
    o.arcs(g).iter().map(|(u, v)| format!("{u}>{v}")).collect()
}

pub fn write_orientation(g: &Graph, o: &AcyclicOrientation) -> String {
    orientation_arcs(g, o).join("\n") + "\n"
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("`{0}` is not a directed pair of the form u>v")]
    BadPair(String),
    #[error(transparent)]
    Graph(#[from] intchrom_core::Error),
}

/// Reads `u>v` pairs separated by commas, whitespace or newlines.
pub fn parse_orientation(g: &Graph, text: &str) -> Result<AcyclicOrientation, OrientationError> {
    let arcs = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let bad = || OrientationError::BadPair(pair.to_string());
            let (u, v) = pair.split_once('>').ok_or_else(bad)?;
            Ok((
                u.trim().parse().map_err(|_| bad())?,
                v.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect::<Result<Vec<(usize, usize)>, OrientationError>>()?;
    Ok(AcyclicOrientation::from_arcs(g, &arcs)?)
}

/// Comma-separated canonical node sequence.
pub fn write_cycle(c: &SimpleCycle) -> String {
    join(c.nodes())
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Header line with `k`, palette and interleaving, then `node: c1,...,ck` lines.
pub fn write_coloring(c: &KTupleColoring) -> String {
    let mut out = format!(
        "# k={} palette={} interleaved={}\n",
        c.k(),
        c.palette(),
        c.is_interleaved()
    );
    for v in 0..c.node_count() {
        writeln!(out, "{v}: {}", join(c.colors(v))).unwrap();
    }
    out
}
