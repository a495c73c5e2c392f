//! File formats.
//!
//! Hypergraphs are JSON, `{"n": 5, "generators": [[0, 2], [1, 3]]}`, with
//! 0-based vertex indices; the reader normalizes to an antichain and checks
//! that every vertex is covered. Graphs and digraphs are text: a header line
//! `n <count>` followed by one `u v` pair per line (ordered for digraphs).
//! Weighted graphs use `u v w` lines. Blank lines and `#` comments are
//! ignored.

use std::fs;
use std::path::Path;

use hereditary_core::{Digraph, Graph, HereditaryHypergraph, VertexSet, WeightedGraph, MAX_VERTICES};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Structure(#[from] hereditary_core::Error),
}

/// On-disk shape of a hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub n: usize,
    pub generators: Vec<Vec<usize>>,
}

impl HypergraphFile {
    pub fn from_hypergraph(h: &HereditaryHypergraph) -> Self {
        HypergraphFile { n: h.label_bound(), generators: h.generators().iter().map(|g| g.iter().collect()).collect() }
    }

    pub fn to_hypergraph(&self) -> Result<HereditaryHypergraph, FormatError> {
        if self.n > MAX_VERTICES {
            return Err(hereditary_core::Error::TooManyVertices(self.n).into());
        }
        let mut edges = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            if let Some(&bad) = g.iter().find(|&&v| v >= self.n) {
                return Err(hereditary_core::Error::BadIndex { index: bad, n: self.n }.into());
            }
            edges.push(g.iter().copied().collect::<VertexSet>());
        }
        Ok(HereditaryHypergraph::from_hyperedges(self.n, &edges)?)
    }
}

pub fn parse_hypergraph(text: &str) -> Result<HereditaryHypergraph, FormatError> {
    serde_json::from_str::<HypergraphFile>(text)?.to_hypergraph()
}

pub fn hypergraph_to_json(h: &HereditaryHypergraph) -> String {
    serde_json::to_string(&HypergraphFile::from_hypergraph(h)).expect("plain data serializes")
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Read { path: path.display().to_string(), source })
}

pub fn read_hypergraph(path: &Path) -> Result<HereditaryHypergraph, FormatError> {
    parse_hypergraph(&read(path)?)
}

type Rows<'a> = Vec<(usize, Vec<&'a str>)>;

/// Header vertex count plus the data lines, each split into fields.
fn parse_lines(text: &str, fields: usize) -> Result<(usize, Rows<'_>), FormatError> {
    let mut n = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if n.is_none() {
            match parts.as_slice() {
                ["n", count] => {
                    let c = count
                        .parse()
                        .map_err(|_| FormatError::Parse { line: i + 1, msg: format!("bad vertex count {count:?}") })?;
                    n = Some(c);
                    continue;
                }
                _ => return Err(FormatError::Parse { line: i + 1, msg: "expected header `n <count>`".into() }),
            }
        }
        if parts.len() != fields {
            return Err(FormatError::Parse {
                line: i + 1,
                msg: format!("expected {fields} fields, found {}", parts.len()),
            });
        }
        rows.push((i + 1, parts));
    }
    let n = n.ok_or(FormatError::Parse { line: 0, msg: "missing header `n <count>`".into() })?;
    Ok((n, rows))
}

fn vertex(line: usize, s: &str) -> Result<usize, FormatError> {
    s.parse().map_err(|_| FormatError::Parse { line, msg: format!("bad vertex {s:?}") })
}

/// Line number plus endpoints.
type Pair = (usize, usize, usize);

fn pairs(text: &str) -> Result<(usize, Vec<Pair>), FormatError> {
    let (n, rows) = parse_lines(text, 2)?;
    let mut out = Vec::with_capacity(rows.len());
    for (line, p) in rows {
        out.push((line, vertex(line, p[0])?, vertex(line, p[1])?));
    }
    Ok((n, out))
}

fn at_line(line: usize, e: hereditary_core::Error) -> FormatError {
    FormatError::Parse { line, msg: e.to_string() }
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let (n, rows) = pairs(text)?;
    let mut g = Graph::new(n)?;
    for (line, u, v) in rows {
        g.add_edge(u, v).map_err(|e| at_line(line, e))?;
    }
    Ok(g)
}

pub fn parse_digraph(text: &str) -> Result<Digraph, FormatError> {
    let (n, rows) = pairs(text)?;
    let mut d = Digraph::new(n)?;
    for (line, u, v) in rows {
        d.add_arc(u, v).map_err(|e| at_line(line, e))?;
    }
    Ok(d)
}

pub fn parse_weighted_graph(text: &str) -> Result<WeightedGraph, FormatError> {
    let (n, rows) = parse_lines(text, 3)?;
    let mut g = WeightedGraph::new(n)?;
    for (line, p) in rows {
        let z: f64 = p[2].parse().map_err(|_| FormatError::Parse { line, msg: format!("bad weight {:?}", p[2]) })?;
        g.add_edge(vertex(line, p[0])?, vertex(line, p[1])?, z).map_err(|e| at_line(line, e))?;
    }
    Ok(g)
}

pub fn read_graph(path: &Path) -> Result<Graph, FormatError> {
    parse_graph(&read(path)?)
}

pub fn read_digraph(path: &Path) -> Result<Digraph, FormatError> {
    parse_digraph(&read(path)?)
}

pub fn read_weighted_graph(path: &Path) -> Result<WeightedGraph, FormatError> {
    parse_weighted_graph(&read(path)?)
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.label_bound());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn digraph_to_text(d: &Digraph) -> String {
    let mut s = format!("n {}\n", d.label_bound());
    for (u, v) in d.arcs() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
