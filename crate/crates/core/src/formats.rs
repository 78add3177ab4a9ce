//! Text formats: graph6, edge lists, annotated DOT and JSON.
//!
//! graph6 follows McKay's description: `N(n)` followed by the upper triangle
//! of the adjacency matrix, column by column (`(0,1),(0,2),(1,2),(0,3),…`),
//! packed six bits per byte, most significant first, each byte offset by 63.
//! The edge-list format is the vertex count on the first line and one
//! `u v` pair per following line.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, ParseError};
use crate::graph::{Graph, MAX_VERTICES};
use crate::tessellation::{is_valid_cover, CoverDefects, Tessellation, TessellationCover};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            _ => Err(format!("unknown graph format `{s}`")),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => to_graph6(g),
        GraphFormat::EdgeList => to_edge_list(g),
    }
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn offset_err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Offset {
        offset,
        message: message.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (start, body) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(offset_err(
                start + i,
                format!("byte {b:#04x} outside the graph6 range 63..=126"),
            ));
        }
    }
    let value = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
    };
    let (n, header_len) = match body {
        [] => return Err(offset_err(start, "missing vertex count")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (value(&rest[..6]), 8),
        [126, 126, ..] => return Err(offset_err(start, "truncated 8-byte vertex count")),
        [126, rest @ ..] if rest.len() >= 3 => (value(&rest[..3]), 4),
        [126, ..] => return Err(offset_err(start, "truncated 4-byte vertex count")),
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(offset_err(
            start,
            GraphError::TooManyVertices(n).to_string(),
        ));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let data = &body[header_len..];
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(offset_err(
            start + header_len + data.len().min(expected),
            format!(
                "expected {expected} adjacency bytes for n = {n}, found {}",
                data.len()
            ),
        ));
    }
    let mut g = Graph::empty(n).expect("n checked against the limit");
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v).expect("each pair is visited once");
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[data.len() - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(offset_err(
                start + header_len + data.len() - 1,
                "non-zero padding bits",
            ));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn line_err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines
        .next()
        .ok_or_else(|| line_err(1, "missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| line_err(first, format!("expected a vertex count, found `{header}`")))?;
    let mut g = Graph::empty(n).map_err(|e| line_err(first, e.to_string()))?;
    for (no, line) in lines {
        let mut fields = line.split_whitespace();
        let mut endpoint = || -> Result<usize, ParseError> {
            let f = fields
                .next()
                .ok_or_else(|| line_err(no, "expected `u v`"))?;
            f.parse()
                .map_err(|_| line_err(no, format!("`{f}` is not a vertex")))
        };
        let (u, v) = (endpoint()?, endpoint()?);
        if fields.next().is_some() {
            return Err(line_err(no, "trailing fields after `u v`"));
        }
        g.add_edge(u, v).map_err(|e| line_err(no, e.to_string()))?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Input kinds accepted by the command line, told apart by their first byte.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Graph6,
    EdgeList,
    Json,
}

pub fn detect_input(text: &str) -> InputKind {
    let t = text.trim_start();
    if t.starts_with('{') {
        InputKind::Json
    } else if t.starts_with(|c: char| c.is_ascii_digit()) {
        InputKind::EdgeList
    } else {
        InputKind::Graph6
    }
}

/// One tessellation in the JSON schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TessellationDoc {
    pub polygons: Vec<Vec<usize>>,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
}

impl TessellationDoc {
    pub fn from_tessellation(t: &Tessellation) -> Self {
        TessellationDoc {
            polygons: t.polygons().iter().map(|p| p.vertices().to_vec()).collect(),
            edges: t
                .internal_edges()
                .into_iter()
                .map(|(u, v)| [u, v])
                .collect(),
        }
    }

    pub fn to_tessellation(&self) -> Tessellation {
        Tessellation::new(self.polygons.iter().cloned())
    }
}

pub fn cover_docs(c: &TessellationCover) -> Vec<TessellationDoc> {
    c.tessellations
        .iter()
        .map(TessellationDoc::from_tessellation)
        .collect()
}

/// `{n, edges, cover}`. Documents produced by the solver carry the cover
/// under `witness`, which is accepted as an alias when reading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, alias = "witness", skip_serializing_if = "Option::is_none")]
    pub cover: Option<Vec<TessellationDoc>>,
}

impl GraphDoc {
    pub fn new(g: &Graph, cover: Option<&TessellationCover>) -> Self {
        GraphDoc {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            cover: cover.map(cover_docs),
        }
    }

    pub fn graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }

    pub fn tessellation_cover(&self) -> Option<TessellationCover> {
        self.cover.as_ref().map(|docs| {
            TessellationCover::new(docs.iter().map(TessellationDoc::to_tessellation).collect())
        })
    }
}

/// Reads a JSON document with a graph and an optional cover. Extra keys are
/// ignored, so solver output can be piped straight back in.
pub fn parse_json_document(text: &str) -> Result<(Graph, Option<TessellationCover>), ParseError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let g = doc.graph().map_err(|e| ParseError::Json(e.to_string()))?;
    Ok((g, doc.tessellation_cover()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportKind {
    Dot,
    Json,
}

const PALETTE: [&str; 12] = [
    "red",
    "blue",
    "green3",
    "orange",
    "purple",
    "cyan3",
    "magenta",
    "gold3",
    "brown",
    "gray40",
    "darkgreen",
    "navy",
];

/// DOT or JSON rendering of `g`. With a cover, each DOT edge is coloured by
/// the first tessellation containing it; the cover must be valid for `g`.
pub fn export_annotated(
    g: &Graph,
    cover: Option<&TessellationCover>,
    kind: ExportKind,
) -> Result<String, CoverDefects> {
    if let Some(c) = cover {
        is_valid_cover(g, c)?;
    }
    Ok(match kind {
        ExportKind::Json => {
            serde_json::to_string(&GraphDoc::new(g, cover)).expect("graph documents serialize")
        }
        ExportKind::Dot => to_dot(g, cover),
    })
}

fn to_dot(g: &Graph, cover: Option<&TessellationCover>) -> String {
    let edge_sets: Vec<_> = cover
        .map(|c| c.tessellations.iter().map(|t| t.internal_edges()).collect())
        .unwrap_or_default();
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for e @ (u, v) in g.edges() {
        match edge_sets.iter().position(|s| s.contains(&e)) {
            Some(i) => {
                let _ = writeln!(
                    out,
                    "  {u} -- {v} [color=\"{}\", tessellation={i}];",
                    PALETTE[i % PALETTE.len()]
                );
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}
