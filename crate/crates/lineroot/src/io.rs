//! Plain-text graph formats and their strict parsers.
//!
//! Three block shapes share one lexical layer (`#` comments and blank
//! lines are ignored, fields are whitespace-separated):
//!
//! ```text
//! graph <vertices> <edges>      mgraph <vertices> <edges>
//! e <u> <v>                     e <u> <v>
//! ...                           ...
//! ```
//!
//! and for reconstruction results, a root block carrying the flavor and
//! the vertex → edge certificate:
//!
//! ```text
//! root <vertices> <edges> mode=<l1|ge1>
//! e <id> <u> <v>
//! ...
//! map <input-vertex> <edge-id>
//! ...
//! ```
//!
//! Parsers are strict: counts must match exactly, indices must be in
//! range, simple graphs reject duplicate edges, and root blocks require
//! edge ids and map lines in ascending order. Errors carry the 1-based
//! line number of the offending line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeId, MultiGraph, SimpleGraph};
use crate::reconstruct::{LineMode, RootResult};

/// A parse failure, pointing at the 1-based input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct MalformedInput {
    pub line: usize,
    pub message: String,
}

impl MalformedInput {
    fn new(line: usize, message: impl Into<String>) -> Self {
        MalformedInput { line, message: message.into() }
    }
}

/// A root block as read back from text. The twin classes of the original
/// input are not part of the format (they are recoverable as the parallel
/// classes of the root), so this is leaner than [`RootResult`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedRoot {
    pub mode: LineMode,
    pub root: MultiGraph,
    pub vertex_to_edge: Vec<EdgeId>,
}

/// Significant lines of the input with their 1-based numbers.
struct Cursor<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
    /// Number of the last physical line, for errors about missing lines.
    end: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor { lines: input.lines().enumerate(), end: input.lines().count().max(1) }
    }

    fn next_significant(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.lines.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((i + 1, line));
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), MalformedInput> {
        self.next_significant()
            .ok_or_else(|| MalformedInput::new(self.end, format!("input ends before {what}")))
    }

    fn expect_end(&mut self) -> Result<(), MalformedInput> {
        match self.next_significant() {
            Some((line, _)) => {
                Err(MalformedInput::new(line, "unexpected content after the block"))
            }
            None => Ok(()),
        }
    }
}

fn parse_index(token: &str, line: usize, what: &str) -> Result<usize, MalformedInput> {
    token
        .parse::<usize>()
        .map_err(|_| MalformedInput::new(line, format!("{what} must be a non-negative integer, got `{token}`")))
}

fn parse_endpoint(
    token: &str,
    vertices: usize,
    line: usize,
) -> Result<usize, MalformedInput> {
    let v = parse_index(token, line, "a vertex index")?;
    if v >= vertices {
        return Err(MalformedInput::new(
            line,
            format!("vertex index {v} is out of range for {vertices} vertices"),
        ));
    }
    Ok(v)
}

fn parse_header(
    cursor: &mut Cursor,
    keyword: &str,
) -> Result<(usize, usize, usize, Option<LineMode>), MalformedInput> {
    let (line, text) = cursor.expect(&format!("the `{keyword}` header"))?;
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let want_mode = keyword == "root";
    let expected = if want_mode {
        format!("`{keyword} <vertices> <edges> mode=<l1|ge1>`")
    } else {
        format!("`{keyword} <vertices> <edges>`")
    };
    let arity = if want_mode { 4 } else { 3 };
    if tokens.len() != arity || tokens[0] != keyword {
        return Err(MalformedInput::new(line, format!("expected header {expected}")));
    }
    let vertices = parse_index(tokens[1], line, "the vertex count")?;
    let edges = parse_index(tokens[2], line, "the edge count")?;
    let mode = if want_mode {
        Some(match tokens[3] {
            "mode=l1" => LineMode::L1,
            "mode=ge1" => LineMode::Geq1,
            other => {
                return Err(MalformedInput::new(
                    line,
                    format!("expected `mode=l1` or `mode=ge1`, got `{other}`"),
                ))
            }
        })
    } else {
        None
    };
    Ok((line, vertices, edges, mode))
}

/// Parse a `graph` block into a simple graph, rejecting loops and
/// duplicate edges.
pub fn parse_simple_graph(input: &str) -> Result<SimpleGraph, MalformedInput> {
    let mut cursor = Cursor::new(input);
    let (_, vertices, edge_count, _) = parse_header(&mut cursor, "graph")?;
    let mut edges = Vec::with_capacity(edge_count);
    let mut seen = std::collections::HashSet::new();
    for _ in 0..edge_count {
        let (line, text) = cursor.expect("an `e <u> <v>` line")?;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 3 || tokens[0] != "e" {
            return Err(MalformedInput::new(line, "expected `e <u> <v>`"));
        }
        let u = parse_endpoint(tokens[1], vertices, line)?;
        let v = parse_endpoint(tokens[2], vertices, line)?;
        if u == v {
            return Err(MalformedInput::new(line, "loop edges are not allowed"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(MalformedInput::new(
                line,
                format!("duplicate edge between {u} and {v} in a simple graph"),
            ));
        }
        edges.push((u, v));
    }
    cursor.expect_end()?;
    Ok(SimpleGraph::from_edges(vertices, &edges).expect("edges validated during parsing"))
}

/// Parse an `mgraph` block into a multigraph; parallel edges are welcome,
/// loops are not.
pub fn parse_multigraph(input: &str) -> Result<MultiGraph, MalformedInput> {
    let mut cursor = Cursor::new(input);
    let (_, vertices, edge_count, _) = parse_header(&mut cursor, "mgraph")?;
    let mut edges = Vec::with_capacity(edge_count);
    for _ in 0..edge_count {
        let (line, text) = cursor.expect("an `e <u> <v>` line")?;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 3 || tokens[0] != "e" {
            return Err(MalformedInput::new(line, "expected `e <u> <v>`"));
        }
        let u = parse_endpoint(tokens[1], vertices, line)?;
        let v = parse_endpoint(tokens[2], vertices, line)?;
        if u == v {
            return Err(MalformedInput::new(line, "loop edges are not allowed"));
        }
        edges.push((u, v));
    }
    cursor.expect_end()?;
    Ok(MultiGraph::from_edges(vertices, &edges).expect("edges validated during parsing"))
}

/// Parse a `root` block: edges with explicit ascending ids, then the
/// vertex → edge map with ascending vertices covering every edge once.
pub fn parse_root(input: &str) -> Result<ParsedRoot, MalformedInput> {
    let mut cursor = Cursor::new(input);
    let (_, vertices, edge_count, mode) = parse_header(&mut cursor, "root")?;
    let mode = mode.expect("root headers carry a mode");
    let mut edges = Vec::with_capacity(edge_count);
    for expected_id in 0..edge_count {
        let (line, text) = cursor.expect("an `e <id> <u> <v>` line")?;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 4 || tokens[0] != "e" {
            return Err(MalformedInput::new(line, "expected `e <id> <u> <v>`"));
        }
        let id = parse_index(tokens[1], line, "the edge id")?;
        if id != expected_id {
            return Err(MalformedInput::new(
                line,
                format!("edge ids must ascend from 0; expected {expected_id}, got {id}"),
            ));
        }
        let u = parse_endpoint(tokens[2], vertices, line)?;
        let v = parse_endpoint(tokens[3], vertices, line)?;
        if u == v {
            return Err(MalformedInput::new(line, "loop edges are not allowed"));
        }
        edges.push((u, v));
    }
    let mut vertex_to_edge = Vec::with_capacity(edge_count);
    let mut used = vec![false; edge_count];
    for expected_vertex in 0..edge_count {
        let (line, text) = cursor.expect("a `map <vertex> <edge>` line")?;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 3 || tokens[0] != "map" {
            return Err(MalformedInput::new(line, "expected `map <vertex> <edge>`"));
        }
        let v = parse_index(tokens[1], line, "the mapped vertex")?;
        if v != expected_vertex {
            return Err(MalformedInput::new(
                line,
                format!("map lines must cover vertices in order; expected {expected_vertex}, got {v}"),
            ));
        }
        let e = parse_index(tokens[2], line, "the edge id")?;
        if e >= edge_count {
            return Err(MalformedInput::new(
                line,
                format!("edge id {e} is out of range for {edge_count} edges"),
            ));
        }
        if used[e] {
            return Err(MalformedInput::new(
                line,
                format!("edge id {e} is mapped twice; the map must be a bijection"),
            ));
        }
        used[e] = true;
        vertex_to_edge.push(EdgeId::new(e));
    }
    cursor.expect_end()?;
    let root =
        MultiGraph::from_edges(vertices, &edges).expect("edges validated during parsing");
    Ok(ParsedRoot { mode, root, vertex_to_edge })
}

/// Render a simple graph as a `graph` block, edges in sorted order.
pub fn emit_simple_graph(g: &SimpleGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u.index(), v.index()).unwrap();
    }
    out
}

/// Render a multigraph as an `mgraph` block, edges in id order.
pub fn emit_multigraph(g: &MultiGraph) -> String {
    let mut out = String::new();
    writeln!(out, "mgraph {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edge_pairs() {
        writeln!(out, "e {} {}", u.index(), v.index()).unwrap();
    }
    out
}

fn mode_token(mode: LineMode) -> &'static str {
    match mode {
        LineMode::L1 => "l1",
        LineMode::Geq1 => "ge1",
    }
}

/// Render a reconstruction result as a `root` block.
pub fn emit_root(result: &RootResult) -> String {
    let labels: Vec<usize> = (0..result.vertex_to_edge.len()).collect();
    emit_root_labeled(result, &labels)
}

/// Render a `root` block whose map lines name input vertices by external
/// labels — used when the reconstructed piece is part of a larger graph
/// and vertices keep their original names.
pub fn emit_root_labeled(result: &RootResult, labels: &[usize]) -> String {
    assert_eq!(labels.len(), result.vertex_to_edge.len());
    let root = &result.root;
    let mut out = String::new();
    writeln!(
        out,
        "root {} {} mode={}",
        root.vertex_count(),
        root.edge_count(),
        mode_token(result.mode)
    )
    .unwrap();
    for e in root.edge_ids() {
        let (u, v) = root.endpoints(e);
        writeln!(out, "e {} {} {}", e.index(), u.index(), v.index()).unwrap();
    }
    for (v, e) in result.vertex_to_edge.iter().enumerate() {
        writeln!(out, "map {} {}", labels[v], e.index()).unwrap();
    }
    out
}
