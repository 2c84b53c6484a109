//! graph6, edge-list and DOT text formats.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmitFormat {
    Graph6,
    EdgeList,
    Dot,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("malformed header: {0}")]
    Header(String),
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Non-fatal findings while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseWarning {
    DuplicateEdge { line: usize, u: usize, v: usize },
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    parse_graph_with_warnings(text, format).map(|(g, _)| g)
}

pub fn parse_graph_with_warnings(
    text: &str,
    format: Format,
) -> Result<(Graph, Vec<ParseWarning>), ParseError> {
    match format {
        Format::Graph6 => parse_graph6(text).map(|g| (g, Vec::new())),
        Format::EdgeList => parse_edge_list(text),
    }
}

/// Guesses the format: a first non-blank line that is a bare integer means
/// edge list, anything else is graph6.
pub fn detect_format(text: &str) -> Format {
    match text.lines().map(str::trim).find(|l| !l.is_empty()) {
        Some(line) if line.parse::<usize>().is_ok() => Format::EdgeList,
        _ => Format::Graph6,
    }
}

fn parse_edge_list(text: &str) -> Result<(Graph, Vec<ParseWarning>), ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or(ParseError::Empty)?;
    let n: usize = header
        .parse()
        .map_err(|_| ParseError::Header(header.to_string()))?;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut warnings = Vec::new();
    for (line, content) in lines {
        let parts: Vec<&str> = content.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(ParseError::Line { line, msg: format!("expected `u v`, got `{content}`") });
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| ParseError::Line { line, msg: format!("bad vertex `{s}`") })
        };
        let (u, v) = (parse(parts[0])?, parse(parts[1])?);
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::Line {
                    line,
                    msg: GraphError::VertexOutOfRange { vertex: w, n }.to_string(),
                });
            }
        }
        if u == v {
            return Err(ParseError::Line { line, msg: GraphError::SelfLoop(u).to_string() });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            warnings.push(ParseWarning::DuplicateEdge { line, u, v });
            continue;
        }
        edges.push((u, v));
    }
    Ok((Graph::from_edges(n, edges)?, warnings))
}

fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or(ParseError::Empty)?;
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes: Vec<u8> = line.bytes().collect();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let data = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (data(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = (data(bytes[1]) << 12) | (data(bytes[2]) << 6) | data(bytes[3]);
        (n, &bytes[4..])
    } else if bytes.len() >= 8 {
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | data(b));
        (n, &bytes[8..])
    } else {
        return Err(ParseError::Graph6("truncated size header".into()));
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(ParseError::Graph6(format!(
            "expected {need} data bytes for {n} vertices, got {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data(body[k / 6]);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn emit_graph(g: &Graph, format: EmitFormat) -> String {
    match format {
        EmitFormat::Graph6 => emit_graph6(g),
        EmitFormat::EdgeList => {
            let mut out = g.n().to_string();
            for (u, v) in g.edges() {
                let _ = write!(out, "\n{u} {v}");
            }
            out
        }
        EmitFormat::Dot => {
            let mut out = String::from("graph G {\n");
            for v in 0..g.n() {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", g.label(v).replace('"', "\\\""));
            }
            for (u, v) in g.edges() {
                let _ = writeln!(out, "  {u} -- {v};");
            }
            out.push('}');
            out
        }
    }
}

fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
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
    String::from_utf8(out).expect("graph6 is ASCII")
}
