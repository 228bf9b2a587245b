//! Graph arguments for the command line.
//!
//! A graph argument is one of
//!
//! * a graph6 string (`Ch`),
//! * `@path` naming a file with graph6 lines or an edge list,
//! * a generator spec: `path:4`, `cycle:5`, `complete:3`, `star:4`,
//!   `empty:3`, `grid:3x4`, `gnp:8:0.5:42`.
//!
//! Families for sweeps additionally accept `paths:1..6`, `cycles:3..8`,
//! `completes:1..4`, `stars:1..5`, `empties:1..3` and `connected:1..5`
//! (all connected graphs by order); ranges are inclusive.

use std::fs;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::graph6::{parse_graph6, parse_graph6_lines};
use crate::harness::enumerate_connected_graphs;

fn bad(spec: &str, reason: impl Into<String>) -> Error {
    Error::BadSpec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn number<T: std::str::FromStr>(spec: &str, text: &str) -> Result<T> {
    text.parse()
        .map_err(|_| bad(spec, format!("`{text}` is not a number")))
}

fn range(spec: &str, text: &str) -> Result<std::ops::RangeInclusive<usize>> {
    match text.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (number(spec, a)?, number(spec, b)?);
            if a > b {
                return Err(bad(spec, "empty range"));
            }
            Ok(a..=b)
        }
        None => {
            let a = number(spec, text)?;
            Ok(a..=a)
        }
    }
}

/// Reads every graph in a file. Files whose first content line contains
/// whitespace are edge lists (one graph); otherwise graph6 lines.
pub fn read_graph_file(path: &str) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.contains(char::is_whitespace) => Ok(vec![Graph::parse_edge_list(&text)?]),
        Some(_) => parse_graph6_lines(&text),
    }
}

fn generator(spec: &str, name: &str, params: &str) -> Result<Option<Graph>> {
    let g = match name {
        "path" => graph::path(number(spec, params)?)?,
        "cycle" => graph::cycle(number(spec, params)?)?,
        "complete" => graph::complete(number(spec, params)?)?,
        "star" => graph::star(number(spec, params)?)?,
        "empty" => graph::empty(number(spec, params)?)?,
        "grid" => {
            let (m, n) = params
                .split_once('x')
                .ok_or_else(|| bad(spec, "grid expects MxN"))?;
            graph::grid(number(spec, m)?, number(spec, n)?)?
        }
        "gnp" => {
            let parts: Vec<&str> = params.split(':').collect();
            let [n, p, seed] = parts[..] else {
                return Err(bad(spec, "gnp expects N:P:SEED"));
            };
            graph::random_gnp(number(spec, n)?, number(spec, p)?, number(spec, seed)?)?
        }
        _ => return Ok(None),
    };
    Ok(Some(g))
}

/// Parses a single graph argument.
pub fn parse_graph_arg(spec: &str) -> Result<Graph> {
    if let Some(path) = spec.strip_prefix('@').filter(|p| !p.is_empty()) {
        let mut graphs = read_graph_file(path)?;
        if graphs.len() != 1 {
            return Err(bad(
                spec,
                format!("expected one graph, file has {}", graphs.len()),
            ));
        }
        return Ok(graphs.remove(0));
    }
    if let Some((name, params)) = spec.split_once(':') {
        return generator(spec, name, params)?
            .ok_or_else(|| bad(spec, format!("unknown generator `{name}`")));
    }
    parse_graph6(spec)
}

/// Parses a family argument into an ordered list of graphs.
pub fn parse_family(spec: &str) -> Result<Vec<Graph>> {
    if let Some(path) = spec.strip_prefix('@').filter(|p| !p.is_empty()) {
        return read_graph_file(path);
    }
    if let Some((name, params)) = spec.split_once(':') {
        let single = match name {
            "paths" => Some("path"),
            "cycles" => Some("cycle"),
            "completes" => Some("complete"),
            "stars" => Some("star"),
            "empties" => Some("empty"),
            _ => None,
        };
        if let Some(single) = single {
            return range(spec, params)?
                .map(|n| {
                    generator(spec, single, &n.to_string()).map(|g| g.expect("known generator"))
                })
                .collect();
        }
        if name == "connected" {
            let mut out = Vec::new();
            for n in range(spec, params)? {
                out.extend(enumerate_connected_graphs(n)?);
            }
            return Ok(out);
        }
    }
    Ok(vec![parse_graph_arg(spec)?])
}
