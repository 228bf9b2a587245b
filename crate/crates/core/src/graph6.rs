//! graph6 codec.
//!
//! A graph6 line is `N(n) R(x)`: the vertex count followed by the upper
//! triangle of the adjacency matrix in column order (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`), six bits per byte, each byte offset by 63.
//! Both the one-byte (`n <= 62`) and the four-byte (`n <= 258047`) size
//! prefixes are supported.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const LONG_MAX: usize = 258_047;

fn bad(offset: usize, reason: impl Into<String>) -> Error {
    Error::BadGraph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.trim_end().as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(HEADER.as_bytes()) {
        bytes = rest;
        base = HEADER.len();
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(bad(
                base + i,
                format!("byte 0x{b:02x} outside graph6 range"),
            ));
        }
    }
    let (n, header_len) = match bytes {
        [] => return Err(bad(base, "empty input")),
        [126, 126, ..] => return Err(bad(base, "eight-byte size prefix unsupported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad(base + bytes.len(), "truncated size prefix"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            if n <= SHORT_MAX {
                return Err(bad(base + 1, "long size prefix used for n <= 62"));
            }
            (n, 4)
        }
        [first, ..] => ((first - BIAS) as usize, 1),
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let bit_count = n * (n - 1) / 2;
    let body = &bytes[header_len..];
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(bad(
            base + header_len + body.len().min(expected),
            format!("expected {expected} adjacency bytes, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - BIAS;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    let pad = expected * 6 - bit_count;
    if pad > 0 {
        let last = body[expected - 1] - BIAS;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad(
                base + header_len + expected - 1,
                "nonzero padding bits",
            ));
        }
    }
    Graph::new(n, &edges)
}

/// Parses a multi-line graph6 document, one graph per non-blank line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim().is_empty() {
            let g = parse_graph6(line).map_err(|e| match e {
                Error::BadGraph6 { offset: o, reason } => Error::BadGraph6 {
                    offset: offset + o,
                    reason,
                },
                other => other,
            })?;
            graphs.push(g);
        }
        offset += line.len();
    }
    Ok(graphs)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= LONG_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        return Err(Error::TooLarge {
            what: "graph6 vertex count",
            size: n as u128,
            limit: LONG_MAX as u128,
        });
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
