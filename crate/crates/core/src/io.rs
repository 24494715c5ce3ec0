//! Text formats: graph6 (bit-exact with nauty's `showg`/`geng` output) and a
//! small line-oriented edge list (`n <count>` header, then `u v` per line).

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn format_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Format { offset, message: message.into() }
}

/// Parses one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(format_err(base + i, format!("byte 0x{b:02x} outside the graph6 range 63..=126")));
        }
    }
    let (n, header_len) = decode_order(bytes).map_err(|(off, msg)| format_err(base + off, msg))?;

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() != expected {
        return Err(format_err(
            base + header_len,
            format!("expected {expected} adjacency bytes for n = {n}, found {}", data.len()),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - BIAS;
            if byte & (0b10_0000 >> (k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if let Some(&last) = data.last() {
        let used = bits - 6 * (expected - 1);
        let pad_mask = (1u8 << (6 - used)) - 1;
        if (last - BIAS) & pad_mask != 0 {
            return Err(format_err(base + header_len + expected - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_order(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let group = |slice: &[u8]| slice.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS));
    match bytes {
        [] => Err((0, "missing order byte".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err((2, "truncated 36-bit order".into()));
            }
            Ok((group(&rest[..6]), 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err((1, "truncated 18-bit order".into()));
            }
            Ok((group(&rest[..3]), 4))
        }
        [b, ..] => Ok((usize::from(b - BIAS), 1)),
    }
}

/// Canonical graph6 encoding (shortest order prefix, no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    let push_groups = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for i in (0..groups).rev() {
            out.push(((value >> (6 * i)) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        push_groups(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_groups(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: a `n <count>` line, then `u v` lines.
/// Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| format_err(start, format!("expected a non-negative integer, found {s:?}")))
        };
        match (n, fields.as_slice()) {
            (None, ["n", count]) => n = Some(parse(count)?),
            (None, _) => return Err(format_err(start, "first line must be `n <count>`")),
            (Some(order), [a, b]) => {
                let (u, v) = (parse(a)?, parse(b)?);
                if u >= order || v >= order {
                    return Err(Error::VertexOutOfRange { vertex: u.max(v), n: order });
                }
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                edges.push((u, v));
            }
            (Some(_), _) => return Err(format_err(start, "expected `u v`")),
        }
    }
    let n = n.ok_or_else(|| format_err(0, "missing `n <count>` header"))?;
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Picks the edge-list parser when the text starts with an `n` header and
/// graph6 otherwise.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty()).unwrap_or("");
    if first.split_whitespace().next() == Some("n") {
        parse_edge_list(text)
    } else {
        parse_graph6(text)
    }
}
