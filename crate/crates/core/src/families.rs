//! Generators and closed-form dimensions for threshold graphs, triangle
//! chains, disjoint unions, and a few named fixtures.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Creation sequence of a threshold graph: bit `1` adds a dominating vertex,
/// bit `0` an isolated one.
///
/// For `n >= 2` the first bit is rewritten to equal the second, since a
/// lone first vertex is both isolated and dominating.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ThresholdSequence {
    bits: Vec<bool>,
}

impl ThresholdSequence {
    pub fn new(bits: impl IntoIterator<Item = bool>) -> Result<Self> {
        let mut bits: Vec<bool> = bits.into_iter().collect();
        if bits.is_empty() {
            return Err(Error::InvalidArgument("threshold sequence must be non-empty".into()));
        }
        if bits.len() >= 2 {
            bits[0] = bits[1];
        }
        Ok(ThresholdSequence { bits })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Run-length form `(x_j, k_j)` with consecutive values differing.
    pub fn runs(&self) -> Vec<(bool, usize)> {
        self.bits.chunk_by(|a, b| a == b).map(|run| (run[0], run.len())).collect()
    }

    /// Alternating sequence `0,1,0,1,…` of length `n`.
    pub fn alternating(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i % 2 == 1))
    }
}

impl FromStr for ThresholdSequence {
    type Err = Error;

    /// Parses `1,1,0,1,1` (commas and whitespace are both accepted).
    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(Error::InvalidArgument(format!("threshold bit must be 0 or 1, found {other:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Self::new(bits)
    }
}

impl fmt::Display for ThresholdSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.bits.iter().map(|&b| if b { "1" } else { "0" }).collect();
        f.write_str(&parts.join(","))
    }
}

/// Vertex `i` is added by bit `i`; a dominating addition joins all earlier vertices.
pub fn threshold_graph(seq: &ThresholdSequence) -> Graph {
    let edges = seq.bits.iter().enumerate().filter(|(_, &b)| b).flat_map(|(i, _)| (0..i).map(move |j| (j, i)));
    Graph::from_edges(seq.len(), edges).expect("threshold edges are valid")
}

/// Connectivity dimension of a connected threshold graph: `n - m` when the
/// last run has length above one, `n - m + 1` otherwise.
pub fn threshold_cdim(seq: &ThresholdSequence) -> Result<usize> {
    let n = seq.len();
    if n == 1 {
        return Ok(0);
    }
    let runs = seq.runs();
    let &(last, k_m) = runs.last().expect("non-empty");
    if !last {
        return Err(Error::InvalidArgument(
            "sequence ends in 0, so the graph is disconnected; use threshold_cdim_any".into(),
        ));
    }
    let m = runs.len();
    Ok(if k_m > 1 { n - m } else { n - m + 1 })
}

/// Dimension of any threshold graph. Trailing zeros are isolated vertices,
/// and the prefix up to the last `1` is a connected threshold graph.
pub fn threshold_cdim_any(seq: &ThresholdSequence) -> usize {
    let Some(last_one) = seq.bits.iter().rposition(|&b| b) else {
        return disjoint_union_cdim(&vec![ComponentDim::Isolated; seq.len()]);
    };
    let prefix = ThresholdSequence::new(seq.bits[..=last_one].iter().copied()).expect("non-empty prefix");
    let mut parts = vec![ComponentDim::Isolated; seq.len() - last_one - 1];
    parts.push(if prefix.len() == 1 {
        ComponentDim::Isolated
    } else {
        ComponentDim::Connected(threshold_cdim(&prefix).expect("prefix ends in 1"))
    });
    disjoint_union_cdim(&parts)
}

/// Description of one connected component for [`disjoint_union_cdim`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComponentDim {
    Isolated,
    /// A component on at least two vertices with the given dimension.
    Connected(usize),
}

/// `max(i - 1, 0) + Σ cdim(G_j)` where `i` counts isolated vertices and the
/// sum runs over the remaining components.
pub fn disjoint_union_cdim(components: &[ComponentDim]) -> usize {
    let isolated = components.iter().filter(|c| matches!(c, ComponentDim::Isolated)).count();
    let rest: usize = components
        .iter()
        .map(|c| match c {
            ComponentDim::Isolated => 0,
            ComponentDim::Connected(d) => *d,
        })
        .sum();
    isolated.saturating_sub(1) + rest
}

/// `b - 1` triangles glued in a path at single vertices, plus a pendant
/// leaf at the far end: `2b` vertices and `b` blocks.
///
/// Vertices `0..b` form the top row (consecutive ones are joined), vertices
/// `b..2b-1` are the triangle apexes, and `2b - 1` is the leaf on `b - 1`.
pub fn triangle_chain(b: usize) -> Result<Graph> {
    if b < 2 {
        return Err(Error::InvalidArgument(format!("triangle chain needs b >= 2, got {b}")));
    }
    let mut edges = Vec::new();
    for i in 0..b - 1 {
        let apex = b + i;
        edges.extend([(i, i + 1), (i, apex), (i + 1, apex)]);
    }
    edges.push((b - 1, 2 * b - 1));
    Graph::from_edges(2 * b, edges)
}

/// `2b/3`, `(2b + 1)/3` or `(2b + 2)/3` according to `b mod 3`, i.e. `⌈2b/3⌉`.
pub fn triangle_chain_cdim(b: usize) -> Result<usize> {
    if b < 2 {
        return Err(Error::InvalidArgument(format!("triangle chain needs b >= 2, got {b}")));
    }
    Ok((2 * b).div_ceil(3))
}

const FIGURE1_EDGES: [(usize, usize); 12] =
    [(0, 1), (1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)];

/// Wheel on five vertices (hub 4) joined by the bridge 4–5 to a 4-cycle.
const FIGURE5_EDGES: [(usize, usize); 13] =
    [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 4), (2, 4), (3, 4), (4, 5), (5, 6), (5, 7), (6, 8), (7, 8)];

/// Named fixtures. `n` is used by `path`, `cycle`, `complete` and `star`
/// (the star has `n` vertices with centre `0`) and ignored otherwise.
pub fn standard_graph(kind: &str, n: usize) -> Result<Graph> {
    let need = |min: usize| {
        if n < min {
            Err(Error::InvalidArgument(format!("{kind} needs n >= {min}, got {n}")))
        } else {
            Ok(())
        }
    };
    match kind {
        "path" => {
            need(1)?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        "cycle" => {
            need(3)?;
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        "complete" => {
            need(1)?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        "star" => {
            need(1)?;
            Graph::from_edges(n, (1..n).map(|i| (0, i)))
        }
        "house" => Ok(threshold_graph(&"1,1,0,1,1".parse()?)),
        "figure1" => Graph::from_edges(8, FIGURE1_EDGES),
        "figure5" => Graph::from_edges(9, FIGURE5_EDGES),
        other => Err(Error::InvalidArgument(format!("unknown graph kind {other:?}"))),
    }
}
