use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::resolver::Profile;

/// All-pairs shortest-path distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceMatrix {
    n: usize,
    #[serde(rename = "distance")]
    rows: Vec<Vec<u32>>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_nonempty()?;
        let components = g.connected_components().len();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }
        let rows = (0..g.order())
            .map(|s| g.bfs_distances(s).into_iter().map(|d| d.expect("connected graph")).collect())
            .collect();
        Ok(DistanceMatrix { n: g.order(), rows })
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.rows[u][v]
    }
}

impl Profile for DistanceMatrix {
    type Value = u32;

    fn order(&self) -> usize {
        self.n
    }

    fn value(&self, v: usize, w: usize) -> u32 {
        self.rows[v][w]
    }
}
