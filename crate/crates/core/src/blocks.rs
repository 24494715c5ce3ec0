//! Blocks (maximal connected subgraphs without an internal cut vertex) and
//! the block-cut incidence structure.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

type VertexEdgeSets = (Vec<usize>, Vec<(usize, usize)>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    /// Vertex sets of the blocks that carry at least one edge, sorted.
    pub blocks: Vec<Vec<usize>>,
    /// Edge sets matching `blocks` index by index.
    pub block_edges: Vec<Vec<(usize, usize)>>,
    /// Isolated-vertex blocks (only possible for the single-vertex graph).
    pub isolated: Vec<usize>,
    pub cut_vertices: Vec<usize>,
    /// `(cut vertex, block index)` for every cut vertex contained in a block.
    pub incidences: Vec<(usize, usize)>,
    pub block_count: usize,
}

impl BlockCutTree {
    /// Bridges, i.e. blocks consisting of a single edge.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        self.block_edges.iter().filter(|e| e.len() == 1).map(|e| e[0]).collect()
    }

    /// Whether the bipartite block/cut-vertex incidence graph is a tree.
    pub fn incidence_is_tree(&self) -> bool {
        let cut_index = |v: usize| self.cut_vertices.binary_search(&v).expect("cut vertex");
        let nodes = self.blocks.len() + self.cut_vertices.len();
        if nodes == 0 {
            return true;
        }
        if self.incidences.len() + 1 != nodes {
            return false;
        }
        // Union-find over blocks (0..b) and cut vertices (b..).
        let mut parent: Vec<usize> = (0..nodes).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for &(c, b) in &self.incidences {
            let (x, y) = (find(&mut parent, b), find(&mut parent, self.blocks.len() + cut_index(c)));
            if x == y {
                return false;
            }
            parent[x] = y;
        }
        true
    }
}

/// Block decomposition of a connected graph by a single depth-first
/// traversal with low-point values.
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree> {
    g.require_nonempty()?;
    let components = g.connected_components().len();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    let n = g.order();
    if n == 1 {
        return Ok(BlockCutTree {
            blocks: Vec::new(),
            block_edges: Vec::new(),
            isolated: vec![0],
            cut_vertices: Vec::new(),
            incidences: Vec::new(),
            block_count: 1,
        });
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    // (vertex, parent, next neighbour position)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, UNSEEN, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;

    while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
        if let Some(&w) = g.neighbors(v).get(*pos) {
            *pos += 1;
            if disc[w] == UNSEEN {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                edge_stack.push((v, w));
                stack.push((w, v, 0));
            } else if w != parent && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
            continue;
        }
        stack.pop();
        if let Some(&(u, _, _)) = stack.last() {
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push((e.0.min(e.1), e.0.max(e.1)));
                    if e == (u, v) {
                        break;
                    }
                }
                raw_blocks.push(block);
            }
        }
    }

    let mut pairs: Vec<VertexEdgeSets> = raw_blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            (vertices, edges)
        })
        .collect();
    pairs.sort();

    let mut membership = vec![0usize; n];
    for (vertices, _) in &pairs {
        for &v in vertices {
            membership[v] += 1;
        }
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| membership[v] > 1).collect();
    let mut incidences = Vec::new();
    for (i, (vertices, _)) in pairs.iter().enumerate() {
        for &v in vertices {
            if membership[v] > 1 {
                incidences.push((v, i));
            }
        }
    }
    incidences.sort_unstable();
    let block_count = pairs.len();
    let (blocks, block_edges) = pairs.into_iter().unzip();
    Ok(BlockCutTree { blocks, block_edges, isolated: Vec::new(), cut_vertices, incidences, block_count })
}

/// Number of blocks of a connected graph (isolated vertex counts as one).
pub fn block_count(g: &Graph) -> Result<usize> {
    block_cut_tree(g).map(|t| t.block_count)
}
