use serde::Serialize;

use crate::blocks::block_count;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::twins::twin_classes;

use super::cdim_greedy;

/// Lower bounds on the connectivity dimension of a connected graph, plus
/// the greedy upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    /// Smallest `k` with `Δ^k >= (n + 1) / 2`.
    pub delta_log_bound: usize,
    /// Smallest `k >= 1` with `n <= k + Δ^k`.
    pub delta_exact_bound: usize,
    pub twin_matching_bound: usize,
    /// `⌈(blocks + 1) / 2⌉`.
    pub blocks_bound: usize,
    pub best_lower: usize,
    pub greedy_upper: usize,
}

/// Smallest `k` with `2·Δ^k >= n + 1`, in exact integer arithmetic.
///
/// For `Δ = 1` (only `K₂` among connected graphs) the logarithm is
/// undefined and the value `1` is returned, which is the dimension of `K₂`.
pub fn delta_log_bound(n: usize, max_degree: usize) -> usize {
    if max_degree <= 1 {
        return usize::from(n >= 2);
    }
    let target = n as u128 + 1;
    let mut power: u128 = 1;
    let mut k = 0;
    while 2 * power < target {
        power *= max_degree as u128;
        k += 1;
    }
    k
}

/// Smallest `k >= 1` with `n <= k + Δ^k`.
pub fn delta_exact_bound(n: usize, max_degree: usize) -> usize {
    let mut k = 1usize;
    loop {
        let power = (max_degree as u128).saturating_pow(k as u32);
        if n as u128 <= k as u128 + power {
            return k;
        }
        k += 1;
    }
}

pub fn blocks_bound(blocks: usize) -> usize {
    (blocks + 2) / 2
}

/// Maximum of the four lower bounds, without running the greedy heuristic.
pub(crate) fn best_lower(g: &Graph) -> Result<usize> {
    Ok(lower_parts(g)?.into_iter().max().unwrap_or(0))
}

fn lower_parts(g: &Graph) -> Result<[usize; 4]> {
    g.require_nonempty()?;
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidArgument("bounds need at least two vertices".into()));
    }
    let delta = g.max_degree();
    Ok([
        delta_log_bound(n, delta),
        delta_exact_bound(n, delta),
        twin_classes(g).matching_bound,
        blocks_bound(block_count(g)?),
    ])
}

/// All bounds for a connected graph on at least two vertices.
pub fn lower_bounds(g: &Graph) -> Result<BoundsReport> {
    let [delta_log_bound, delta_exact_bound, twin_matching_bound, blocks_bound] = lower_parts(g)?;
    let best_lower = delta_log_bound.max(delta_exact_bound).max(twin_matching_bound).max(blocks_bound);
    Ok(BoundsReport {
        delta_log_bound,
        delta_exact_bound,
        twin_matching_bound,
        blocks_bound,
        best_lower,
        greedy_upper: cdim_greedy(g)?.value,
    })
}
