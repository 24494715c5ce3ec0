//! Exact, greedy and decomposition solvers for the connectivity dimension,
//! basis enumeration, and the metric dimension for comparison.

mod bounds;
mod cover;
mod metric;

use log::debug;
use serde::Serialize;

use crate::blocks::block_cut_tree;
use crate::connectivity::{kappa_matrix, KappaMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::resolver::{resolving_verdict, PairCoverage, Profile};
use crate::twins::twin_groups;

pub use bounds::{blocks_bound, delta_exact_bound, delta_log_bound, lower_bounds, BoundsReport};
pub use metric::DistanceMatrix;

use cover::{covers_of_size, greedy_cover, minimum_cover};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of branch-and-bound nodes per search.
    pub node_budget: u64,
    /// Largest order for which all bases are enumerated.
    pub forcing_gate: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { node_budget: 100_000_000, forcing_gate: 16 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    GreedyUpper,
    Decomposition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub lower: usize,
    pub upper: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionResult {
    /// The dimension when `conclusive`, otherwise the best upper bound found.
    pub value: usize,
    pub basis: Vec<usize>,
    pub method: Method,
    pub bounds: SearchBounds,
    pub conclusive: bool,
    pub verified: bool,
    pub nodes: u64,
}

/// Vertices fixed by twin normalization (every member of a twin class
/// except the lowest), together with the classes themselves.
fn forced_twins(g: &Graph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let groups = twin_groups(g);
    let mut forced: Vec<usize> = groups.iter().flat_map(|c| c[1..].iter().copied()).collect();
    forced.sort_unstable();
    (forced, groups)
}

struct Solved {
    basis: Vec<usize>,
    lower: usize,
    conclusive: bool,
    nodes: u64,
}

fn solve_cover<P: Profile>(g: &Graph, profile: &P, lower: usize, budget: u64) -> Solved {
    let cov = PairCoverage::from_profile(profile);
    let (forced, _) = forced_twins(g);
    let plain = greedy_cover(&cov, &[]);
    let seeded = greedy_cover(&cov, &forced);
    let incumbent = if seeded.len() < plain.len() { seeded } else { plain };
    let lower = lower.max(forced.len());
    let outcome = minimum_cover(&cov, &forced, incumbent, lower, budget);
    debug!("cover search on n = {}: {} nodes, size {}", g.order(), outcome.nodes, outcome.best.len());
    Solved {
        lower: if outcome.exhausted { outcome.best.len() } else { lower },
        basis: outcome.best,
        conclusive: outcome.exhausted,
        nodes: outcome.nodes,
    }
}

/// Runs `solve` on every component and combines the results by the
/// disjoint-union formula. `solve` only sees connected graphs with n >= 2.
fn by_components(g: &Graph, mut solve: impl FnMut(&Graph) -> Result<Solved>) -> Result<Solved> {
    g.require_nonempty()?;
    let components = g.connected_components();
    let isolated: Vec<usize> = components.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
    let mut total = Solved {
        basis: isolated.iter().take(isolated.len().saturating_sub(1)).copied().collect(),
        lower: isolated.len().saturating_sub(1),
        conclusive: true,
        nodes: 0,
    };
    for comp in components.iter().filter(|c| c.len() > 1) {
        let part = if components.len() == 1 { solve(g)? } else { solve(&g.induced(comp))? };
        total.basis.extend(part.basis.iter().map(|&v| comp[v]));
        total.lower += part.lower;
        total.conclusive &= part.conclusive;
        total.nodes += part.nodes;
    }
    total.basis.sort_unstable();
    Ok(total)
}

fn finish(km: &KappaMatrix, solved: Solved, method: Method) -> DimensionResult {
    let verified = resolving_verdict(km, &solved.basis).is_resolving();
    DimensionResult {
        value: solved.basis.len(),
        bounds: SearchBounds { lower: solved.lower, upper: solved.basis.len() },
        basis: solved.basis,
        method,
        conclusive: solved.conclusive,
        verified,
        nodes: solved.nodes,
    }
}

/// Exact connectivity dimension with default settings.
pub fn cdim_exact(g: &Graph) -> Result<DimensionResult> {
    cdim_exact_with(g, &SolverConfig::default())
}

/// Exact connectivity dimension by branch-and-bound set cover.
///
/// A result with `conclusive == false` means the node budget ran out; its
/// value is then only an upper bound and `bounds.lower` the proven lower bound.
pub fn cdim_exact_with(g: &Graph, config: &SolverConfig) -> Result<DimensionResult> {
    let solved = by_components(g, |part| {
        let km = kappa_matrix(part);
        Ok(solve_cover(part, &km, bounds::best_lower(part)?, config.node_budget))
    })?;
    Ok(finish(&kappa_matrix(g), solved, Method::Exact))
}

/// Greedy upper bound on the connectivity dimension.
pub fn cdim_greedy(g: &Graph) -> Result<DimensionResult> {
    g.require_nonempty()?;
    let km = kappa_matrix(g);
    let basis = greedy_cover(&PairCoverage::from_profile(&km), &[]);
    let lower = usize::from(g.order() > 1);
    Ok(finish(&km, Solved { basis, lower, conclusive: true, nodes: 0 }, Method::GreedyUpper))
}

/// Metric dimension of a connected graph with default settings.
pub fn mdim_exact(g: &Graph) -> Result<DimensionResult> {
    mdim_exact_with(g, &SolverConfig::default())
}

pub fn mdim_exact_with(g: &Graph, config: &SolverConfig) -> Result<DimensionResult> {
    let dm = DistanceMatrix::new(g)?;
    let solved = if g.order() == 1 {
        Solved { basis: Vec::new(), lower: 0, conclusive: true, nodes: 0 }
    } else {
        solve_cover(g, &dm, 1, config.node_budget)
    };
    let verified = resolving_verdict(&dm, &solved.basis).is_resolving();
    Ok(DimensionResult {
        value: solved.basis.len(),
        bounds: SearchBounds { lower: solved.lower, upper: solved.basis.len() },
        basis: solved.basis,
        method: Method::Exact,
        conclusive: solved.conclusive,
        verified,
        nodes: solved.nodes,
    })
}

fn require_connected(g: &Graph) -> Result<()> {
    g.require_nonempty()?;
    let components = g.connected_components().len();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(())
}

pub fn enumerate_bases(g: &Graph) -> Result<Vec<Vec<usize>>> {
    enumerate_bases_with(g, &SolverConfig::default())
}

/// All minimum resolving sets of a connected graph, sorted.
///
/// Covers are enumerated with the twin-forced vertices fixed, then each one
/// is expanded over every choice of the omitted member per twin class.
pub fn enumerate_bases_with(g: &Graph, config: &SolverConfig) -> Result<Vec<Vec<usize>>> {
    require_connected(g)?;
    if g.order() == 1 {
        return Ok(vec![Vec::new()]);
    }
    let exact = cdim_exact_with(g, config)?;
    if !exact.conclusive {
        return Err(Error::Inconclusive { budget: config.node_budget });
    }
    let km = kappa_matrix(g);
    let cov = PairCoverage::from_profile(&km);
    let (forced, groups) = forced_twins(g);
    let (normalized, _) = covers_of_size(&cov, &forced, exact.value - forced.len(), config.node_budget)
        .ok_or(Error::Inconclusive { budget: config.node_budget })?;

    let mut bases = Vec::new();
    for free in normalized {
        let mut partial: Vec<Vec<usize>> = vec![free];
        for group in &groups {
            let lowest_taken = partial[0].contains(&group[0]);
            partial = partial
                .into_iter()
                .flat_map(|set| {
                    let omit: Vec<Option<usize>> =
                        if lowest_taken { vec![None] } else { group.iter().map(|&m| Some(m)).collect() };
                    omit.into_iter().map(move |skip| {
                        let mut next: Vec<usize> = set.iter().copied().filter(|v| !group.contains(v)).collect();
                        next.extend(group.iter().copied().filter(|&m| Some(m) != skip));
                        next
                    })
                })
                .collect();
        }
        bases.extend(partial);
    }
    for basis in &mut bases {
        basis.sort_unstable();
    }
    bases.sort();
    bases.dedup();
    Ok(bases)
}

/// The vertex outside `basis` whose representation is all ones, if any.
fn all_ones_vertex(km: &KappaMatrix, basis: &[usize]) -> Option<usize> {
    (0..km.order())
        .filter(|v| !basis.contains(v))
        .find(|&v| basis.iter().all(|&b| km.get(v, b) == crate::connectivity::KappaValue::Finite(1)))
}

pub fn forces_one_representation(g: &Graph) -> Result<bool> {
    forces_one_representation_with(g, &SolverConfig::default())
}

/// Whether every basis leaves a vertex whose representation is all ones.
///
/// The single-vertex graph counts as forcing: its lone vertex has the
/// empty representation against the empty basis.
pub fn forces_one_representation_with(g: &Graph, config: &SolverConfig) -> Result<bool> {
    require_connected(g)?;
    if g.order() > config.forcing_gate {
        return Err(Error::TooLarge { n: g.order(), limit: config.forcing_gate });
    }
    let km = kappa_matrix(g);
    Ok(enumerate_bases_with(g, config)?.iter().all(|b| all_ones_vertex(&km, b).is_some()))
}

pub fn cdim_decompose(g: &Graph) -> Result<DimensionResult> {
    cdim_decompose_with(g, &SolverConfig::default())
}

/// Connectivity dimension by recursive splitting at bridges.
///
/// Removing a bridge leaves parts `G₁`, `G₂` and the value is
/// `cdim(G₁) + cdim(G₂)`, plus one when both parts force an all-ones
/// representation. Bridgeless pieces are solved exactly; parts above the
/// forcing gate make the current level fall back to the exact solver.
pub fn cdim_decompose_with(g: &Graph, config: &SolverConfig) -> Result<DimensionResult> {
    let solved = by_components(g, |part| decompose_connected(part, config))?;
    let mut result = finish(&kappa_matrix(g), solved, Method::Decomposition);
    result.bounds.lower = if result.conclusive { result.value } else { result.bounds.lower };
    Ok(result)
}

struct PartInfo {
    basis: Vec<usize>,
    ones_vertex: Option<usize>,
}

fn part_info(part: &Graph, config: &SolverConfig) -> Result<PartInfo> {
    let km = kappa_matrix(part);
    let bases = enumerate_bases_with(part, config)?;
    let flagged: Vec<(Vec<usize>, Option<usize>)> = bases
        .into_iter()
        .map(|b| {
            let w = all_ones_vertex(&km, &b);
            (b, w)
        })
        .collect();
    let forcing = flagged.iter().all(|(_, w)| w.is_some());
    let (basis, ones_vertex) =
        if forcing { flagged.into_iter().next() } else { flagged.into_iter().find(|(_, w)| w.is_none()) }
            .expect("a graph has at least one basis");
    Ok(PartInfo { basis, ones_vertex })
}

fn decompose_connected(g: &Graph, config: &SolverConfig) -> Result<Solved> {
    let exact = |g: &Graph| -> Result<Solved> {
        let km = kappa_matrix(g);
        Ok(solve_cover(g, &km, bounds::best_lower(g)?, config.node_budget))
    };
    let Some(&(u, v)) = block_cut_tree(g)?.bridges().first() else {
        return exact(g);
    };
    let split = g.without_edge(u, v).connected_components();
    let (side_u, side_v) = if split[0].contains(&u) { (&split[0], &split[1]) } else { (&split[1], &split[0]) };
    if side_u.len() > config.forcing_gate || side_v.len() > config.forcing_gate {
        debug!("bridge ({u}, {v}) splits off a part above the forcing gate; solving exactly");
        return exact(g);
    }

    let mut value = 0;
    let mut basis = Vec::new();
    let mut ones = Vec::new();
    let mut nodes = 0;
    let mut conclusive = true;
    for side in [side_u, side_v] {
        let part = g.induced(side);
        let sub = if part.order() == 1 {
            Solved { basis: Vec::new(), lower: 0, conclusive: true, nodes: 0 }
        } else {
            decompose_connected(&part, config)?
        };
        let info = match part_info(&part, config) {
            Ok(info) => info,
            Err(Error::Inconclusive { .. }) => return exact(g),
            Err(e) => return Err(e),
        };
        debug_assert_eq!(sub.basis.len(), info.basis.len());
        value += sub.basis.len();
        nodes += sub.nodes;
        conclusive &= sub.conclusive;
        basis.extend(info.basis.iter().map(|&x| side[x]));
        ones.push(info.ones_vertex.map(|x| side[x]));
    }
    if let [Some(a), Some(b)] = ones[..] {
        value += 1;
        basis.push(a.min(b));
    }
    basis.sort_unstable();
    debug_assert_eq!(basis.len(), value);
    Ok(Solved { lower: if conclusive { value } else { 0 }, basis, conclusive, nodes })
}
