//! Brute-force oracles and graph generators shared by the integration tests.
//! Nothing here calls into the solver or the max-flow code.

#![allow(dead_code)]

use std::collections::HashMap;

use conndim::{CnfFormula, Graph, KappaMatrix, Literal};
use rand::seq::SliceRandom;
use rand::Rng;

pub const INF: u32 = u32::MAX;

/// Every labelled graph on `n` vertices, connected or not.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << slots.len()).map(move |mask| {
        let edges = slots.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// A connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `p`, under a random relabelling.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((label[rng.gen_range(0..v)], label[v]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable_by_key(|&(a, b)| (a.min(b), a.max(b)));
    edges.dedup_by_key(|&mut (a, b)| (a.min(b), a.max(b)));
    Graph::from_edges(n, edges).unwrap()
}

fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
}

pub fn connected_by_search(g: &Graph) -> bool {
    components_without(g, None) == 1
}

/// Number of connected components of `g - skip`.
fn components_without(g: &Graph, skip: Option<usize>) -> usize {
    let adj = adjacency(g);
    let mut seen = skip.map_or(0u64, |s| 1 << s);
    let all = if g.order() == 64 { u64::MAX } else { (1u64 << g.order()) - 1 };
    let mut count = 0;
    while seen != all {
        let start = (!seen & all).trailing_zeros() as usize;
        let mut frontier = 1u64 << start;
        seen |= frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        count += 1;
    }
    count
}

/// Block count of a connected graph on at least two vertices, from the
/// identity `b = 1 + Σ_v (c(G - v) - 1)`.
pub fn blocks_oracle(g: &Graph) -> usize {
    1 + (0..g.order()).map(|v| components_without(g, Some(v)) - 1).sum::<usize>()
}

/// Internal-vertex masks of all simple `u`-`v` paths.
fn path_interiors(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    fn walk(adj: &[u64], at: usize, target: usize, visited: u64, interior: u64, out: &mut Vec<u64>) {
        let mut next = adj[at] & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            if w == target {
                out.push(interior);
            } else {
                walk(adj, w, target, visited | 1 << w, interior | 1 << w, out);
            }
        }
    }
    let mut out = Vec::new();
    walk(adj, u, v, 1 << u, 0, &mut out);
    out
}

/// Largest number of pairwise disjoint masks from `masks` inside `avail`.
fn packing(masks: &[u64], avail: u64, memo: &mut HashMap<u64, u32>) -> u32 {
    if let Some(&hit) = memo.get(&avail) {
        return hit;
    }
    let best =
        masks.iter().filter(|&&m| m & !avail == 0).map(|&m| 1 + packing(masks, avail & !m, memo)).max().unwrap_or(0);
    memo.insert(avail, best);
    best
}

/// Maximum number of internally disjoint `u`-`v` paths, found by listing
/// every simple path and packing their interiors exhaustively.
pub fn kappa_oracle(g: &Graph, u: usize, v: usize) -> u32 {
    if u == v {
        return INF;
    }
    let adj = adjacency(g);
    let mut masks = path_interiors(&adj, u, v);
    let direct = masks.contains(&0);
    masks.retain(|&m| m != 0);
    masks.sort_unstable();
    masks.dedup();
    let minimal: Vec<u64> = masks.iter().copied().filter(|&m| !masks.iter().any(|&o| o != m && o & m == o)).collect();
    let avail = masks.iter().fold(0, |a, &m| a | m);
    u32::from(direct) + packing(&minimal, avail, &mut HashMap::new())
}

/// Smallest vertex set avoiding `u`, `v` whose removal separates them,
/// plus one when they are adjacent. Zero across components.
pub fn kappa_by_separators(g: &Graph, u: usize, v: usize) -> u32 {
    if u == v {
        return INF;
    }
    let n = g.order();
    let adj = adjacency(g);
    let direct = u32::from(adj[u] >> v & 1 == 1);
    let reach = |removed: u64| -> bool {
        let mut seen = removed | 1 << u;
        let mut frontier = 1u64 << u;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let mut fresh = adj[x] & !seen;
            if x == u && direct == 1 {
                fresh &= !(1 << v);
            }
            if fresh >> v & 1 == 1 {
                return true;
            }
            seen |= fresh;
            frontier |= fresh;
        }
        false
    };
    let others: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
    (0..=others.len() as u32)
        .find(|&k| {
            (0u64..1 << others.len()).filter(|s| s.count_ones() == k).any(|s| {
                let removed =
                    others.iter().enumerate().filter(|(i, _)| s >> i & 1 == 1).fold(0, |m, (_, &x)| m | 1 << x);
                !reach(removed)
            })
        })
        .expect("removing all other vertices separates")
        + direct
}

pub fn oracle_table(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| kappa_oracle(g, u.min(v), u.max(v))).collect()).collect()
}

pub fn table_of(km: &KappaMatrix) -> Vec<Vec<u32>> {
    km.rows().map(|row| row.iter().map(|k| k.finite().unwrap_or(INF)).collect()).collect()
}

pub fn distance_table(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.order()).map(|s| g.bfs_distances(s).into_iter().map(|d| d.unwrap_or(INF)).collect()).collect()
}

/// Whether the landmarks tell every pair of vertices apart under `table`.
pub fn resolves(table: &[Vec<u32>], set: &[usize]) -> bool {
    let n = table.len();
    (0..n).all(|u| (u + 1..n).all(|v| set.iter().any(|&w| table[u][w] != table[v][w])))
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n)
        .filter(move |m| m.count_ones() as usize == k)
        .map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

/// Dimension under `table` and all its minimum resolving sets, by trying
/// every subset in order of size.
pub fn bases_oracle(table: &[Vec<u32>]) -> (usize, Vec<Vec<usize>>) {
    let n = table.len();
    for k in 0..=n {
        let found: Vec<Vec<usize>> = subsets_of_size(n, k).filter(|s| resolves(table, s)).collect();
        if !found.is_empty() {
            return (k, found);
        }
    }
    unreachable!("the whole vertex set resolves")
}

/// Dimension only, stopping at the first resolving subset.
pub fn dim_oracle(table: &[Vec<u32>]) -> usize {
    let n = table.len();
    (0..=n).find(|&k| subsets_of_size(n, k).any(|s| resolves(table, &s))).unwrap()
}

/// Whether no set of `k` landmarks resolves.
pub fn no_resolving_set_of_size(table: &[Vec<u32>], k: usize) -> bool {
    !subsets_of_size(table.len(), k).any(|s| resolves(table, &s))
}

/// Whether every basis leaves an outside vertex whose representation is all ones.
pub fn forces_ones_oracle(table: &[Vec<u32>]) -> bool {
    let (_, bases) = bases_oracle(table);
    bases.iter().all(|b| (0..table.len()).any(|v| !b.contains(&v) && b.iter().all(|&w| table[v][w] == 1)))
}

pub fn twin_pairs_oracle(g: &Graph) -> Vec<(usize, usize)> {
    let adj = adjacency(g);
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u] & !(1 << v) == adj[v] & !(1 << u))
        .collect()
}

fn literal_true(lit: &Literal, assignment: &[bool]) -> bool {
    if lit.positive {
        assignment[lit.var]
    } else {
        !assignment[lit.var]
    }
}

pub fn evaluates_true(f: &CnfFormula, assignment: &[bool]) -> bool {
    f.clauses().iter().all(|c| c.iter().any(|l| literal_true(l, assignment)))
}

/// Satisfiability by truth table.
pub fn sat_oracle(f: &CnfFormula) -> bool {
    let n = f.num_vars();
    (0u32..1 << n).any(|mask| evaluates_true(f, &(0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>()))
}

/// A random 3-CNF with `n` variables and `m` clauses in which every
/// variable occurs. Needs `3m >= n >= 3`.
pub fn random_cnf<R: Rng>(rng: &mut R, n: usize, m: usize) -> CnfFormula {
    let vars: Vec<usize> = (0..n).collect();
    loop {
        let clauses: Vec<[Literal; 3]> = (0..m)
            .map(|_| {
                let picked: Vec<usize> = vars.choose_multiple(rng, 3).copied().collect();
                [0, 1, 2].map(|k| Literal { var: picked[k], positive: rng.gen_bool(0.5) })
            })
            .collect();
        if let Ok(f) = CnfFormula::new(n, clauses) {
            return f;
        }
    }
}

/// All eight sign patterns over three variables.
pub fn all_sign_patterns() -> CnfFormula {
    let clauses = (0..8u8).map(|s| [0, 1, 2].map(|k| Literal { var: k, positive: s >> k & 1 == 0 })).collect();
    CnfFormula::new(3, clauses).unwrap()
}
