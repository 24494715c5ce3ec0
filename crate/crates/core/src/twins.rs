use serde::Serialize;

use crate::graph::Graph;

/// Twin pairs of a graph and the matching lower bound they induce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinClasses {
    /// Unordered twin pairs `(u, v)` with `u < v`, lexicographically sorted.
    pub twin_pairs: Vec<(usize, usize)>,
    /// Size of a maximum matching in the graph whose edges are `twin_pairs`.
    pub matching_bound: usize,
}

impl TwinClasses {
    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        self.twin_pairs.binary_search(&(u.min(v), u.max(v))).is_ok()
    }
}

/// `u` and `v` are twins when their neighbourhoods agree outside `{u, v}`.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |x: usize, other: usize| g.neighbors(x).iter().copied().filter(move |&w| w != other);
    u != v && strip(u, v).eq(strip(v, u))
}

pub fn twin_classes(g: &Graph) -> TwinClasses {
    let n = g.order();
    let twin_pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| are_twins(g, u, v)).collect();
    // The twin relation is an equivalence, so the pair graph is a disjoint
    // union of cliques and greedy matching is maximum.
    let mut matched = vec![false; n];
    let mut matching_bound = 0;
    for &(u, v) in &twin_pairs {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            matching_bound += 1;
        }
    }
    TwinClasses { twin_pairs, matching_bound }
}

/// Twin equivalence classes with at least two members, each sorted,
/// ordered by smallest member.
pub(crate) fn twin_groups(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut groups = Vec::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        let group: Vec<usize> =
            std::iter::once(u).chain((u + 1..n).filter(|&v| !assigned[v] && are_twins(g, u, v))).collect();
        if group.len() > 1 {
            debug_assert!(group.iter().all(|&a| group.iter().all(|&b| a == b || are_twins(g, a, b))));
            for &v in &group {
                assigned[v] = true;
            }
            groups.push(group);
        }
    }
    groups
}
