//! Unit-capacity augmenting-path max-flow on a vertex-split network.

use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

struct Network {
    arcs: Vec<Vec<Arc>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { arcs: vec![Vec::new(); nodes] }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap, rev: rev_from });
        self.arcs[to].push(Arc { to: from, cap: 0, rev: rev_to });
    }

    /// Finds one augmenting path by breadth-first search and pushes a unit
    /// along it. Returns whether a path existed.
    fn augment(&mut self, source: usize, sink: usize, pred: &mut [Option<(usize, usize)>]) -> bool {
        pred.iter_mut().for_each(|p| *p = None);
        let mut queue = VecDeque::from([source]);
        pred[source] = Some((source, usize::MAX));
        'search: while let Some(x) = queue.pop_front() {
            for (i, arc) in self.arcs[x].iter().enumerate() {
                if arc.cap > 0 && pred[arc.to].is_none() {
                    pred[arc.to] = Some((x, i));
                    if arc.to == sink {
                        break 'search;
                    }
                    queue.push_back(arc.to);
                }
            }
        }
        if pred[sink].is_none() {
            return false;
        }
        let mut y = sink;
        while y != source {
            let (x, i) = pred[y].expect("path predecessor");
            let rev = self.arcs[x][i].rev;
            self.arcs[x][i].cap -= 1;
            self.arcs[y][rev].cap += 1;
            y = x;
        }
        true
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths (`s != t`).
///
/// Every vertex other than `s` and `t` is split into an in-node `2v` and an
/// out-node `2v + 1` joined by a unit arc; each edge `{a, b}` becomes the
/// unit arcs `out(a) -> in(b)` and `out(b) -> in(a)`. The flow runs from
/// `out(s)` to `in(t)`, so a direct edge `st` contributes exactly one path.
pub(crate) fn disjoint_paths(g: &Graph, s: usize, t: usize) -> u32 {
    debug_assert_ne!(s, t);
    let n = g.order();
    let mut net = Network::new(2 * n);
    for v in 0..n {
        if v != s && v != t {
            net.add_arc(2 * v, 2 * v + 1, 1);
        }
    }
    for &(a, b) in g.edges() {
        net.add_arc(2 * a + 1, 2 * b, 1);
        net.add_arc(2 * b + 1, 2 * a, 1);
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut pred = vec![None; 2 * n];
    let mut flow = 0;
    while net.augment(source, sink, &mut pred) {
        flow += 1;
    }
    flow
}
