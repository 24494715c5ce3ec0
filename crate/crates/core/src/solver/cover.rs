//! Minimum set cover over [`PairCoverage`] by branch-and-bound, the greedy
//! heuristic, and exhaustive enumeration of covers of a fixed size.

use fixedbitset::FixedBitSet;

use crate::resolver::PairCoverage;

/// Greedy cover: repeatedly add the vertex covering the most uncovered
/// pairs, lowest index first on ties. `start` is included unconditionally.
pub(crate) fn greedy_cover(cov: &PairCoverage, start: &[usize]) -> Vec<usize> {
    let mut chosen = start.to_vec();
    let mut uncovered = full_set(cov);
    uncovered.difference_with(&cov.covered_by(start));
    while !uncovered.is_clear() {
        let (best, _) = (0..cov.order())
            .map(|w| (w, cov.cover(w).intersection_count(&uncovered)))
            .fold((usize::MAX, 0), |acc, (w, gain)| if gain > acc.1 { (w, gain) } else { acc });
        chosen.push(best);
        uncovered.difference_with(cov.cover(best));
    }
    chosen.sort_unstable();
    chosen.dedup();
    chosen
}

fn full_set(cov: &PairCoverage) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(cov.pair_count());
    bits.insert_range(..);
    bits
}

/// Result of a minimisation run.
#[derive(Debug, Clone)]
pub(crate) struct CoverOutcome {
    /// Smallest cover found, forced vertices included, sorted.
    pub best: Vec<usize>,
    /// Whether the search finished, so that `best` is optimal.
    pub exhausted: bool,
    pub nodes: u64,
}

enum Goal {
    Minimize { best: Vec<usize>, lower: usize },
    Enumerate { free_size: usize, found: Vec<Vec<usize>> },
}

struct Search<'a> {
    cov: &'a PairCoverage,
    forced: &'a [usize],
    /// Free vertices that cover each pair, in increasing order.
    coverers: Vec<Vec<usize>>,
    banned: Vec<bool>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
    aborted: bool,
    finished: bool,
    goal: Goal,
}

impl<'a> Search<'a> {
    fn new(cov: &'a PairCoverage, forced: &'a [usize], budget: u64, goal: Goal) -> Self {
        let n = cov.order();
        let mut banned = vec![false; n];
        for &f in forced {
            banned[f] = true;
        }
        let coverers = (0..cov.pair_count())
            .map(|p| (0..n).filter(|&w| !banned[w] && cov.cover(w).contains(p)).collect())
            .collect();
        Search {
            cov,
            forced,
            coverers,
            banned,
            chosen: Vec::new(),
            nodes: 0,
            budget,
            aborted: false,
            finished: false,
            goal,
        }
    }

    /// Number of free vertices that may still be added below this node
    /// without losing the point of the search; `None` when already over.
    fn cap(&self) -> Option<usize> {
        let limit = match &self.goal {
            Goal::Minimize { best, .. } => best.len().saturating_sub(self.forced.len()).checked_sub(1)?,
            Goal::Enumerate { free_size, .. } => *free_size,
        };
        limit.checked_sub(self.chosen.len())
    }

    fn record(&mut self) {
        match &mut self.goal {
            Goal::Minimize { best, lower } => {
                let mut set: Vec<usize> = self.forced.iter().chain(&self.chosen).copied().collect();
                set.sort_unstable();
                if set.len() < best.len() {
                    *best = set;
                    if best.len() <= *lower {
                        self.finished = true;
                    }
                }
            }
            Goal::Enumerate { free_size, found } => {
                if self.chosen.len() == *free_size {
                    let mut set = self.chosen.clone();
                    set.sort_unstable();
                    found.push(set);
                }
            }
        }
    }

    fn run(&mut self, uncovered: &FixedBitSet) {
        if self.aborted || self.finished {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        if uncovered.is_clear() {
            self.record();
            return;
        }
        let cap = match self.cap() {
            Some(cap) if cap > 0 => cap,
            _ => return,
        };

        let mut branch: Option<(usize, usize)> = None;
        for p in uncovered.ones() {
            let available = self.coverers[p].iter().filter(|&&w| !self.banned[w]).count();
            if available == 0 {
                return;
            }
            if branch.is_none_or(|(_, c)| available < c) {
                branch = Some((p, available));
            }
        }
        let (pair, _) = branch.expect("uncovered set is non-empty");

        let remaining = uncovered.count_ones(..);
        let max_gain = (0..self.cov.order())
            .filter(|&w| !self.banned[w])
            .map(|w| self.cov.cover(w).intersection_count(uncovered))
            .max()
            .unwrap_or(0);
        if max_gain == 0 || remaining.div_ceil(max_gain) > cap {
            return;
        }

        let options = self.coverers[pair].clone();
        let mut excluded = Vec::new();
        for w in options {
            if self.banned[w] {
                continue;
            }
            let mut next = uncovered.clone();
            next.difference_with(self.cov.cover(w));
            self.chosen.push(w);
            self.run(&next);
            self.chosen.pop();
            if self.aborted || self.finished {
                break;
            }
            self.banned[w] = true;
            excluded.push(w);
            if !self.cap().is_some_and(|c| c > 0) {
                break;
            }
        }
        for w in excluded {
            self.banned[w] = false;
        }
    }

    fn start(&mut self) {
        let mut uncovered = full_set(self.cov);
        uncovered.difference_with(&self.cov.covered_by(self.forced));
        self.run(&uncovered);
    }
}

/// Branch-and-bound minimum cover containing `forced`.
///
/// `incumbent` must be a cover; `lower` is a proven lower bound on the
/// optimum and stops the search as soon as it is met.
pub(crate) fn minimum_cover(
    cov: &PairCoverage,
    forced: &[usize],
    incumbent: Vec<usize>,
    lower: usize,
    budget: u64,
) -> CoverOutcome {
    debug_assert!(cov.is_cover(&incumbent));
    if incumbent.len() <= lower.max(forced.len()) {
        return CoverOutcome { best: incumbent, exhausted: true, nodes: 0 };
    }
    let mut search = Search::new(cov, forced, budget, Goal::Minimize { best: incumbent, lower });
    search.start();
    let Goal::Minimize { best, .. } = search.goal else { unreachable!() };
    CoverOutcome { best, exhausted: !search.aborted, nodes: search.nodes }
}

/// All covers consisting of `forced` plus exactly `free_size` other
/// vertices, assuming no smaller such cover exists. Each returned set lists
/// only the free vertices. `None` when the node budget runs out.
pub(crate) fn covers_of_size(
    cov: &PairCoverage,
    forced: &[usize],
    free_size: usize,
    budget: u64,
) -> Option<(Vec<Vec<usize>>, u64)> {
    let mut search = Search::new(cov, forced, budget, Goal::Enumerate { free_size, found: Vec::new() });
    search.start();
    if search.aborted {
        return None;
    }
    let Goal::Enumerate { mut found, .. } = search.goal else { unreachable!() };
    found.sort();
    Some((found, search.nodes))
}
