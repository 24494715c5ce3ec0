//! Representations against landmark lists, resolving-set checks, and the
//! pair-coverage set system consumed by the solvers.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::connectivity::{KappaMatrix, KappaValue};
use crate::error::{Error, Result};

/// A symmetric vertex-to-vertex table whose rows identify vertices.
///
/// The κ-matrix and the shortest-path distance matrix both implement it, so
/// the resolving machinery and the solvers serve either invariant.
pub trait Profile: Sync {
    type Value: Copy + Ord + Send + Sync;

    fn order(&self) -> usize;

    fn value(&self, v: usize, w: usize) -> Self::Value;
}

impl Profile for KappaMatrix {
    type Value = KappaValue;

    fn order(&self) -> usize {
        KappaMatrix::order(self)
    }

    fn value(&self, v: usize, w: usize) -> KappaValue {
        self.get(v, w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representation {
    pub vertex: usize,
    pub landmarks: Vec<usize>,
    pub values: Vec<KappaValue>,
}

impl Representation {
    /// True when every entry equals `Finite(1)` (vacuously for no landmarks).
    pub fn is_all_ones(&self) -> bool {
        self.values.iter().all(|&x| x == KappaValue::Finite(1))
    }
}

fn check_vertices(n: usize, vertices: &[usize]) -> Result<()> {
    match vertices.iter().find(|&&v| v >= n) {
        Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n }),
        None => Ok(()),
    }
}

/// `r(v, W)`: the κ-values of `v` against the ordered landmarks `w_list`.
pub fn representation(km: &KappaMatrix, v: usize, w_list: &[usize]) -> Result<Representation> {
    check_vertices(km.order(), &[v])?;
    check_vertices(km.order(), w_list)?;
    Ok(Representation { vertex: v, landmarks: w_list.to_vec(), values: w_list.iter().map(|&w| km.get(v, w)).collect() })
}

/// Outcome of a resolving-set check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Resolving,
    /// The lexicographically smallest pair sharing a representation.
    Unresolved(usize, usize),
}

impl Verdict {
    pub fn is_resolving(self) -> bool {
        matches!(self, Verdict::Resolving)
    }

    pub fn witness(self) -> Option<(usize, usize)> {
        match self {
            Verdict::Resolving => None,
            Verdict::Unresolved(u, v) => Some((u, v)),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            resolving: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<(usize, usize)>,
        }
        Repr { resolving: self.is_resolving(), witness: self.witness() }.serialize(s)
    }
}

/// Checks whether `w_set` resolves the vertices of `km`.
pub fn is_resolving(km: &KappaMatrix, w_set: &[usize]) -> Result<Verdict> {
    check_vertices(km.order(), w_set)?;
    Ok(resolving_verdict(km, w_set))
}

/// Generic resolving check. Vertices are sorted by their representation so
/// that equal representations become adjacent runs.
pub fn resolving_verdict<P: Profile>(profile: &P, w_set: &[usize]) -> Verdict {
    let n = profile.order();
    let rows: Vec<Vec<P::Value>> = (0..n).map(|v| w_set.iter().map(|&w| profile.value(v, w)).collect()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| rows[a].cmp(&rows[b]).then(a.cmp(&b)));
    let mut best: Option<(usize, usize)> = None;
    for run in order.chunk_by(|&a, &b| rows[a] == rows[b]) {
        if let [u, v, ..] = *run {
            best = Some(best.map_or((u, v), |b| b.min((u, v))));
        }
    }
    match best {
        Some((u, v)) => Verdict::Unresolved(u, v),
        None => Verdict::Resolving,
    }
}

/// Set-cover view of resolving: vertex `w` covers every unordered pair it
/// distinguishes, including all pairs that contain `w` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCoverage {
    n: usize,
    cover: Vec<FixedBitSet>,
}

impl PairCoverage {
    pub fn from_profile<P: Profile>(profile: &P) -> Self {
        let n = profile.order();
        let pairs = pair_count(n);
        let cover = (0..n)
            .into_par_iter()
            .map(|w| {
                let mut bits = FixedBitSet::with_capacity(pairs);
                let mut idx = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if u == w || v == w || profile.value(u, w) != profile.value(v, w) {
                            bits.insert(idx);
                        }
                        idx += 1;
                    }
                }
                bits
            })
            .collect();
        PairCoverage { n, cover }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        pair_count(self.n)
    }

    /// Position of `{u, v}` in the lexicographic enumeration of pairs.
    pub fn pair_index(&self, u: usize, v: usize) -> usize {
        let (u, v) = (u.min(v), u.max(v));
        debug_assert!(u < v && v < self.n);
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    pub fn pair(&self, index: usize) -> (usize, usize) {
        let mut rest = index;
        for u in 0..self.n {
            let row = self.n - u - 1;
            if rest < row {
                return (u, u + 1 + rest);
            }
            rest -= row;
        }
        panic!("pair index {index} out of range")
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v)))
    }

    pub fn cover(&self, w: usize) -> &FixedBitSet {
        &self.cover[w]
    }

    pub fn covers(&self, w: usize, u: usize, v: usize) -> bool {
        self.cover[w].contains(self.pair_index(u, v))
    }

    /// Union of the cover sets of `w_set`.
    pub fn covered_by(&self, w_set: &[usize]) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.pair_count());
        for &w in w_set {
            bits.union_with(&self.cover[w]);
        }
        bits
    }

    pub fn is_cover(&self, w_set: &[usize]) -> bool {
        self.covered_by(w_set).count_ones(..) == self.pair_count()
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn pair_coverage(km: &KappaMatrix) -> PairCoverage {
    PairCoverage::from_profile(km)
}
