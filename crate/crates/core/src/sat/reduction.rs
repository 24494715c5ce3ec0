//! The gadget graph `G(S)` of a 3-CNF formula and its dimension criterion.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::cnf::CnfFormula;
use crate::connectivity::{kappa_matrix, KappaMatrix, KappaValue};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::resolver::resolving_verdict;

/// A gadget vertex: `x_i^a` (variable `i`, `a` in `1..=5`) or `c_j^b`
/// (clause `j`, `b` in `1..=6`). Variable and clause indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Var { i: usize, a: usize },
    Clause { j: usize, b: usize },
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Label::Var { i, a } => s.serialize_str(&format!("x{}^{a}", i + 1)),
            Label::Clause { j, b } => s.serialize_str(&format!("c{}^{b}", j + 1)),
        }
    }
}

/// Placement of the gadgets inside `G(S)`: `x_i^a` is vertex `5i + a - 1`
/// and `c_j^b` is vertex `5n + 6j + b - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetMap {
    pub n: usize,
    pub m: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    /// Sign of each variable in each clause it occurs in.
    #[serde(skip)]
    occurrences: Vec<BTreeMap<usize, bool>>,
}

impl GadgetMap {
    pub fn new(f: &CnfFormula) -> Self {
        let n = f.num_vars();
        GadgetMap {
            n,
            m: f.num_clauses(),
            alpha: (0..n).map(|i| f.alpha(i)).collect(),
            beta: (0..n).map(|i| f.beta(i)).collect(),
            occurrences: f.clauses().iter().map(|c| c.iter().map(|l| (l.var, l.positive)).collect()).collect(),
        }
    }

    pub fn order(&self) -> usize {
        5 * self.n + 6 * self.m
    }

    pub fn var_vertex(&self, i: usize, a: usize) -> usize {
        assert!(i < self.n && (1..=5).contains(&a), "no variable vertex x{}^{a}", i + 1);
        5 * i + a - 1
    }

    pub fn clause_vertex(&self, j: usize, b: usize) -> usize {
        assert!(j < self.m && (1..=6).contains(&b), "no clause vertex c{}^{b}", j + 1);
        5 * self.n + 6 * j + b - 1
    }

    pub fn vertex(&self, label: Label) -> usize {
        match label {
            Label::Var { i, a } => self.var_vertex(i, a),
            Label::Clause { j, b } => self.clause_vertex(j, b),
        }
    }

    pub fn label(&self, v: usize) -> Result<Label> {
        if v < 5 * self.n {
            Ok(Label::Var { i: v / 5, a: v % 5 + 1 })
        } else if v < self.order() {
            let r = v - 5 * self.n;
            Ok(Label::Clause { j: r / 6, b: r % 6 + 1 })
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.order() })
        }
    }

    /// Sign of `X_i` in clause `C_j`, if it occurs there.
    pub fn occurrence(&self, j: usize, i: usize) -> Option<bool> {
        self.occurrences[j].get(&i).copied()
    }

    /// JSON-friendly listing: per variable its five vertices, per clause its six.
    pub fn layout(&self) -> serde_json::Value {
        serde_json::json!({
            "variables": (0..self.n).map(|i| (1..=5).map(|a| self.var_vertex(i, a)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "clauses": (0..self.m).map(|j| (1..=6).map(|b| self.clause_vertex(j, b)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "alpha": self.alpha,
            "beta": self.beta,
        })
    }
}

const VAR_GADGET: [(usize, usize); 9] = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)];
const CLAUSE_GADGET: [(usize, usize); 12] =
    [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5), (3, 6), (4, 6), (5, 6)];

/// Builds `G(S)` on `5n + 6m` vertices.
pub fn build_reduction(f: &CnfFormula) -> Result<(Graph, GadgetMap)> {
    let map = GadgetMap::new(f);
    let x = |i, a| map.var_vertex(i, a);
    let c = |j, b| map.clause_vertex(j, b);
    let mut edges = Vec::new();
    for i in 0..map.n {
        edges.extend(VAR_GADGET.iter().map(|&(a, b)| (x(i, a), x(i, b))));
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        edges.extend(CLAUSE_GADGET.iter().map(|&(a, b)| (c(j, a), c(j, b))));
        for lit in clause {
            let i = lit.var;
            if lit.positive {
                edges.extend([(c(j, 1), x(i, 1)), (c(j, 2), x(i, 1)), (c(j, 2), x(i, 2))]);
            } else {
                edges.extend([(c(j, 1), x(i, 1)), (c(j, 1), x(i, 2)), (c(j, 2), x(i, 2))]);
            }
        }
        for k in j + 1..map.m {
            for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                edges.push((c(j, a), c(k, b)));
            }
        }
    }
    let g = Graph::from_edges(map.order(), edges)?;
    let components = g.connected_components().len();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    Ok((g, map))
}

/// What the gadget formulas say about κ for a pair of labelled vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Prediction {
    Exact(u32),
    /// κ is strictly greater than the value.
    Above(u32),
    /// κ is at least the value.
    AtLeast(u32),
}

impl Prediction {
    pub fn admits(self, k: KappaValue) -> bool {
        match (self, k) {
            (_, KappaValue::Infinity) => false,
            (Prediction::Exact(p), KappaValue::Finite(k)) => k == p,
            (Prediction::Above(p), KappaValue::Finite(k)) => k > p,
            (Prediction::AtLeast(p), KappaValue::Finite(k)) => k >= p,
        }
    }
}

/// Predicted κ between two distinct labelled vertices of `G(S)`.
pub fn predicted_kappa(map: &GadgetMap, p: Label, q: Label) -> Result<Prediction> {
    let (pv, qv) = (map.vertex(p), map.vertex(q));
    if pv == qv {
        return Err(Error::InvalidArgument("κ(v, v) is infinite, not predicted".into()));
    }
    use Label::{Clause, Var};
    let (p, q) = if pv < qv { (p, q) } else { (q, p) };
    Ok(match (p, q) {
        (Var { i, a }, Var { i: k, a: b }) if i == k => match (a, b) {
            (1, 2) => Prediction::Above(4),
            (1, 3) | (2, 3) => Prediction::Exact(4),
            _ => Prediction::Exact(3),
        },
        (Clause { j, b: a }, Clause { j: k, b }) if j == k => match (a, b) {
            (1, 2) => Prediction::Above(5),
            (3..=5, 3..=5) => Prediction::Exact(5),
            (1 | 2, 3..=5) => Prediction::Exact(4),
            _ => Prediction::Exact(3),
        },
        (Var { a, .. }, _) | (_, Var { a, .. }) if a >= 3 => Prediction::Exact(2),
        (Clause { b, .. }, _) | (_, Clause { b, .. }) if b >= 3 => Prediction::Exact(2),
        (Var { i, a: b }, Clause { j, b: a }) => match map.occurrence(j, i) {
            None => Prediction::AtLeast(2),
            Some(positive) => Prediction::Exact(clause_variable_kappa(map, i, positive, a, b)),
        },
        _ => Prediction::AtLeast(2),
    })
}

/// κ(c_j^a, x_i^b) for `a, b` in `{1, 2}` when `X_i` occurs in `C_j`:
/// the single-clause values when `m = 1`, the α/β formulas otherwise.
fn clause_variable_kappa(map: &GadgetMap, i: usize, positive: bool, a: usize, b: usize) -> u32 {
    let (alpha, beta) = (map.alpha[i] as u32, map.beta[i] as u32);
    let special = if positive { (a, b) == (2, 1) } else { (a, b) == (1, 2) };
    if map.m == 1 {
        return if special { 3 } else { 2 };
    }
    let weight = if positive { 2 * alpha + beta } else { alpha + 2 * beta };
    weight + if special { 3 } else { 2 }
}

/// The normalized candidate of an assignment, without checking that the
/// assignment satisfies the formula: `{c_j^4, c_j^5} ∪ {x_i^5} ∪ {x_i^1 or x_i^2}`.
pub fn candidate_set(map: &GadgetMap, assignment: &[bool]) -> Vec<usize> {
    let mut set: Vec<usize> = (0..map.m).flat_map(|j| [map.clause_vertex(j, 4), map.clause_vertex(j, 5)]).collect();
    for (i, &value) in assignment.iter().enumerate() {
        set.push(map.var_vertex(i, 5));
        set.push(map.var_vertex(i, if value { 1 } else { 2 }));
    }
    set.sort_unstable();
    set
}

/// The landmark set of size `2(m + n)` induced by a satisfying assignment.
pub fn basis_from_assignment(f: &CnfFormula, map: &GadgetMap, assignment: &[bool]) -> Result<Vec<usize>> {
    if assignment.len() != f.num_vars() {
        return Err(Error::InvalidArgument(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            f.num_vars()
        )));
    }
    if let Some(clause) = f.first_unsatisfied(assignment) {
        return Err(Error::Unsatisfied { clause });
    }
    Ok(candidate_set(map, assignment))
}

/// Reads `X_i = true` iff `x_i^1` is a landmark, after checking that the set
/// has size `2(m + n)` and resolves `G(S)`. The result is checked against `f`.
pub fn extract_assignment(f: &CnfFormula, map: &GadgetMap, km: &KappaMatrix, basis: &[usize]) -> Result<Vec<bool>> {
    let target = 2 * (map.m + map.n);
    if basis.len() != target {
        return Err(Error::InvalidArgument(format!("expected {target} landmarks, got {}", basis.len())));
    }
    if let Some(&v) = basis.iter().find(|&&v| v >= map.order()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: map.order() });
    }
    if let Some((u, v)) = resolving_verdict(km, basis).witness() {
        return Err(Error::NotResolving(u, v));
    }
    let assignment: Vec<bool> = (0..map.n).map(|i| basis.contains(&map.var_vertex(i, 1))).collect();
    if let Some(clause) = f.first_unsatisfied(&assignment) {
        return Err(Error::Unsatisfied { clause });
    }
    Ok(assignment)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatStatus {
    Sat { assignment: Vec<bool>, basis: Vec<usize> },
    Unsat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatOutcome {
    pub status: SatStatus,
    pub graph_vertices: usize,
    /// DIMACS numbers of the variables, aligned with the assignment.
    pub names: Vec<usize>,
}

impl SatOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self.status, SatStatus::Sat { .. })
    }
}

impl Serialize for SatOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            status: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            assignment: Option<BTreeMap<String, bool>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            basis: Option<&'a [usize]>,
            graph_vertices: usize,
            criterion: &'static str,
            normalization_assumed: bool,
        }
        let (status, assignment, basis) = match &self.status {
            SatStatus::Sat { assignment, basis } => {
                let named = self.names.iter().zip(assignment).map(|(name, &v)| (name.to_string(), v)).collect();
                ("sat", Some(named), Some(basis.as_slice()))
            }
            SatStatus::Unsat => ("unsat", None, None),
        };
        Repr {
            status,
            assignment,
            basis,
            graph_vertices: self.graph_vertices,
            criterion: "cdim == 2(m+n)",
            normalization_assumed: true,
        }
        .serialize(s)
    }
}

/// Decides `f` by testing the `2^n` normalized candidate sets of `G(S)` for
/// the resolving property; the first resolving one (in binary order of the
/// assignment, `X_1` least significant) yields the verdict SAT.
pub fn decide_sat(f: &CnfFormula) -> Result<SatOutcome> {
    let n = f.num_vars();
    if n >= 64 {
        return Err(Error::InvalidArgument(format!("{n} variables are too many to enumerate")));
    }
    let (g, map) = build_reduction(f)?;
    let km = kappa_matrix(&g);
    let decode = |mask: u64| -> Vec<bool> { (0..n).map(|i| mask >> i & 1 == 1).collect() };
    let hit = (0..1u64 << n)
        .into_par_iter()
        .find_first(|&mask| resolving_verdict(&km, &candidate_set(&map, &decode(mask))).is_resolving());
    let status = match hit {
        Some(mask) => {
            let basis = candidate_set(&map, &decode(mask));
            let assignment = extract_assignment(f, &map, &km, &basis)?;
            SatStatus::Sat { assignment, basis }
        }
        None => SatStatus::Unsat,
    };
    Ok(SatOutcome { status, graph_vertices: g.order(), names: (0..n).map(|i| f.name(i)).collect() })
}

/// Per-gadget landmark counts of a resolving set of `G(S)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetReport {
    /// `|B ∩ {c_j^3, c_j^4, c_j^5}|` per clause; must be 2 for a basis.
    pub clause_twin_counts: Vec<usize>,
    /// Whether `x_i^4` or `x_i^5` is in `B`, per variable.
    pub variable_twin_hit: Vec<bool>,
    /// `|B ∩ V(X_i)|` per variable; at least 2.
    pub variable_counts: Vec<usize>,
    pub size: usize,
    /// `2(m + n)`.
    pub minimum_size: usize,
    pub violations: Vec<String>,
}

impl GadgetReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_gadget_lemmas(map: &GadgetMap, basis: &[usize]) -> GadgetReport {
    let has = |v: usize| basis.contains(&v);
    let clause_twin_counts: Vec<usize> =
        (0..map.m).map(|j| (3..=5).filter(|&b| has(map.clause_vertex(j, b))).count()).collect();
    let variable_twin_hit: Vec<bool> =
        (0..map.n).map(|i| has(map.var_vertex(i, 4)) || has(map.var_vertex(i, 5))).collect();
    let variable_counts: Vec<usize> =
        (0..map.n).map(|i| (1..=5).filter(|&a| has(map.var_vertex(i, a))).count()).collect();
    let minimum_size = 2 * (map.m + map.n);
    let mut violations = Vec::new();
    for (j, &count) in clause_twin_counts.iter().enumerate() {
        if count != 2 {
            violations.push(format!("clause {}: {count} of c^3, c^4, c^5 chosen", j + 1));
        }
    }
    for i in 0..map.n {
        if !variable_twin_hit[i] {
            violations.push(format!("variable {}: neither x^4 nor x^5 chosen", i + 1));
        }
        if variable_counts[i] < 2 {
            violations.push(format!("variable {}: only {} gadget vertices chosen", i + 1, variable_counts[i]));
        }
    }
    if basis.len() < minimum_size {
        violations.push(format!("{} landmarks, fewer than {minimum_size}", basis.len()));
    }
    GadgetReport { clause_twin_counts, variable_twin_hit, variable_counts, size: basis.len(), minimum_size, violations }
}
