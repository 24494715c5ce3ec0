use std::collections::BTreeSet;
use std::fmt;

use log::warn;
use serde::Serialize;

use crate::error::{Error, Result};

/// A signed occurrence of variable `var` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { "" } else { "-" };
        write!(f, "{sign}{}", self.var + 1)
    }
}

pub type Clause = [Literal; 3];

/// A 3-CNF formula in which every clause has three distinct variables and
/// every variable occurs somewhere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CnfFormula {
    n: usize,
    clauses: Vec<Clause>,
    /// DIMACS number of each (dense) variable.
    names: Vec<usize>,
}

impl CnfFormula {
    pub fn new(n: usize, clauses: Vec<Clause>) -> Result<Self> {
        if clauses.is_empty() {
            return Err(Error::Cnf("formula has no clauses".into()));
        }
        let mut used = vec![false; n];
        for (j, clause) in clauses.iter().enumerate() {
            for lit in clause {
                if lit.var >= n {
                    return Err(Error::Cnf(format!("clause {j}: variable {} exceeds n = {n}", lit.var + 1)));
                }
                used[lit.var] = true;
            }
            let vars: BTreeSet<usize> = clause.iter().map(|l| l.var).collect();
            if vars.len() != 3 {
                let tautology =
                    clause.iter().any(|a| clause.iter().any(|b| a.var == b.var && a.positive != b.positive));
                let what = if tautology { "is tautological" } else { "repeats a variable" };
                return Err(Error::Cnf(format!("clause {j} {what}")));
            }
        }
        if let Some(i) = used.iter().position(|&u| !u) {
            return Err(Error::Cnf(format!("variable {} does not occur in any clause", i + 1)));
        }
        Ok(CnfFormula { n, clauses, names: (1..=n).collect() })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// DIMACS number of dense variable `i`.
    pub fn name(&self, i: usize) -> usize {
        self.names[i]
    }

    /// Sign with which variable `i` occurs in clause `j`, if it does.
    pub fn occurrence(&self, j: usize, i: usize) -> Option<bool> {
        self.clauses[j].iter().find(|l| l.var == i).map(|l| l.positive)
    }

    /// Number of clauses containing `X_i` positively.
    pub fn alpha(&self, i: usize) -> usize {
        self.clauses.iter().filter(|c| c.contains(&Literal::pos(i))).count()
    }

    /// Number of clauses containing `X_i` negatively.
    pub fn beta(&self, i: usize) -> usize {
        self.clauses.iter().filter(|c| c.contains(&Literal::neg(i))).count()
    }

    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|c| !c.iter().any(|l| l.holds(assignment)))
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.n && self.first_unsatisfied(assignment).is_none()
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.n, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        out
    }
}

/// Parses DIMACS CNF. Variables that never occur are dropped with a warning
/// and the rest renumbered densely in increasing order.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["p", "cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| Error::Cnf(format!("line {}: malformed header", lineno + 1)))?);
            continue;
        }
        if header.is_none() {
            return Err(Error::Cnf(format!("line {}: clause before `p cnf` header", lineno + 1)));
        }
        for token in line.split_whitespace() {
            let lit: i64 =
                token.parse().map_err(|_| Error::Cnf(format!("line {}: bad literal {token:?}", lineno + 1)))?;
            if lit == 0 {
                raw.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Cnf("missing `p cnf` header".into()))?;
    if !current.is_empty() {
        raw.push(current);
    }
    if raw.len() != m {
        return Err(Error::Cnf(format!("header announces {m} clauses, found {}", raw.len())));
    }

    let mut used = BTreeSet::new();
    for (j, clause) in raw.iter().enumerate() {
        if clause.len() != 3 {
            return Err(Error::Cnf(format!("clause {j} has {} literals, expected 3", clause.len())));
        }
        for &lit in clause {
            let var = lit.unsigned_abs() as usize;
            if var > n {
                return Err(Error::Cnf(format!("clause {j}: variable {var} exceeds n = {n}")));
            }
            used.insert(var);
        }
    }
    if used.len() < n {
        let unused: Vec<usize> = (1..=n).filter(|v| !used.contains(v)).collect();
        warn!("dropping variables that occur in no clause: {unused:?}");
    }
    let names: Vec<usize> = used.into_iter().collect();
    let dense = |var: usize| names.binary_search(&var).expect("collected above");
    let clauses = raw
        .iter()
        .map(|c| {
            let lit = |x: i64| Literal { var: dense(x.unsigned_abs() as usize), positive: x > 0 };
            [lit(c[0]), lit(c[1]), lit(c[2])]
        })
        .collect();
    let mut formula = CnfFormula::new(names.len(), clauses)?;
    formula.names = names;
    Ok(formula)
}
