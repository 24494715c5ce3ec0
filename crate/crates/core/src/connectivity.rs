//! Local vertex connectivity κ(u, v) and the all-pairs κ-matrix.

use std::fmt;

use rayon::prelude::*;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::flow::disjoint_paths;
use crate::graph::Graph;

/// A local-connectivity value. `Infinity` is reserved for κ(v, v) and
/// orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KappaValue {
    Finite(u32),
    Infinity,
}

impl KappaValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            KappaValue::Finite(k) => Some(k),
            KappaValue::Infinity => None,
        }
    }
}

impl fmt::Display for KappaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KappaValue::Finite(k) => write!(f, "{k}"),
            KappaValue::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for KappaValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            KappaValue::Finite(k) => s.serialize_u32(*k),
            KappaValue::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for KappaValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct KappaVisitor;
        impl Visitor<'_> for KappaVisitor {
            type Value = KappaValue;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<KappaValue, E> {
                u32::try_from(v).map(KappaValue::Finite).map_err(E::custom)
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<KappaValue, E> {
                match v {
                    "inf" => Ok(KappaValue::Infinity),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }
        d.deserialize_any(KappaVisitor)
    }
}

/// Dense symmetric table of κ-values with `Infinity` on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaMatrix {
    n: usize,
    values: Vec<KappaValue>,
}

impl KappaMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> KappaValue {
        self.values[u * self.n + v]
    }

    pub fn row(&self, v: usize) -> &[KappaValue] {
        &self.values[v * self.n..(v + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[KappaValue]> {
        self.values.chunks(self.n.max(1)).take(self.n)
    }

    /// Builds a matrix from explicit rows; used for deserialisation.
    pub fn from_rows(rows: Vec<Vec<KappaValue>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(KappaMatrix { n, values: rows.into_iter().flatten().collect() })
    }
}

#[derive(Serialize, Deserialize)]
struct KappaJson {
    n: usize,
    kappa: Vec<Vec<KappaValue>>,
}

impl Serialize for KappaMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        KappaJson { n: self.n, kappa: self.rows().map(<[KappaValue]>::to_vec).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for KappaMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = KappaJson::deserialize(d)?;
        if raw.kappa.len() != raw.n {
            return Err(de::Error::custom("row count does not match n"));
        }
        KappaMatrix::from_rows(raw.kappa).ok_or_else(|| de::Error::custom("matrix is not square"))
    }
}

/// κ(u, v): the maximum number of `u`–`v` paths that are pairwise disjoint
/// except at their endpoints, computed as a unit-capacity max-flow.
pub fn local_connectivity(g: &Graph, u: usize, v: usize) -> Result<KappaValue> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(if u == v { KappaValue::Infinity } else { KappaValue::Finite(disjoint_paths(g, u, v)) })
}

/// All-pairs κ. Pairs are evaluated in parallel.
pub fn kappa_matrix(g: &Graph) -> KappaMatrix {
    let n = g.order();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let flows: Vec<u32> = pairs.par_iter().map(|&(u, v)| disjoint_paths(g, u, v)).collect();
    let mut values = vec![KappaValue::Infinity; n * n];
    for (&(u, v), &k) in pairs.iter().zip(&flows) {
        values[u * n + v] = KappaValue::Finite(k);
        values[v * n + u] = KappaValue::Finite(k);
    }
    KappaMatrix { n, values }
}

/// `Some(k)` if every pair of distinct vertices has κ = k and `n >= k + 1`.
pub fn uniform_connectivity(km: &KappaMatrix) -> Option<u32> {
    let n = km.order();
    if n < 2 {
        return None;
    }
    let k = km.get(0, 1).finite()?;
    let uniform = (0..n).all(|u| (0..n).all(|v| u == v || km.get(u, v) == KappaValue::Finite(k)));
    (uniform && n as u64 > u64::from(k)).then_some(k)
}

/// For each vertex, `Some(k)` when its row is constantly `k` off the diagonal.
pub fn uniformly_connected_vertices(km: &KappaMatrix) -> Vec<Option<u32>> {
    let n = km.order();
    (0..n)
        .map(|v| {
            if n < 2 {
                return None;
            }
            let mut others = (0..n).filter(|&w| w != v).map(|w| km.get(v, w));
            let first = others.next()?.finite()?;
            others.all(|x| x == KappaValue::Finite(first)).then_some(first)
        })
        .collect()
}
