use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::matrix::InclusionMatrix;
use crate::error::{Error, Result};

/// A distance that is either a nonnegative integer or `−∞` (no chain).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DistanceValue {
    NegInf,
    Finite(u64),
}

impl DistanceValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            Self::NegInf => None,
            Self::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for DistanceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NegInf => f.write_str("-inf"),
            Self::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for DistanceValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::NegInf => s.serialize_str("-inf"),
            Self::Finite(d) => s.serialize_u64(*d),
        }
    }
}

/// The relation "constituents of a common `χ_H`" on `Irr(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationGraph {
    pub adjacency: Vec<Vec<usize>>,
}

impl RelationGraph {
    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    /// Distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<DistanceValue> {
        let mut dist = vec![DistanceValue::NegInf; self.len()];
        dist[source] = DistanceValue::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let DistanceValue::Finite(d) = dist[v] else {
                unreachable!()
            };
            for &w in &self.adjacency[v] {
                if dist[w] == DistanceValue::NegInf {
                    dist[w] = DistanceValue::Finite(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_distances(&self) -> Vec<Vec<DistanceValue>> {
        (0..self.len()).map(|i| self.distances_from(i)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty()
            || self
                .distances_from(0)
                .iter()
                .all(|d| *d != DistanceValue::NegInf)
    }
}

pub fn relation_graph(m: &InclusionMatrix) -> RelationGraph {
    let r = m.rows();
    let mut adj = vec![vec![false; r]; r];
    for j in 0..m.cols() {
        let support = m.column_support(j);
        for &a in &support {
            for &b in &support {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
    }
    RelationGraph {
        adjacency: adj
            .iter()
            .map(|row| (0..r).filter(|&j| row[j]).collect())
            .collect(),
    }
}

pub fn char_distance(graph: &RelationGraph, i: usize, j: usize) -> DistanceValue {
    graph.distances_from(i)[j]
}

/// `m(χ_j) = max_α min_{ψ ∈ X} d(α, ψ)` over extended integers, where `X` is
/// the constituent set of `χ_j|_H`.
pub fn m_chi(m: &InclusionMatrix, distances: &[Vec<DistanceValue>], j: usize) -> Result<DistanceValue> {
    let support = m.column_support(j);
    if support.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "column {j} of the inclusion matrix is zero"
        )));
    }
    Ok(distances
        .iter()
        .map(|row| support.iter().map(|&x| row[x]).min().expect("nonempty"))
        .max()
        .expect("Irr(H) is nonempty"))
}
