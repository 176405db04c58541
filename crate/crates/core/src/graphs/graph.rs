use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::depth::DistanceValue;
use crate::error::{Error, Result};

/// Vertex label: a tuple of small integers.
pub type Label = Vec<usize>;

/// Undirected simple graph on labeled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<Label>,
    index: HashMap<Label, usize>,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize)]
struct GraphJson<'a> {
    vertices: &'a [Label],
    edges: Vec<(&'a Label, &'a Label)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            vertices: &self.vertices,
            edges: self.edge_labels(),
        }
        .serialize(s)
    }
}

impl Graph {
    pub fn new(vertices: Vec<Label>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate vertex {v:?}")));
            }
        }
        Ok(Self {
            vertices,
            index,
            edges: BTreeSet::new(),
        })
    }

    pub fn add_edge(&mut self, u: &[usize], v: &[usize]) -> Result<()> {
        let (a, b) = (self.vertex(u)?, self.vertex(v)?);
        if a == b {
            return Err(Error::InvalidArgument(format!("loop at {u:?}")));
        }
        self.edges.insert((a.min(b), a.max(b)));
        Ok(())
    }

    pub fn vertex(&self, label: &[usize]) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("unknown vertex {label:?}")))
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: &[usize], v: &[usize]) -> bool {
        match (self.index.get(u), self.index.get(v)) {
            (Some(&a), Some(&b)) => self.edges.contains(&(a.min(b), a.max(b))),
            _ => false,
        }
    }

    /// Edges as label pairs, each pair ordered as the vertices are.
    pub fn edge_labels(&self) -> Vec<(&Label, &Label)> {
        self.edges
            .iter()
            .map(|&(a, b)| (&self.vertices[a], &self.vertices[b]))
            .collect()
    }

    /// Edge set as unordered label pairs, for comparing graphs whose vertex
    /// lists are ordered differently.
    pub fn edge_set(&self) -> BTreeSet<(Label, Label)> {
        self.edge_labels()
            .into_iter()
            .map(|(a, b)| {
                if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                }
            })
            .collect()
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

fn single(label: usize) -> Label {
    vec![label]
}

/// `(Γ_1, Γ_0)`: the single edge on `{4, 5}` and the triangle on `{1, 2, 3}`.
pub fn gamma_base() -> (Graph, Graph) {
    let mut g1 = Graph::new(vec![single(4), single(5)]).expect("distinct");
    g1.add_edge(&[4], &[5]).expect("valid edge");
    let mut g0 = Graph::new((1..=3).map(single).collect()).expect("distinct");
    for (a, b) in [(1, 3), (2, 3), (1, 2)] {
        g0.add_edge(&[a], &[b]).expect("valid edge");
    }
    (g1, g0)
}

/// `A □ B`: labels concatenate; an edge changes one side along an edge of
/// that factor.
pub fn cartesian_product(a: &Graph, b: &Graph) -> Graph {
    let vertices: Vec<Label> = a
        .vertices
        .iter()
        .flat_map(|u| {
            b.vertices.iter().map(move |v| {
                let mut l = u.clone();
                l.extend(v);
                l
            })
        })
        .collect();
    let mut g = Graph::new(vertices).expect("distinct products of distinct labels");
    let nb = b.vertices.len();
    for &(x, y) in &a.edges {
        for k in 0..nb {
            g.edges.insert((x * nb + k, y * nb + k));
        }
    }
    for i in 0..a.vertices.len() {
        for &(x, y) in &b.edges {
            g.edges.insert((i * nb + x, i * nb + y));
        }
    }
    g
}

/// `Γ_n = Γ_1 □ Γ_0 □ … □ Γ_0` with `n − 1` copies of `Γ_0`.
pub fn gamma(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("gamma needs n >= 1".into()));
    }
    let (g1, g0) = gamma_base();
    Ok((1..n).fold(g1, |acc, _| cartesian_product(&acc, &g0)))
}

pub fn bfs_distance(g: &Graph, u: &[usize], v: &[usize]) -> Result<DistanceValue> {
    let (s, t) = (g.vertex(u)?, g.vertex(v)?);
    let adj = g.neighbours();
    let mut dist = vec![None; g.vertices.len()];
    dist[s] = Some(0u64);
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].expect("visited");
        for &y in &adj[x] {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    Ok(dist[t].map_or(DistanceValue::NegInf, DistanceValue::Finite))
}
