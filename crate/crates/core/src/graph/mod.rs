//! Simple undirected graphs with dense vertex ids and an origin-label side
//! channel, plus the structural primitives everything else is built on.

mod blocks;
pub mod io;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use blocks::Blocks;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("cannot contract an empty vertex set")]
    EmptyContraction,
    #[error("contracted set does not induce a connected subgraph")]
    ContractionDisconnected,
    #[error("lexicographic product needs k >= 1")]
    ZeroMultiplicity,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// Sorted, duplicate-free set of vertex ids. The host graph is always passed
/// separately.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// All ids `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// `{0..n} - self`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    /// Maps every element through `f` and re-sorts.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> VertexSet {
        self.iter().map(f).collect()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted; `labels[v]` records where `v` came from
/// when the graph was produced by a subgraph, contraction or product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Vec<String>,
    edge_count: usize,
}

/// Result of contracting a connected vertex set into a single vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionResult {
    pub graph: Graph,
    pub contracted_vertex: usize,
    /// `origin[new_id]` is the set of old ids that became `new_id`.
    pub origin: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            labels: (0..n).map(|v| v.to_string()).collect(),
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Graph {
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        let n = adj.len();
        Graph {
            adj,
            labels: (0..n).map(|v| v.to_string()).collect(),
            edge_count: twice / 2,
        }
    }

    /// Builds the graph whose edges are the pairs `u < v` with `adjacent(u, v)`.
    pub fn from_fn(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        Self::from_raw_adjacency(adj)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1 || (n > 2 && u == 0 && v == n - 1))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_fn(a + b, |u, v| (u < a) != (v < a))
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(shift + other.n(), edges.collect::<Vec<_>>())
            .expect("union of simple graphs is simple")
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut edges: Vec<(usize, usize)> = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .collect();
        for u in 0..shift {
            for v in 0..other.n() {
                edges.push((u, v + shift));
            }
        }
        Graph::from_edges(shift + other.n(), edges).expect("join of simple graphs is simple")
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Maximal connected vertex sets, ordered by minimum vertex id.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_without(&VertexSet::new())
    }

    /// Components of `G - removed`, expressed in the ids of `self`.
    pub fn components_without(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        for v in removed.iter() {
            seen[v] = true;
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::from(comp));
        }
        out
    }

    /// `c(G - removed)`.
    pub fn count_components_without(&self, removed: &VertexSet) -> usize {
        self.components_without(removed).len()
    }

    /// True when `G - s` has at least two components.
    pub fn is_cutset(&self, s: &VertexSet) -> bool {
        self.count_components_without(s) >= 2
    }

    /// Subgraph induced on `keep`. New id `i` is the `i`-th smallest element
    /// of `keep`; labels travel with their vertices.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        let mut g = Self::from_raw_adjacency(adj);
        g.labels = keep.iter().map(|v| self.labels[v].clone()).collect();
        g
    }

    /// Biconnected blocks (bridges included) and cutvertices.
    pub fn blocks(&self) -> Result<Blocks, GraphError> {
        blocks::decompose(self)
    }

    /// Contracts the connected set `r` into one vertex adjacent to every
    /// external neighbour of `r`. The new vertex takes the position of
    /// `min(r)`; other vertices keep their relative order.
    pub fn contract(&self, r: &VertexSet) -> Result<ContractionResult, GraphError> {
        let rep = r.first().ok_or(GraphError::EmptyContraction)?;
        if let Some(&v) = r.as_slice().iter().find(|&&v| v >= self.n()) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        if !self.induced_subgraph(r).is_connected() {
            return Err(GraphError::ContractionDisconnected);
        }
        let mut new_id = vec![0; self.n()];
        let mut origin: Vec<VertexSet> = Vec::new();
        for (v, id) in new_id.iter_mut().enumerate() {
            if r.contains(v) && v != rep {
                continue;
            }
            *id = origin.len();
            origin.push(if v == rep { r.clone() } else { VertexSet::singleton(v) });
        }
        let contracted_vertex = new_id[rep];
        for v in r.iter() {
            new_id[v] = contracted_vertex;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .map(|(u, v)| (new_id[u], new_id[v]))
            .filter(|(a, b)| a != b)
            .collect();
        let labels = origin
            .iter()
            .map(|set| {
                if set.len() == 1 {
                    self.labels[set.as_slice()[0]].clone()
                } else {
                    let parts: Vec<&str> = set.iter().map(|v| self.labels[v].as_str()).collect();
                    format!("{{{}}}", parts.join(","))
                }
            })
            .collect();
        let graph = Graph::from_edges(origin.len(), edges)?.with_labels(labels)?;
        Ok(ContractionResult {
            graph,
            contracted_vertex,
            origin,
        })
    }

    /// `G □ K₂`. Copy `(v, side)` gets id `v + side * n`.
    pub fn prism(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::with_capacity(2 * self.edge_count + n);
        for (u, v) in self.edges() {
            edges.push((u, v));
            edges.push((u + n, v + n));
        }
        for v in 0..n {
            edges.push((v, v + n));
        }
        let labels = (0..2)
            .flat_map(|side| (0..n).map(move |v| (v, side)))
            .map(|(v, side)| format!("({},{})", self.labels[v], side))
            .collect();
        Graph::from_edges(2 * n, edges)
            .and_then(|g| g.with_labels(labels))
            .expect("prism of a simple graph is simple")
    }

    /// `G[K_k]`: vertex `(u, i)` gets id `u * k + i`.
    pub fn lex_product_k(&self, k: usize) -> Result<Graph, GraphError> {
        if k == 0 {
            return Err(GraphError::ZeroMultiplicity);
        }
        let n = self.n();
        let g = Graph::from_fn(n * k, |a, b| {
            let (u, v) = (a / k, b / k);
            u == v || self.has_edge(u, v)
        });
        let labels = (0..n * k)
            .map(|a| format!("({},{})", self.labels[a / k], a % k))
            .collect();
        g.with_labels(labels)
    }
}
