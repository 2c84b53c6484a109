//! Recognition of P4-free graphs (cographs) and their cotrees.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Union/join decomposition tree. Leaves carry vertex ids of the host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

/// Induced path `a - b - c - d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct P4Witness(pub [usize; 4]);

impl P4Witness {
    pub fn verify(&self, g: &Graph) -> bool {
        let [a, b, c, d] = self.0;
        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
        distinct
            && [a, b, c, d].iter().all(|&v| v < g.n())
            && g.has_edge(a, b)
            && g.has_edge(b, c)
            && g.has_edge(c, d)
            && !g.has_edge(a, c)
            && !g.has_edge(a, d)
            && !g.has_edge(b, d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Cograph(Cotree),
    NotCograph(P4Witness),
}

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().map(Cotree::size).sum(),
        }
    }

    /// The graph on `0..n` described by the tree, where `n` is one more than
    /// the largest leaf.
    pub fn realize(&self) -> Graph {
        let leaves = self.leaves();
        let n = leaves.iter().max().map_or(0, |m| m + 1);
        let mut edges = Vec::new();
        self.collect_join_edges(&mut edges);
        Graph::from_edges(n, edges).expect("leaf ids are distinct")
    }

    fn collect_join_edges(&self, edges: &mut Vec<(usize, usize)>) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(ch) => ch.iter().for_each(|c| c.collect_join_edges(edges)),
            Cotree::Join(ch) => {
                let parts: Vec<Vec<usize>> = ch.iter().map(Cotree::leaves).collect();
                for (i, a) in parts.iter().enumerate() {
                    for b in &parts[i + 1..] {
                        for &u in a {
                            for &v in b {
                                edges.push((u, v));
                            }
                        }
                    }
                }
                ch.iter().for_each(|c| c.collect_join_edges(edges));
            }
        }
    }

    /// True when `self` realizes exactly `g`: leaves biject with `V(g)` and
    /// the edge sets agree.
    pub fn realizes(&self, g: &Graph) -> bool {
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        if leaves != (0..g.n()).collect::<Vec<_>>() {
            return false;
        }
        let h = self.realize();
        h.n() == g.n() && h.edges().eq(g.edges())
    }

    /// Union and join nodes alternate and every internal node has at least
    /// two children.
    pub fn is_alternating(&self) -> bool {
        fn check(t: &Cotree, parent_is_join: Option<bool>) -> bool {
            match t {
                Cotree::Leaf(_) => true,
                Cotree::Union(ch) | Cotree::Join(ch) => {
                    let is_join = matches!(t, Cotree::Join(_));
                    ch.len() >= 2
                        && parent_is_join != Some(is_join)
                        && ch.iter().all(|c| check(c, Some(is_join)))
                }
            }
        }
        match self {
            // empty graph convention
            Cotree::Union(ch) if ch.is_empty() => true,
            _ => check(self, None),
        }
    }

    /// Swaps union and join everywhere; realizes the complement graph.
    pub fn complement(&self) -> Cotree {
        match self {
            Cotree::Leaf(v) => Cotree::Leaf(*v),
            Cotree::Union(ch) => Cotree::Join(ch.iter().map(Cotree::complement).collect()),
            Cotree::Join(ch) => Cotree::Union(ch.iter().map(Cotree::complement).collect()),
        }
    }

    /// Applies `f` to every leaf.
    pub fn relabel(&self, f: &impl Fn(usize) -> usize) -> Cotree {
        match self {
            Cotree::Leaf(v) => Cotree::Leaf(f(*v)),
            Cotree::Union(ch) => Cotree::Union(ch.iter().map(|c| c.relabel(f)).collect()),
            Cotree::Join(ch) => Cotree::Join(ch.iter().map(|c| c.relabel(f)).collect()),
        }
    }
}

impl fmt::Display for Cotree {
    /// Parenthesized form, e.g. `J(U(0,1),2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, ch) = match self {
            Cotree::Leaf(v) => return write!(f, "{v}"),
            Cotree::Union(ch) => ('U', ch),
            Cotree::Join(ch) => ('J', ch),
        };
        write!(f, "{tag}(")?;
        for (i, c) in ch.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Decides P4-freeness. A graph on two or more vertices is a cograph iff it
/// or its complement is disconnected and every piece is a cograph; when the
/// recursion gets stuck the stuck subgraph contains an induced P4, which is
/// found by quadruple search.
pub fn recognize(g: &Graph) -> Recognition {
    if g.n() == 0 {
        return Recognition::Cograph(Cotree::Union(Vec::new()));
    }
    let ids: Vec<usize> = (0..g.n()).collect();
    match build(g, &ids) {
        Ok(t) => Recognition::Cograph(t),
        Err(w) => Recognition::NotCograph(w),
    }
}

/// Shorthand for the cotree, if any.
pub fn cotree(g: &Graph) -> Option<Cotree> {
    match recognize(g) {
        Recognition::Cograph(t) => Some(t),
        Recognition::NotCograph(_) => None,
    }
}

/// `h` is an induced subgraph of the input with `ids[i]` the original id of
/// vertex `i`.
fn build(h: &Graph, ids: &[usize]) -> Result<Cotree, P4Witness> {
    if h.n() == 1 {
        return Ok(Cotree::Leaf(ids[0]));
    }
    let comps = h.components();
    if comps.len() >= 2 {
        return children(h, ids, &comps).map(Cotree::Union);
    }
    let co_comps = h.complement().components();
    if co_comps.len() >= 2 {
        return children(h, ids, &co_comps).map(Cotree::Join);
    }
    let [a, b, c, d] = find_induced_p4(h).expect("graph and complement connected implies an induced P4");
    Err(P4Witness([ids[a], ids[b], ids[c], ids[d]]))
}

fn children(h: &Graph, ids: &[usize], parts: &[VertexSet]) -> Result<Vec<Cotree>, P4Witness> {
    parts
        .iter()
        .map(|part| {
            let sub = h.induced_subgraph(part);
            let sub_ids: Vec<usize> = part.iter().map(|v| ids[v]).collect();
            build(&sub, &sub_ids)
        })
        .collect()
}

/// Brute-force search for an induced path `a-b-c-d`.
fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for b in 0..n {
        for c in g.neighbors(b).iter().copied() {
            for a in g.neighbors(b).iter().copied() {
                if a == c || g.has_edge(a, c) {
                    continue;
                }
                for d in g.neighbors(c).iter().copied() {
                    if d != b && d != a && !g.has_edge(b, d) && !g.has_edge(a, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// Exhaustive check over all `C(n, 4)` quadruples and their orderings.
pub fn is_p4_free_oracle(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let q = [a, b, c, d];
                    let edges: usize = (0..4)
                        .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| g.has_edge(q[i], q[j]))
                        .count();
                    if edges != 3 {
                        continue;
                    }
                    // three edges on four vertices form P4 iff degrees are 1,1,2,2
                    let mut deg: Vec<usize> = q
                        .iter()
                        .map(|&x| q.iter().filter(|&&y| g.has_edge(x, y)).count())
                        .collect();
                    deg.sort_unstable();
                    if deg == [1, 1, 2, 2] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every `u ∈ s` is adjacent to all or none of each component of `g - s`.
/// Holds whenever `g` is P4-free and every vertex of `s` touches at least
/// two components; a `false` means non-cograph input got through.
pub fn neighbor_saturation_check(g: &Graph, s: &VertexSet) -> bool {
    let comps = g.components_without(s);
    s.iter().all(|u| {
        comps.iter().all(|comp| {
            let hits = comp.iter().filter(|&v| g.has_edge(u, v)).count();
            hits == 0 || hits == comp.len()
        })
    })
}
