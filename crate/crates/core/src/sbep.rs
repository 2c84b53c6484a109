//! SBEP subgraphs: connected graphs whose blocks are edges or even cycles,
//! with every vertex in at most two blocks.
//!
//! Besides the data type and its checker this module holds the three
//! constructions used to find a spanning SBEP subgraph of a ½-tough cograph:
//! the complete bipartite base case, the combiner that merges two disjoint
//! SBEP subgraphs through a pair of cross edges, and the induction over a
//! maximal tough-set.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cograph::{self, neighbor_saturation_check, P4Witness, Recognition};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::prism_walks::{self, WalkError};
use crate::rational::Rational;
use crate::toughness::{
    find_tripartite_witness, is_minimal_cutset, maximal_tough_set, toughness_exact, Toughness,
    ToughnessError, ToughnessResult,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", content = "vs", rename_all = "lowercase")]
pub enum Block {
    Edge(usize, usize),
    /// Cyclic vertex sequence.
    Cycle(Vec<usize>),
}

impl Block {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Block::Edge(u, v) => vec![*u, *v],
            Block::Cycle(vs) => vs.clone(),
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self {
            Block::Edge(u, v) => vec![(*u, *v)],
            Block::Cycle(vs) => (0..vs.len()).map(|i| (vs[i], vs[(i + 1) % vs.len()])).collect(),
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges().iter().any(|&(u, v)| (u, v) == (a, b) || (u, v) == (b, a))
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, Block::Cycle(_))
    }

    fn relabel(&self, f: &impl Fn(usize) -> usize) -> Block {
        match self {
            Block::Edge(u, v) => Block::Edge(f(*u), f(*v)),
            Block::Cycle(vs) => Block::Cycle(vs.iter().map(|&v| f(v)).collect()),
        }
    }
}

/// A subgraph given as its block list. `membership[v]` lists the indices
/// of the blocks containing `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "SbepRepr", into = "SbepRepr")]
pub struct SbepGraph {
    blocks: Vec<Block>,
    membership: BTreeMap<usize, Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SbepRepr {
    blocks: Vec<Block>,
}

impl From<SbepRepr> for SbepGraph {
    fn from(r: SbepRepr) -> Self {
        SbepGraph::new(r.blocks)
    }
}

impl From<SbepGraph> for SbepRepr {
    fn from(s: SbepGraph) -> Self {
        SbepRepr { blocks: s.blocks }
    }
}

impl SbepGraph {
    pub fn new(blocks: Vec<Block>) -> SbepGraph {
        let mut membership: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, b) in blocks.iter().enumerate() {
            for v in b.vertices() {
                let list = membership.entry(v).or_default();
                if list.last() != Some(&i) {
                    list.push(i);
                }
            }
        }
        SbepGraph { blocks, membership }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn membership(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.membership
    }

    pub fn vertices(&self) -> VertexSet {
        self.membership.keys().copied().collect()
    }

    pub fn block_count(&self, v: usize) -> usize {
        self.membership.get(&v).map_or(0, Vec::len)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.blocks.iter().flat_map(Block::edges).collect()
    }

    pub fn is_spanning(&self, host: &Graph) -> bool {
        self.vertices() == VertexSet::full(host.n())
    }

    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> SbepGraph {
        SbepGraph::new(self.blocks.iter().map(|b| b.relabel(&f)).collect())
    }

    pub fn single_block_vertices(&self) -> VertexSet {
        single_block_vertices(self)
    }
}

/// Vertices lying in exactly one block.
pub fn single_block_vertices(s: &SbepGraph) -> VertexSet {
    s.membership.iter().filter(|(_, b)| b.len() == 1).map(|(&v, _)| v).collect()
}

/// Checks every SBEP invariant against `host`, naming the first failure.
///
/// Independent of the constructors: rebuilds the union of the blocks and
/// compares its biconnected decomposition with the declared block list.
pub fn check_sbep(host: &Graph, s: &SbepGraph) -> Result<(), String> {
    if s.blocks.is_empty() {
        return Err("no blocks".into());
    }
    let mut seen_edges = std::collections::HashSet::new();
    for (i, b) in s.blocks.iter().enumerate() {
        let vs = b.vertices();
        if let Block::Cycle(c) = b {
            if c.len() < 4 || c.len() % 2 == 1 {
                return Err(format!("block {i} is a cycle of length {}", c.len()));
            }
        }
        let distinct: VertexSet = vs.iter().copied().collect();
        if distinct.len() != vs.len() {
            return Err(format!("block {i} repeats a vertex"));
        }
        for (u, v) in b.edges() {
            if !host.has_edge(u, v) {
                return Err(format!("block {i} uses non-edge {u}-{v}"));
            }
            if !seen_edges.insert((u.min(v), u.max(v))) {
                return Err(format!("edge {u}-{v} appears in two blocks"));
            }
        }
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for b in &s.blocks {
        for v in b.vertices() {
            *counts.entry(v).or_default() += 1;
        }
    }
    if let Some((v, c)) = counts.iter().find(|(_, &c)| c > 2) {
        return Err(format!("vertex {v} lies in {c} blocks"));
    }

    let verts: Vec<usize> = counts.keys().copied().collect();
    let index = |v: usize| verts.binary_search(&v).expect("vertex of a block");
    let union = Graph::from_edges(verts.len(), seen_edges.iter().map(|&(u, v)| (index(u), index(v))))
        .map_err(|e| e.to_string())?;
    let decomposition = union.blocks().map_err(|_| "union of blocks is disconnected".to_string())?;
    let mut declared: Vec<VertexSet> = s
        .blocks
        .iter()
        .map(|b| b.vertices().into_iter().map(index).collect())
        .collect();
    declared.sort();
    if declared != decomposition.blocks {
        return Err("declared blocks differ from the biconnected blocks of their union".into());
    }
    let single = counts.values().filter(|&&c| c == 1).count();
    if single < 2 {
        return Err(format!("only {single} single-block vertices"));
    }
    Ok(())
}

pub fn validate_sbep(host: &Graph, s: &SbepGraph) -> bool {
    check_sbep(host, s).is_ok()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SbepError {
    #[error("need at least two vertices, got {0}")]
    TooSmall(usize),
    #[error("input is not P4-free: induced path {:?}", .0 .0)]
    NotCograph(P4Witness),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Toughness(#[from] ToughnessError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl From<WalkError> for SbepError {
    fn from(e: WalkError) -> Self {
        SbepError::Internal(e.to_string())
    }
}

/// Spanning SBEP of the complete bipartite graph between `x` and `y`, with
/// every vertex of `y` in exactly one block.
///
/// One `x`: a star. Otherwise one alternating cycle through all of `x` and
/// the `|x|` smallest ids of `y`, then each leftover `y` hung as a pendant
/// edge on a distinct `x`.
pub fn bipartite_sbep(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<SbepGraph, SbepError> {
    let pre = |msg: &str| Err(SbepError::Precondition(msg.to_string()));
    if x.is_empty() || y.is_empty() {
        return pre("empty side");
    }
    if !x.is_disjoint(y) {
        return pre("sides overlap");
    }
    if !(x.len() <= y.len() && y.len() <= 2 * x.len()) {
        return pre("need |x| <= |y| <= 2|x|");
    }
    if !x.iter().all(|a| y.iter().all(|b| g.has_edge(a, b))) {
        return pre("sides are not completely joined");
    }
    let xs = x.as_slice();
    let ys = y.as_slice();
    let blocks = if xs.len() == 1 {
        ys.iter().map(|&b| Block::Edge(xs[0], b)).collect()
    } else {
        let m = xs.len();
        let mut blocks = vec![Block::Cycle((0..m).flat_map(|i| [xs[i], ys[i]]).collect())];
        blocks.extend(ys[m..].iter().zip(xs).map(|(&b, &a)| Block::Edge(a, b)));
        blocks
    };
    let s = SbepGraph::new(blocks);
    if !y.iter().all(|b| s.block_count(b) == 1) {
        return Err(SbepError::Internal("bipartite base case left a y-vertex in two blocks".into()));
    }
    Ok(s)
}

/// Opens the cycle at the edge `a-b`: the path from `a` to `b` that walks
/// the long way round.
pub(crate) fn open_cycle<T: PartialEq + Copy>(cycle: &[T], a: T, b: T) -> Option<Vec<T>> {
    let len = cycle.len();
    let i = cycle.iter().position(|&v| v == a)?;
    if cycle[(i + 1) % len] == b {
        Some((0..len).map(|d| cycle[(i + len - d) % len]).collect())
    } else if cycle[(i + len - 1) % len] == b {
        Some((0..len).map(|d| cycle[(i + d) % len]).collect())
    } else {
        None
    }
}

fn block_with_edge(s: &SbepGraph, a: usize, b: usize) -> Option<usize> {
    s.blocks.iter().position(|blk| blk.has_edge(a, b))
}

/// Merges disjoint SBEP subgraphs `s1 ∋ x1y1` and `s2 ∋ x2y2` of `host`
/// through the cross edges `x1y2` and `x2y1`. The two blocks carrying the
/// chosen edges become one even cycle; cycle edges among the chosen pair
/// are dropped, cutedges kept.
pub fn combine(
    host: &Graph,
    s1: &SbepGraph,
    s2: &SbepGraph,
    (x1, y1): (usize, usize),
    (x2, y2): (usize, usize),
) -> Result<SbepGraph, SbepError> {
    if !s1.vertices().is_disjoint(&s2.vertices()) {
        return Err(SbepError::Precondition("SBEP subgraphs overlap".into()));
    }
    if !host.has_edge(x1, y2) || !host.has_edge(x2, y1) {
        return Err(SbepError::Precondition(format!("missing cross edge {x1}-{y2} or {x2}-{y1}")));
    }
    let i1 = block_with_edge(s1, x1, y1)
        .ok_or_else(|| SbepError::Precondition(format!("{x1}-{y1} is not an edge of the first subgraph")))?;
    let i2 = block_with_edge(s2, x2, y2)
        .ok_or_else(|| SbepError::Precondition(format!("{x2}-{y2} is not an edge of the second subgraph")))?;
    let open = |b: &Block, x: usize, y: usize| match b {
        Block::Edge(..) => vec![x, y],
        Block::Cycle(vs) => open_cycle(vs, x, y).expect("edge lies on the cycle"),
    };
    // x1 .. y1 then x2 .. y2, closing along y2-x1
    let mut merged = open(&s1.blocks[i1], x1, y1);
    merged.extend(open(&s2.blocks[i2], x2, y2));

    let mut blocks: Vec<Block> = Vec::with_capacity(s1.blocks.len() + s2.blocks.len() - 1);
    blocks.extend(s1.blocks.iter().enumerate().filter(|&(i, _)| i != i1).map(|(_, b)| b.clone()));
    blocks.extend(s2.blocks.iter().enumerate().filter(|&(i, _)| i != i2).map(|(_, b)| b.clone()));
    blocks.push(Block::Cycle(merged));
    let out = SbepGraph::new(blocks);

    let preserved = s1
        .membership
        .iter()
        .chain(s2.membership.iter())
        .all(|(&v, b)| out.block_count(v) == b.len());
    if !preserved {
        return Err(SbepError::Internal("combining changed a block count".into()));
    }
    Ok(out)
}

/// Either a spanning SBEP subgraph or the toughness evidence that none
/// exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SbepOutcome {
    Spanning(SbepGraph),
    /// Toughness below ½, with the optimal tough-set.
    NotTough(ToughnessResult),
}

/// How often each branch of the induction ran and how many structural
/// checks were made along the way.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SbepStats {
    pub hamiltonian_base: usize,
    pub contraction_case: usize,
    pub bipartite_case: usize,
    pub tripartite_case: usize,
    pub combines: usize,
    /// Tough-set attachment checks (every vertex of `S` touches two or more
    /// components and saturates them).
    pub attachment_checks: usize,
    /// Subsets `S'` of a tough-set whose component count was checked
    /// against `|S'|/t` (and `|S'|/t + 1` for proper subsets).
    pub subset_checks: usize,
    /// Toughness re-checks of the graphs the induction recurses into.
    pub toughness_checks: usize,
}

impl std::ops::AddAssign for SbepStats {
    fn add_assign(&mut self, o: Self) {
        self.hamiltonian_base += o.hamiltonian_base;
        self.contraction_case += o.contraction_case;
        self.bipartite_case += o.bipartite_case;
        self.tripartite_case += o.tripartite_case;
        self.combines += o.combines;
        self.attachment_checks += o.attachment_checks;
        self.subset_checks += o.subset_checks;
        self.toughness_checks += o.toughness_checks;
    }
}

/// Spanning SBEP construction for cographs.
#[derive(Debug, Clone)]
pub struct SbepBuilder {
    /// Tough-sets up to this size get every nonempty subset checked.
    pub subset_check_limit: usize,
    stats: SbepStats,
}

impl Default for SbepBuilder {
    fn default() -> Self {
        SbepBuilder { subset_check_limit: 14, stats: SbepStats::default() }
    }
}

/// Spanning SBEP subgraph of a P4-free graph with at least two vertices,
/// or the evidence that its toughness is below ½.
pub fn spanning_sbep(g: &Graph) -> Result<SbepOutcome, SbepError> {
    SbepBuilder::default().build(g)
}

fn half() -> Rational {
    Rational::new(1, 2)
}

impl SbepBuilder {
    pub fn with_subset_check_limit(limit: usize) -> SbepBuilder {
        SbepBuilder { subset_check_limit: limit, ..SbepBuilder::default() }
    }

    pub fn stats(&self) -> SbepStats {
        self.stats
    }

    pub fn build(&mut self, g: &Graph) -> Result<SbepOutcome, SbepError> {
        if g.n() < 2 {
            return Err(SbepError::TooSmall(g.n()));
        }
        if let Recognition::NotCograph(w) = cograph::recognize(g) {
            return Err(SbepError::NotCograph(w));
        }
        let res = toughness_exact(g);
        if !res.value.at_least(half()) {
            return Ok(SbepOutcome::NotTough(res));
        }
        let s = self.induct(g, res.value)?;
        if !s.is_spanning(g) {
            return Err(SbepError::Internal("constructed SBEP is not spanning".into()));
        }
        check_sbep(g, &s).map_err(|e| SbepError::Internal(format!("constructed SBEP is invalid: {e}")))?;
        Ok(SbepOutcome::Spanning(s))
    }

    /// `g` is a connected cograph with `τ(g) = tau >= ½`.
    fn induct(&mut self, g: &Graph, tau: Toughness) -> Result<SbepGraph, SbepError> {
        if g.n() == 2 {
            return Ok(SbepGraph::new(vec![Block::Edge(0, 1)]));
        }
        let t = match tau {
            Toughness::Finite(t) if t < Rational::integer(1) => t,
            _ => return self.hamiltonian_base(g),
        };
        let s = maximal_tough_set(g)?;
        self.check_tough_set(g, &s, t)?;
        let comps = g.components_without(&s);
        if let Some(r) = comps.iter().find(|c| c.len() >= 2) {
            self.stats.contraction_case += 1;
            return self.contraction_case(g, t, &s, r);
        }
        if is_minimal_cutset(g, &s) {
            self.stats.bipartite_case += 1;
            return bipartite_sbep(g, &s, &s.complement(g.n()));
        }
        self.stats.tripartite_case += 1;
        self.tripartite_case(g, t, &s)
    }

    /// τ ≥ 1: a hamiltonian cycle if it is even, otherwise the hamiltonian
    /// path left after dropping its closing edge, as a chain of edges.
    fn hamiltonian_base(&mut self, g: &Graph) -> Result<SbepGraph, SbepError> {
        self.stats.hamiltonian_base += 1;
        let tree = cograph::cotree(g).ok_or_else(|| SbepError::Internal("lost P4-freeness".into()))?;
        let cycle = prism_walks::cograph_ham_cycle(g, &tree)?
            .ok_or_else(|| SbepError::Internal("1-tough cograph without a hamiltonian cycle".into()))?;
        let blocks = if cycle.len() % 2 == 0 {
            vec![Block::Cycle(cycle)]
        } else {
            cycle.windows(2).map(|w| Block::Edge(w[0], w[1])).collect()
        };
        Ok(SbepGraph::new(blocks))
    }

    fn check_tough_set(&mut self, g: &Graph, s: &VertexSet, t: Rational) -> Result<(), SbepError> {
        let comps = g.components_without(s);
        self.stats.attachment_checks += 1;
        if !neighbor_saturation_check(g, s) {
            return Err(SbepError::Internal(format!("tough-set {s} is not saturating")));
        }
        let masks: Vec<Vec<bool>> = s
            .iter()
            .map(|u| comps.iter().map(|c| c.iter().any(|v| g.has_edge(u, v))).collect())
            .collect();
        for (i, m) in masks.iter().enumerate() {
            if m.iter().filter(|&&b| b).count() < 2 {
                return Err(SbepError::Internal(format!(
                    "tough-set vertex {} touches fewer than two components",
                    s.as_slice()[i]
                )));
            }
        }
        let k = s.len();
        if k > self.subset_check_limit || comps.len() > 128 {
            return Ok(());
        }
        let bits: Vec<u128> = masks
            .iter()
            .map(|m| m.iter().enumerate().filter(|(_, &b)| b).fold(0u128, |acc, (j, _)| acc | 1 << j))
            .collect();
        let mut reach = vec![0u128; 1 << k];
        for sub in 1usize..(1 << k) {
            let low = sub.trailing_zeros() as usize;
            reach[sub] = reach[sub & (sub - 1)] | bits[low];
            let size = sub.count_ones() as u64;
            let touched = reach[sub].count_ones() as u64;
            let proper = sub != (1 << k) - 1;
            let ok = t.times_at_least(touched, size) && (!proper || t.times_at_least(touched - 1, size));
            if !ok {
                return Err(SbepError::Internal(format!(
                    "subset of tough-set {s} touches only {touched} components"
                )));
            }
        }
        self.stats.subset_checks += (1 << k) - 1;
        Ok(())
    }

    fn toughness_at_least(&mut self, g: &Graph, bound: Rational, what: &str) -> Result<Toughness, SbepError> {
        self.stats.toughness_checks += 1;
        let value = toughness_exact(g).value;
        if !value.at_least(bound) {
            return Err(SbepError::Internal(format!("{what} has toughness {value}, below {bound}")));
        }
        Ok(value)
    }

    /// Contract the nontrivial component `r`, solve the contraction and `r`
    /// separately, and re-embed, splitting the contracted vertex's two
    /// blocks between two single-block vertices of `r`'s solution when it
    /// is a cutvertex.
    fn contraction_case(&mut self, g: &Graph, t: Rational, s: &VertexSet, r: &VertexSet) -> Result<SbepGraph, SbepError> {
        let contraction = g.contract(r)?;
        let sub_r = g.induced_subgraph(r);
        let tau_r = self.toughness_at_least(&sub_r, half(), "tough-set component")?;
        let tau_c = self.toughness_at_least(&contraction.graph, t, "contraction")?;

        let t_r = self.induct(&sub_r, tau_r)?.relabel(|v| r.as_slice()[v]);
        let t_c = self.induct(&contraction.graph, tau_c)?;
        let v_r = contraction.contracted_vertex;
        let origin = &contraction.origin;
        let singles = t_r.single_block_vertices();
        let (x, y) = match singles.as_slice() {
            [x, y, ..] => (*x, *y),
            _ => return Err(SbepError::Internal("SBEP with fewer than two single-block vertices".into())),
        };
        for w in t_c.membership.keys().filter(|&&w| w != v_r) {
            let w = origin[*w].as_slice()[0];
            if g.has_edge(w, r.as_slice()[0]) && !(g.has_edge(w, x) && g.has_edge(w, y)) {
                return Err(SbepError::Internal(format!("tough-set vertex {w} does not saturate {r}")));
            }
        }
        let _ = s;
        let embed = |blocks: &[Block], image: usize| -> Vec<Block> {
            blocks
                .iter()
                .map(|b| b.relabel(&|v| if v == v_r { image } else { origin[v].as_slice()[0] }))
                .collect()
        };
        let mut blocks = t_r.blocks.clone();
        if t_c.block_count(v_r) == 1 {
            blocks.extend(embed(&t_c.blocks, x));
        } else {
            let (side1, side2) = split_at_cutvertex(&t_c, v_r);
            blocks.extend(embed(&side1, x));
            blocks.extend(embed(&side2, y));
        }
        Ok(SbepGraph::new(blocks))
    }

    /// All components trivial and `s` not minimal: carve out a complete
    /// bipartite piece `X ∪ Y₁` from a tripartite witness, solve the rest,
    /// and combine through an `X–Y₁` edge and a `U–Y₂` edge.
    fn tripartite_case(&mut self, g: &Graph, t: Rational, s: &VertexSet) -> Result<SbepGraph, SbepError> {
        let w = find_tripartite_witness(g, s)?;
        let xs = w.x_set.len() as u64;
        let y1_len = (xs * t.denom()).div_ceil(t.numer()) as usize;
        if !(w.x_set.len() < y1_len && y1_len <= 2 * w.x_set.len()) || w.y_set.len() <= y1_len {
            return Err(SbepError::Internal(format!(
                "|X| = {}, |Y| = {}, |Y1| = {y1_len} out of range",
                w.x_set.len(),
                w.y_set.len()
            )));
        }
        let y1: VertexSet = w.y_set.iter().take(y1_len).collect();
        let y2 = w.y_set.difference(&y1);
        let t_r = bipartite_sbep(g, &w.x_set, &y1)?;

        let keep = w.x_set.union(&y1).complement(g.n());
        let rest = g.induced_subgraph(&keep);
        let tau_rest = self.toughness_at_least(&rest, half(), "remainder")?;
        let t_rest = self.induct(&rest, tau_rest)?.relabel(|v| keep.as_slice()[v]);

        let (a, b) = t_r.blocks[0].edges()[0];
        let (x, y_1) = if w.x_set.contains(a) { (a, b) } else { (b, a) };
        let (z, y_2) = t_rest
            .edges()
            .into_iter()
            .find_map(|(a, b)| {
                if y2.contains(b) {
                    Some((a, b))
                } else if y2.contains(a) {
                    Some((b, a))
                } else {
                    None
                }
            })
            .ok_or_else(|| SbepError::Internal("no edge of the remainder reaches Y2".into()))?;
        if !w.u_set.contains(z) {
            return Err(SbepError::Internal(format!("neighbour {z} of Y2 lies outside U")));
        }
        self.stats.combines += 1;
        combine(g, &t_r, &t_rest, (x, y_1), (z, y_2))
    }
}

/// Splits the blocks of `s` at the cutvertex `v` into the side holding the
/// lower-indexed of its two blocks and the rest.
fn split_at_cutvertex(s: &SbepGraph, v: usize) -> (Vec<Block>, Vec<Block>) {
    let start = s.membership[&v][0];
    let mut on_first = vec![false; s.blocks.len()];
    on_first[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(b) = queue.pop_front() {
        for w in s.blocks[b].vertices() {
            if w == v {
                continue;
            }
            for &nb in &s.membership[&w] {
                if !on_first[nb] {
                    on_first[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
    }
    let side = |want: bool| -> Vec<Block> {
        s.blocks.iter().zip(&on_first).filter(|(_, &f)| f == want).map(|(b, _)| b.clone()).collect()
    };
    (side(true), side(false))
}
