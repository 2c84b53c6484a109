//! Hamiltonian cycles of cographs, prism-hamiltonian cycles built from
//! spanning SBEP subgraphs, and spanning k-walks.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cograph::{self, Cotree, P4Witness, Recognition};
use crate::graph::{Graph, GraphError};
use crate::rational::Rational;
use crate::sbep::{check_sbep, open_cycle, Block, SbepGraph};
use crate::toughness::{toughness_exact, ToughnessResult};

/// Hamiltonian cycle of the prism `G □ K2`; `(v, side)` with side 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismCycle {
    pub cycle: Vec<(usize, u8)>,
}

/// Closed walk visiting every vertex between 1 and `k` times. The closing
/// step from the last entry back to the first is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KWalk {
    pub k: usize,
    pub walk: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("input is not P4-free: induced path {:?}", .0 .0)]
    NotCograph(P4Witness),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("k must be at least 1")]
    ZeroK,
    #[error("cotree does not realize the graph")]
    CotreeMismatch,
    #[error("not a valid SBEP subgraph: {0}")]
    InvalidSbep(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Minimum path cover of the cograph described by `tree`.
///
/// Union: concatenate. Join of `A` (p paths) and `B` (q ≤ p paths, m
/// vertices): split `B` into `min(p, m)` paths and alternate them with the
/// paths of `A`; whatever is left of `A` stays separate.
pub fn min_path_cover(tree: &Cotree) -> Vec<Vec<usize>> {
    match tree {
        Cotree::Leaf(v) => vec![vec![*v]],
        Cotree::Union(ch) => ch.iter().flat_map(min_path_cover).collect(),
        Cotree::Join(ch) => {
            let mut it = ch.iter();
            let first = it.next().map(min_path_cover).unwrap_or_default();
            it.fold(first, |acc, c| join_covers(acc, min_path_cover(c)))
        }
    }
}

fn cover_size(c: &[Vec<usize>]) -> usize {
    c.iter().map(Vec::len).sum()
}

fn join_covers(a: Vec<Vec<usize>>, b: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let (major, minor) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let target = major.len().min(cover_size(&minor));
    let minor = split_cover(minor, target);
    let mut out = Vec::new();
    let mut merged = Vec::new();
    let mut rest = major.into_iter();
    for m in minor {
        merged.extend(rest.next().expect("major has at least as many paths"));
        merged.extend(m);
    }
    if let Some(tail) = rest.next() {
        merged.extend(tail);
    }
    out.push(merged);
    out.extend(rest);
    out
}

/// Cuts single vertices off the ends of paths until there are `target`.
fn split_cover(mut cover: Vec<Vec<usize>>, target: usize) -> Vec<Vec<usize>> {
    while cover.len() < target {
        let i = cover.iter().position(|p| p.len() >= 2).expect("target within vertex count");
        let v = cover[i].pop().expect("nonempty path");
        cover.push(vec![v]);
    }
    cover
}

/// Hamiltonian cycle of the cograph `g`, whose cotree is `tree`, if one
/// exists. For a join `A + B` a cycle exists iff both minimum path covers
/// fit into `min(|A|, |B|)` paths.
pub fn cograph_ham_cycle(g: &Graph, tree: &Cotree) -> Result<Option<Vec<usize>>, WalkError> {
    if !tree.realizes(g) {
        return Err(WalkError::CotreeMismatch);
    }
    let ch = match tree {
        Cotree::Join(ch) if g.n() >= 3 => ch,
        _ => return Ok(None),
    };
    let a = min_path_cover(&ch[0]);
    let b = if ch.len() == 2 {
        min_path_cover(&ch[1])
    } else {
        min_path_cover(&Cotree::Join(ch[1..].to_vec()))
    };
    let p = a.len().max(b.len());
    if p > cover_size(&a).min(cover_size(&b)) {
        return Ok(None);
    }
    let a = split_cover(a, p);
    let b = split_cover(b, p);
    let cycle: Vec<usize> = a.into_iter().zip(b).flat_map(|(x, y)| x.into_iter().chain(y)).collect();
    debug_assert!(is_ham_cycle(g, &cycle));
    Ok(Some(cycle))
}

fn is_ham_cycle(g: &Graph, c: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    c.len() == g.n()
        && c.len() >= 3
        && c.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
        && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
}

/// Hamiltonian cycle of the prism over a spanning SBEP subgraph of `host`.
///
/// Each block has a prism cycle using every vertical edge of its vertices.
/// Two sides of a cutvertex `x` are glued by opening both cycles at the
/// vertical edge of `x` and joining the paths.
pub fn prism_cycle_from_sbep(host: &Graph, s: &SbepGraph) -> Result<PrismCycle, WalkError> {
    check_sbep(host, s).map_err(WalkError::InvalidSbep)?;
    if !s.is_spanning(host) {
        return Err(WalkError::InvalidSbep("not spanning".into()));
    }
    let cycle = prism_of_blocks(s.blocks())?;
    let out = PrismCycle { cycle };
    if !validate_prism_cycle(host, &out) {
        return Err(WalkError::Internal("assembled prism cycle is invalid".into()));
    }
    if !uses_vertical_edges(&out, s.single_block_vertices().iter()) {
        return Err(WalkError::Internal("a single-block vertex lost its vertical edge".into()));
    }
    Ok(out)
}

fn prism_of_block(b: &Block) -> Vec<(usize, u8)> {
    match b {
        Block::Edge(u, v) => vec![(*u, 0), (*v, 0), (*v, 1), (*u, 1)],
        Block::Cycle(vs) => vs
            .iter()
            .enumerate()
            .flat_map(|(i, &v)| if i % 2 == 0 { [(v, 0), (v, 1)] } else { [(v, 1), (v, 0)] })
            .collect(),
    }
}

fn prism_of_blocks(blocks: &[Block]) -> Result<Vec<(usize, u8)>, WalkError> {
    if blocks.len() == 1 {
        return Ok(prism_of_block(&blocks[0]));
    }
    let mut membership: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, b) in blocks.iter().enumerate() {
        for v in b.vertices() {
            membership.entry(v).or_default().push(i);
        }
    }
    let x = membership
        .iter()
        .filter(|(_, b)| b.len() == 2)
        .map(|(&v, _)| v)
        .min()
        .ok_or_else(|| WalkError::Internal("several blocks but no cutvertex".into()))?;
    let start = membership[&x][0];
    let mut first_side = vec![false; blocks.len()];
    first_side[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(b) = queue.pop_front() {
        for w in blocks[b].vertices().into_iter().filter(|&w| w != x) {
            for &nb in &membership[&w] {
                if !std::mem::replace(&mut first_side[nb], true) {
                    queue.push_back(nb);
                }
            }
        }
    }
    let side = |want: bool| -> Vec<Block> {
        blocks.iter().zip(&first_side).filter(|(_, &f)| f == want).map(|(b, _)| b.clone()).collect()
    };
    let (side1, side2) = (side(true), side(false));
    let c1 = prism_of_blocks(&side1)?;
    let c2 = prism_of_blocks(&side2)?;
    let missing = || WalkError::Internal(format!("vertical edge of {x} unused"));
    let p1 = open_cycle(&c1, (x, 0), (x, 1)).ok_or_else(missing)?;
    let p2 = open_cycle(&c2, (x, 1), (x, 0)).ok_or_else(missing)?;
    let mut out = p1;
    out.extend_from_slice(&p2[1..p2.len() - 1]);
    Ok(out)
}

/// Independent check: every prism vertex exactly once, consecutive entries
/// adjacent in `host □ K2`.
pub fn validate_prism_cycle(host: &Graph, c: &PrismCycle) -> bool {
    let n = host.n();
    if n < 2 || c.cycle.len() != 2 * n {
        return false;
    }
    let mut seen = vec![false; 2 * n];
    for &(v, side) in &c.cycle {
        if v >= n || side > 1 || std::mem::replace(&mut seen[v + side as usize * n], true) {
            return false;
        }
    }
    let len = c.cycle.len();
    (0..len).all(|i| {
        let (u, a) = c.cycle[i];
        let (v, b) = c.cycle[(i + 1) % len];
        (u == v && a != b) || (a == b && host.has_edge(u, v))
    })
}

/// Whether the cycle steps between `(v,0)` and `(v,1)` for every listed `v`.
pub fn uses_vertical_edges(c: &PrismCycle, vs: impl IntoIterator<Item = usize>) -> bool {
    let len = c.cycle.len();
    let verticals: std::collections::HashSet<usize> = (0..len)
        .filter(|&i| c.cycle[i].0 == c.cycle[(i + 1) % len].0)
        .map(|i| c.cycle[i].0)
        .collect();
    vs.into_iter().all(|v| verticals.contains(&v))
}

/// Projects a prism cycle onto `G`. Repeated consecutive vertices collapse,
/// so each vertex appears at most twice.
pub fn two_walk_from_prism_cycle(c: &PrismCycle) -> KWalk {
    let projected: Vec<usize> = c.cycle.iter().map(|&(v, _)| v).collect();
    KWalk { k: 2, walk: canonical_rotation(&collapse_cyclic(&projected)) }
}

fn collapse_cyclic(seq: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(seq.len());
    for &v in seq {
        if out.last() != Some(&v) {
            out.push(v);
        }
    }
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Lexicographically least rotation over both directions.
pub fn canonical_rotation(walk: &[usize]) -> Vec<usize> {
    let len = walk.len();
    let reversed: Vec<usize> = walk.iter().rev().copied().collect();
    [walk, reversed.as_slice()]
        .into_iter()
        .flat_map(|w| (0..len).map(move |r| w[r..].iter().chain(&w[..r]).copied().collect::<Vec<_>>()))
        .min()
        .unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkOutcome {
    Found(KWalk),
    /// Toughness below `1/k`, with the tough-set as evidence.
    NotTough(ToughnessResult),
}

/// Spanning k-walk of a connected cograph, or the toughness evidence that
/// none exists. The walk is read off a hamiltonian cycle of `G[K_k]`, which
/// is again a cograph.
pub fn find_k_walk(g: &Graph, k: usize) -> Result<WalkOutcome, WalkError> {
    if k == 0 {
        return Err(WalkError::ZeroK);
    }
    if g.n() == 0 {
        return Err(WalkError::Empty);
    }
    if !g.is_connected() {
        return Err(WalkError::Disconnected);
    }
    if let Recognition::NotCograph(w) = cograph::recognize(g) {
        return Err(WalkError::NotCograph(w));
    }
    let res = toughness_exact(g);
    if !res.value.at_least(Rational::new(1, k as u64)) {
        return Ok(WalkOutcome::NotTough(res));
    }
    let walk = match g.n() {
        1 => vec![0],
        2 => vec![0, 1],
        _ => {
            let product = g.lex_product_k(k)?;
            let tree = cograph::cotree(&product)
                .ok_or_else(|| WalkError::Internal("lexicographic product lost P4-freeness".into()))?;
            let cycle = cograph_ham_cycle(&product, &tree)?
                .ok_or_else(|| WalkError::Internal(format!("product with K{k} is not hamiltonian")))?;
            let projected: Vec<usize> = cycle.iter().map(|&v| v / k).collect();
            canonical_rotation(&collapse_cyclic(&projected))
        }
    };
    let out = KWalk { k, walk };
    if !validate_k_walk(g, &out) {
        return Err(WalkError::Internal("projected walk is invalid".into()));
    }
    Ok(WalkOutcome::Found(out))
}

/// Independent check of a spanning k-walk.
pub fn validate_k_walk(g: &Graph, w: &KWalk) -> bool {
    let n = g.n();
    if w.k == 0 || w.walk.is_empty() || w.walk.iter().any(|&v| v >= n) {
        return false;
    }
    let mut count = vec![0usize; n];
    for &v in &w.walk {
        count[v] += 1;
    }
    if count.iter().any(|&c| c == 0 || c > w.k) {
        return false;
    }
    let len = w.walk.len();
    if len == 1 {
        return n == 1;
    }
    (0..len).all(|i| {
        let (u, v) = (w.walk[i], w.walk[(i + 1) % len]);
        u != v && g.has_edge(u, v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sbep::{spanning_sbep, SbepOutcome};

    fn ham(g: &Graph) -> Option<Vec<usize>> {
        cograph_ham_cycle(g, &cograph::cotree(g).unwrap()).unwrap()
    }

    #[test]
    fn path_cover_sizes() {
        // K_{2,5}: 3 paths; K_{1,3}: 2; K4: 1
        let cases = [(Graph::complete_bipartite(2, 5), 3), (Graph::complete_bipartite(1, 3), 2), (Graph::complete(4), 1)];
        for (g, expected) in cases {
            let cover = min_path_cover(&cograph::cotree(&g).unwrap());
            assert_eq!(cover.len(), expected);
            assert_eq!(cover_size(&cover), g.n());
            for p in &cover {
                assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
            }
        }
    }

    #[test]
    fn ham_cycle_examples() {
        assert!(ham(&Graph::complete(3)).is_some());
        assert!(ham(&Graph::complete_bipartite(3, 3)).is_some());
        assert!(ham(&Graph::complete_bipartite(2, 3)).is_none());
        assert!(ham(&Graph::complete(2)).is_none());
        assert!(ham(&Graph::complete(2).join(&Graph::empty(2))).is_some());
        let c = ham(&Graph::complete(5)).unwrap();
        assert!(is_ham_cycle(&Graph::complete(5), &c));
    }

    #[test]
    fn ham_cycle_rejects_foreign_cotree() {
        let t = cograph::cotree(&Graph::complete(3)).unwrap();
        assert_eq!(cograph_ham_cycle(&Graph::empty(3), &t), Err(WalkError::CotreeMismatch));
    }

    #[test]
    fn prism_of_single_edge() {
        let g = Graph::complete(2);
        let s = SbepGraph::new(vec![Block::Edge(0, 1)]);
        let c = prism_cycle_from_sbep(&g, &s).unwrap();
        assert_eq!(c.cycle, vec![(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert!(uses_vertical_edges(&c, [0, 1]));
        assert_eq!(two_walk_from_prism_cycle(&c), KWalk { k: 2, walk: vec![0, 1] });
    }

    #[test]
    fn prism_of_even_cycle_uses_all_verticals() {
        let g = Graph::cycle(6);
        let s = SbepGraph::new(vec![Block::Cycle((0..6).collect())]);
        let c = prism_cycle_from_sbep(&g, &s).unwrap();
        assert!(uses_vertical_edges(&c, 0..6));
    }

    #[test]
    fn prism_glues_at_cutvertices() {
        let g = Graph::complete_bipartite(1, 2);
        let s = SbepGraph::new(vec![Block::Edge(0, 1), Block::Edge(0, 2)]);
        let c = prism_cycle_from_sbep(&g, &s).unwrap();
        assert!(validate_prism_cycle(&g, &c));
        let w = two_walk_from_prism_cycle(&c);
        assert!(validate_k_walk(&g, &w));

        let g = Graph::complete(2).join(&Graph::empty(4));
        let SbepOutcome::Spanning(s) = spanning_sbep(&g).unwrap() else { panic!() };
        let c = prism_cycle_from_sbep(&g, &s).unwrap();
        assert!(validate_prism_cycle(&g, &c));
    }

    #[test]
    fn prism_rejects_invalid_sbep() {
        let g = Graph::cycle(5);
        let s = SbepGraph::new(vec![Block::Cycle((0..5).collect())]);
        assert!(matches!(prism_cycle_from_sbep(&g, &s), Err(WalkError::InvalidSbep(_))));
    }

    #[test]
    fn prism_validator_rejects_bad_cycles() {
        let g = Graph::complete(2);
        assert!(!validate_prism_cycle(&g, &PrismCycle { cycle: vec![(0, 0), (1, 1), (1, 0), (0, 1)] }));
        assert!(!validate_prism_cycle(&g, &PrismCycle { cycle: vec![(0, 0), (1, 0), (1, 1)] }));
        assert!(!validate_prism_cycle(&Graph::complete(1), &PrismCycle { cycle: vec![(0, 0), (0, 1)] }));
    }

    #[test]
    fn k_walk_examples() {
        let star = Graph::complete_bipartite(1, 3);
        assert!(matches!(find_k_walk(&star, 2).unwrap(), WalkOutcome::NotTough(_)));
        let WalkOutcome::Found(w) = find_k_walk(&star, 3).unwrap() else { panic!() };
        assert_eq!(w.walk, vec![0, 1, 0, 2, 0, 3]);
        let WalkOutcome::Found(w) = find_k_walk(&Graph::complete(1), 1).unwrap() else { panic!() };
        assert_eq!(w.walk, vec![0]);
        let WalkOutcome::Found(w) = find_k_walk(&Graph::complete(2), 1).unwrap() else { panic!() };
        assert_eq!(w.walk, vec![0, 1]);
        assert!(matches!(find_k_walk(&Graph::path(4), 2), Err(WalkError::NotCograph(_))));
        assert_eq!(find_k_walk(&Graph::empty(2), 2), Err(WalkError::Disconnected));
        assert_eq!(find_k_walk(&star, 0), Err(WalkError::ZeroK));
    }

    #[test]
    fn k_walk_validator() {
        let p3 = Graph::path(3);
        assert!(validate_k_walk(&p3, &KWalk { k: 2, walk: vec![0, 1, 2, 1] }));
        assert!(!validate_k_walk(&p3, &KWalk { k: 1, walk: vec![0, 1, 2, 1] }));
        assert!(!validate_k_walk(&p3, &KWalk { k: 2, walk: vec![0, 1, 2] }));
        assert!(!validate_k_walk(&p3, &KWalk { k: 2, walk: vec![0, 1] }));
    }

    #[test]
    fn canonical_rotation_is_direction_free() {
        assert_eq!(canonical_rotation(&[2, 0, 1]), vec![0, 1, 2]);
        assert_eq!(canonical_rotation(&[1, 0, 2]), vec![0, 1, 2]);
        assert_eq!(collapse_cyclic(&[1, 1, 2, 2, 1]), vec![1, 2]);
    }

    #[test]
    fn json_shapes() {
        let c = PrismCycle { cycle: vec![(0, 0), (1, 0), (1, 1), (0, 1)] };
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"cycle":[[0,0],[1,0],[1,1],[0,1]]}"#);
        let w = KWalk { k: 2, walk: vec![0, 1] };
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"k":2,"walk":[0,1]}"#);
    }
}
