//! Brute-force ground truth. Nothing here calls the constructive modules:
//! each oracle builds its own bitmask adjacency from `Graph::has_edge`
//! and searches exhaustively, refusing inputs above a size guard.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::prism_walks::{KWalk, PrismCycle};
use crate::rational::Rational;
use crate::toughness::{Toughness, ToughnessResult};

pub const HAMILTONIAN_LIMIT: usize = 18;
pub const PRISM_LIMIT: usize = 9;
pub const TOUGHNESS_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("oracle refuses {n} vertices (limit {limit})")]
pub struct OracleError {
    pub n: usize,
    pub limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    HamiltonianCycle,
    HamiltonianPath,
    PrismHamiltonian,
    KWalk(usize),
    ToughnessAtLeast(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleWitness {
    Cycle(Vec<usize>),
    Path(Vec<usize>),
    Prism(PrismCycle),
    Walk(KWalk),
    /// For a failed toughness bound: a set with `|S| < t·c(G − S)`.
    ToughSet(VertexSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<OracleWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamKind {
    Cycle,
    Path,
}

fn guard(n: usize, limit: usize) -> Result<(), OracleError> {
    if n > limit {
        Err(OracleError { n, limit })
    } else {
        Ok(())
    }
}

fn masks(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<u32> {
    (0..n)
        .map(|u| (0..n).filter(|&v| v != u && adjacent(u, v)).fold(0u32, |m, v| m | 1 << v))
        .collect()
}

/// Whether the vertices of `set` induce a connected subgraph.
fn connected_within(adj: &[u32], set: u32) -> bool {
    if set == 0 {
        return true;
    }
    let mut reached = set & set.wrapping_neg();
    let mut frontier = reached;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & set & !reached;
        reached |= fresh;
        frontier |= fresh;
    }
    reached == set
}

struct HamSearch<'a> {
    adj: &'a [u32],
    full: u32,
    cycle: bool,
    start: usize,
    dead: HashSet<(u32, usize)>,
}

impl HamSearch<'_> {
    fn extend(&mut self, path: &mut Vec<usize>, visited: u32) -> bool {
        let v = *path.last().expect("path starts nonempty");
        if visited == self.full {
            return !self.cycle || self.adj[v] >> self.start & 1 == 1;
        }
        if self.dead.contains(&(visited, v)) {
            return false;
        }
        let open = self.full & !visited;
        let ends = if self.cycle { 1 << v | 1 << self.start } else { 1 << v };
        let need = if self.cycle { 2 } else { 1 };
        let mut feasible = connected_within(self.adj, open | ends);
        let mut rest = open;
        while feasible && rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.adj[u] & (open | ends)).count_ones() < need {
                feasible = false;
            }
        }
        if feasible {
            let mut next = self.adj[v] & open;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                path.push(w);
                if self.extend(path, visited | 1 << w) {
                    return true;
                }
                path.pop();
            }
        }
        // A dead end from (visited, v) does not depend on where the path
        // began unless the cycle has to close.
        self.dead.insert((visited, v));
        false
    }
}

fn hamiltonian(adj: &[u32], kind: HamKind) -> Option<Vec<usize>> {
    let n = adj.len();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    match kind {
        HamKind::Cycle => {
            if n < 3 {
                return None;
            }
            let mut s = HamSearch { adj, full, cycle: true, start: 0, dead: HashSet::new() };
            let mut path = vec![0];
            s.extend(&mut path, 1).then_some(path)
        }
        HamKind::Path => {
            if n == 0 {
                return None;
            }
            let mut s = HamSearch { adj, full, cycle: false, start: 0, dead: HashSet::new() };
            (0..n).find_map(|v| {
                s.start = v;
                let mut path = vec![v];
                s.extend(&mut path, 1 << v).then_some(path)
            })
        }
    }
}

/// Hamiltonian cycle or path by backtracking with degree and connectivity
/// pruning and a memo of dead `(visited, endpoint)` states.
pub fn oracle_hamiltonian(g: &Graph, kind: HamKind) -> Result<OracleVerdict, OracleError> {
    guard(g.n(), HAMILTONIAN_LIMIT)?;
    let adj = masks(g.n(), |u, v| g.has_edge(u, v));
    let found = hamiltonian(&adj, kind);
    let (property, witness) = match kind {
        HamKind::Cycle => (Property::HamiltonianCycle, found.map(OracleWitness::Cycle)),
        HamKind::Path => (Property::HamiltonianPath, found.map(OracleWitness::Path)),
    };
    Ok(OracleVerdict { property, holds: witness.is_some(), witness })
}

/// Hamiltonicity of `G □ K2`, searched directly on the prism. Prism vertex
/// `v + side·n`.
pub fn oracle_prism_hamiltonian(g: &Graph) -> Result<OracleVerdict, OracleError> {
    let n = g.n();
    guard(n, PRISM_LIMIT)?;
    let adj = masks(2 * n, |a, b| {
        let (u, su, v, sv) = (a % n, a / n, b % n, b / n);
        (u == v && su != sv) || (su == sv && g.has_edge(u, v))
    });
    let witness = hamiltonian(&adj, HamKind::Cycle).map(|c| {
        OracleWitness::Prism(PrismCycle { cycle: c.into_iter().map(|p| (p % n, (p / n) as u8)).collect() })
    });
    Ok(OracleVerdict { property: Property::PrismHamiltonian, holds: witness.is_some(), witness })
}

/// Spanning k-walk via a hamiltonian cycle of `G[K_k]`, vertex `u·k + i`.
/// One or two vertices are decided directly.
pub fn oracle_k_walk(g: &Graph, k: usize) -> Result<OracleVerdict, OracleError> {
    let n = g.n();
    assert!(k >= 1, "k-walk needs k >= 1");
    guard(n * k, HAMILTONIAN_LIMIT)?;
    let walk = match n {
        0 => None,
        1 => Some(vec![0]),
        2 => g.has_edge(0, 1).then(|| vec![0, 1]),
        _ => {
            let adj = masks(n * k, |a, b| a / k == b / k || g.has_edge(a / k, b / k));
            hamiltonian(&adj, HamKind::Cycle).map(|c| {
                let mut w: Vec<usize> = Vec::new();
                for v in c.into_iter().map(|a| a / k) {
                    if w.last() != Some(&v) {
                        w.push(v);
                    }
                }
                while w.len() > 1 && w.first() == w.last() {
                    w.pop();
                }
                w
            })
        }
    };
    let witness = walk.map(|walk| OracleWitness::Walk(KWalk { k, walk }));
    Ok(OracleVerdict { property: Property::KWalk(k), holds: witness.is_some(), witness })
}

/// Exact toughness over all `2^n` vertex subsets, no pruning. The witness
/// is the first optimal set in mask order.
pub fn oracle_toughness(g: &Graph) -> Result<ToughnessResult, OracleError> {
    let n = g.n();
    guard(n, TOUGHNESS_LIMIT)?;
    let adj = masks(n, |u, v| g.has_edge(u, v));
    let full = (1u32 << n) - 1;
    // best as (|S|, c) compared by cross-multiplication
    let mut best: Option<(u64, u64, u32)> = None;
    for s in 0..=full {
        let c = count_pieces(&adj, full & !s) as u64;
        if c < 2 {
            continue;
        }
        let size = s.count_ones() as u64;
        if best.is_none_or(|(bs, bc, _)| size * bc < bs * c) {
            best = Some((size, c, s));
        }
    }
    Ok(match best {
        None => ToughnessResult { value: Toughness::Infinite, witness: None },
        Some((size, c, s)) => ToughnessResult {
            value: Toughness::Finite(Rational::new(size, c)),
            witness: Some((0..n).filter(|&v| s >> v & 1 == 1).collect()),
        },
    })
}

fn count_pieces(adj: &[u32], mut left: u32) -> usize {
    let mut count = 0;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & left & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left &= !comp;
        count += 1;
    }
    count
}

/// `τ(G) >= t`, with a violating set when it fails.
pub fn oracle_tough_at_least(g: &Graph, t: Rational) -> Result<OracleVerdict, OracleError> {
    let res = oracle_toughness(g)?;
    let holds = match res.value {
        Toughness::Infinite => true,
        Toughness::Finite(v) => v >= t,
    };
    let witness = if holds { None } else { res.witness.map(OracleWitness::ToughSet) };
    Ok(OracleVerdict { property: Property::ToughnessAtLeast(t), holds, witness })
}
