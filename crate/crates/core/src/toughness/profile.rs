//! Component-count profiles: for every size `s`, the largest `c(G - S)` over
//! `|S| = s`, with a set attaining it.

use crate::cograph::{self, Cotree};
use crate::graph::{Graph, VertexSet};

/// Largest exhaustive profile computed for non-cographs.
pub const BRUTE_FORCE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    /// `entries[s] = (max c(G - S) over |S| = s, an S attaining it)`, for
    /// `s = 0..=n`.
    pub entries: Vec<(usize, VertexSet)>,
}

impl Profile {
    pub fn max_components(&self, s: usize) -> usize {
        self.entries[s].0
    }

    pub fn witness(&self, s: usize) -> &VertexSet {
        &self.entries[s].1
    }
}

/// Polynomial for cographs (cotree dynamic program), exhaustive otherwise.
/// Returns `None` for a non-cograph above [`BRUTE_FORCE_LIMIT`].
pub fn component_profile(g: &Graph) -> Option<Profile> {
    match cograph::cotree(g) {
        Some(t) => Some(cotree_profile(&t, g.n())),
        None if g.n() <= BRUTE_FORCE_LIMIT => Some(brute_force_profile(g)),
        None => None,
    }
}

struct Node<'a> {
    tree: &'a Cotree,
    children: Vec<Node<'a>>,
    leaves: Vec<usize>,
    table: Vec<usize>,
    /// For union nodes, `prefix[i]` is the max-plus convolution of the first
    /// `i + 1` children.
    prefix: Vec<Vec<usize>>,
}

const NEG: usize = usize::MAX;

fn max_plus(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![NEG; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == NEG {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != NEG && (out[i + j] == NEG || x + y > out[i + j]) {
                out[i + j] = x + y;
            }
        }
    }
    out
}

fn annotate(tree: &Cotree) -> Node<'_> {
    match tree {
        Cotree::Leaf(v) => Node { tree, children: Vec::new(), leaves: vec![*v], table: vec![1, 0], prefix: Vec::new() },
        Cotree::Union(ch) => {
            let children: Vec<Node> = ch.iter().map(annotate).collect();
            let mut prefix: Vec<Vec<usize>> = Vec::with_capacity(children.len());
            for c in &children {
                let next = match prefix.last() {
                    None => c.table.clone(),
                    Some(p) => max_plus(p, &c.table),
                };
                prefix.push(next);
            }
            let table = prefix.last().cloned().unwrap_or_else(|| vec![0]);
            let leaves = children.iter().flat_map(|c| c.leaves.iter().copied()).collect();
            Node { tree, children, leaves, table, prefix }
        }
        Cotree::Join(ch) => {
            let children: Vec<Node> = ch.iter().map(annotate).collect();
            let size: usize = children.iter().map(|c| c.leaves.len()).sum();
            let mut table = vec![0; size + 1];
            for (s, slot) in table.iter_mut().enumerate().take(size) {
                // two surviving children (or one surviving vertex) stay connected
                let mut best = 1;
                for c in &children {
                    let others = size - c.leaves.len();
                    if s >= others && s - others < c.leaves.len() {
                        best = best.max(c.table[s - others]);
                    }
                }
                *slot = best;
            }
            let leaves = children.iter().flat_map(|c| c.leaves.iter().copied()).collect();
            Node { tree, children, leaves, table, prefix: Vec::new() }
        }
    }
}

/// Appends to `out` a set of `s` leaves of `node` whose removal leaves
/// exactly `node.table[s]` components.
fn reconstruct(node: &Node, s: usize, out: &mut Vec<usize>) {
    let size = node.leaves.len();
    if s == size {
        out.extend_from_slice(&node.leaves);
        return;
    }
    if s == 0 {
        return;
    }
    match node.tree {
        Cotree::Leaf(_) => unreachable!("leaf handled by s == 0 or s == size"),
        Cotree::Union(_) => {
            let mut rest = s;
            for i in (1..node.children.len()).rev() {
                let child = &node.children[i];
                let target = node.prefix[i][rest];
                let share = (0..=child.leaves.len().min(rest))
                    .find(|&j| {
                        let before = node.prefix[i - 1].get(rest - j).copied().unwrap_or(NEG);
                        before != NEG && before + child.table[j] == target
                    })
                    .expect("max-plus split exists");
                reconstruct(child, share, out);
                rest -= share;
            }
            reconstruct(&node.children[0], rest, out);
        }
        Cotree::Join(_) => {
            let target = node.table[s];
            for c in &node.children {
                let others = size - c.leaves.len();
                if s >= others && s - others < c.leaves.len() && c.table[s - others] == target {
                    for o in &node.children {
                        if !std::ptr::eq(o, c) {
                            out.extend_from_slice(&o.leaves);
                        }
                    }
                    reconstruct(c, s - others, out);
                    return;
                }
            }
            debug_assert_eq!(target, 1);
            // keep one vertex in each of the first two children
            let keep = [node.children[0].leaves[0], node.children[1].leaves[0]];
            let removable = node.leaves.iter().copied().filter(|v| !keep.contains(v));
            if s <= size - 2 {
                out.extend(removable.take(s));
            } else {
                out.extend(node.leaves.iter().copied().filter(|&v| v != keep[0]));
            }
        }
    }
}

/// Cotree dynamic program. Leaves of `tree` must be exactly `0..n`.
pub fn cotree_profile(tree: &Cotree, n: usize) -> Profile {
    if n == 0 {
        return Profile { entries: vec![(0, VertexSet::new())] };
    }
    let root = annotate(tree);
    debug_assert_eq!(root.leaves.len(), n);
    let entries = (0..=n)
        .map(|s| {
            let mut out = Vec::with_capacity(s);
            reconstruct(&root, s, &mut out);
            (root.table[s], VertexSet::from(out))
        })
        .collect();
    Profile { entries }
}

/// Exhaustive over all `2^n` subsets.
pub fn brute_force_profile(g: &Graph) -> Profile {
    let n = g.n();
    assert!(n <= BRUTE_FORCE_LIMIT, "exhaustive profile limited to {BRUTE_FORCE_LIMIT} vertices");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut best: Vec<Option<(usize, u32)>> = vec![None; n + 1];
    for mask in 0u32..(1u32 << n) {
        let s = mask.count_ones() as usize;
        let c = count_components(&adj, n, mask);
        if best[s].is_none_or(|(b, _)| c > b) {
            best[s] = Some((c, mask));
        }
    }
    let entries = best
        .into_iter()
        .map(|e| {
            let (c, mask) = e.expect("every size occurs");
            (c, (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        })
        .collect();
    Profile { entries }
}

pub(crate) fn count_components(adj: &[u32], n: usize, removed: u32) -> usize {
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut left = all & !removed;
    let mut count = 0;
    while left != 0 {
        let mut frontier = left & left.wrapping_neg();
        let mut comp = frontier;
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
