//! Exact toughness, tough-sets and the structural witnesses built on them.
//!
//! A cutset is a vertex set `S` with `c(G - S) >= 2`; the toughness is the
//! minimum of `|S| / c(G - S)` over all cutsets, or infinite for complete
//! graphs. All comparisons are exact.

pub mod profile;

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cograph::{self, neighbor_saturation_check};
use crate::graph::{Graph, VertexSet};
pub use crate::rational::Rational;
pub use profile::{component_profile, Profile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Toughness {
    Finite(Rational),
    Infinite,
}

impl Toughness {
    pub fn finite(&self) -> Option<Rational> {
        match self {
            Toughness::Finite(r) => Some(*r),
            Toughness::Infinite => None,
        }
    }

    pub fn at_least(&self, t: Rational) -> bool {
        *self >= Toughness::Finite(t)
    }

    pub fn scale(&self, k: u64) -> Toughness {
        match self {
            Toughness::Finite(r) => Toughness::Finite(r.scale(k)),
            Toughness::Infinite => Toughness::Infinite,
        }
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite(r) => write!(f, "{r}"),
            Toughness::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughnessResult {
    pub value: Toughness,
    /// A tough-set; `None` exactly when the value is infinite.
    pub witness: Option<VertexSet>,
}

impl ToughnessResult {
    /// Recomputes `|S| / c(G - S)` for the witness and checks it against the
    /// claimed value.
    pub fn witness_is_consistent(&self, g: &Graph) -> bool {
        match (&self.value, &self.witness) {
            (Toughness::Infinite, None) => g.is_complete(),
            (Toughness::Finite(t), Some(s)) => {
                let c = g.count_components_without(s);
                c >= 2 && Rational::new(s.len() as u64, c as u64) == *t
            }
            _ => false,
        }
    }
}

impl Serialize for ToughnessResult {
    /// `{"toughness": "p/q" | "inf", "tough_set": [ids] | null}`
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ToughnessResult", 2)?;
        st.serialize_field("toughness", &self.value.to_string())?;
        st.serialize_field("tough_set", &self.witness)?;
        st.end()
    }
}

/// `U`, `X`, `Y` with `G[U, X, Y]` complete tripartite and `G[X ∪ Y]` a
/// component of `G - U`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripartiteWitness {
    pub u_set: VertexSet,
    pub x_set: VertexSet,
    pub y_set: VertexSet,
}

impl TripartiteWitness {
    /// Checks every invariant against `g` and the tough-set `s` it came from.
    pub fn verify(&self, g: &Graph, s: &VertexSet) -> bool {
        let (u, x, y) = (&self.u_set, &self.x_set, &self.y_set);
        if u.is_empty() || x.is_empty() || y.is_empty() {
            return false;
        }
        if !x.is_subset(&s.difference(u)) || !y.is_disjoint(s) || !g.is_cutset(u) {
            return false;
        }
        let xy = x.union(y);
        if !g.components_without(u).contains(&xy) {
            return false;
        }
        let complete = |a: &VertexSet, b: &VertexSet| a.iter().all(|p| b.iter().all(|q| g.has_edge(p, q)));
        complete(u, x) && complete(u, y) && complete(x, y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToughnessError {
    #[error("graph is complete; it has no cutset")]
    Complete,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0} is not a subset of the cutset")]
    NotSubset(VertexSet),
    #[error("{0} is not a cutset")]
    NotCutset(VertexSet),
    #[error("{0} is already a minimal cutset")]
    AlreadyMinimal(VertexSet),
    #[error("vertex {0} of the cutset touches fewer than two components")]
    LowAttachment(usize),
    #[error("neighbour saturation fails for {0}; input is not P4-free")]
    Saturation(VertexSet),
    #[error("graph is not P4-free")]
    NotCograph,
    #[error("graph has {0} vertices, beyond the exhaustive search limit")]
    TooLarge(usize),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Exact toughness with a tough-set witness.
///
/// Cographs go through the cotree component profile. Other graphs use a
/// search over cutsets by increasing size, cut off once `s / (n - s)`
/// (the best ratio any larger set could reach) is no better than the
/// current optimum.
pub fn toughness_exact(g: &Graph) -> ToughnessResult {
    if g.is_complete() {
        return ToughnessResult { value: Toughness::Infinite, witness: None };
    }
    match cograph::cotree(g) {
        Some(t) => from_profile(&profile::cotree_profile(&t, g.n())),
        None => toughness_search(g),
    }
}

fn from_profile(p: &Profile) -> ToughnessResult {
    let mut best: Option<(Rational, usize)> = None;
    for (s, (c, _)) in p.entries.iter().enumerate() {
        if *c >= 2 {
            let r = Rational::new(s as u64, *c as u64);
            if best.is_none_or(|(b, _)| r < b) {
                best = Some((r, s));
            }
        }
    }
    let (r, s) = best.expect("non-complete graph has a cutset");
    ToughnessResult { value: Toughness::Finite(r), witness: Some(p.witness(s).clone()) }
}

/// General-graph branch and bound. Visits sizes in increasing order and
/// subsets of each size in lexicographic order, so the witness is the
/// lexicographically least optimal set of the smallest optimal size.
pub fn toughness_search(g: &Graph) -> ToughnessResult {
    let n = g.n();
    if g.is_complete() {
        return ToughnessResult { value: Toughness::Infinite, witness: None };
    }
    let mut best: Option<(Rational, Vec<usize>)> = None;
    for s in 0..n.saturating_sub(1) {
        if let Some((b, _)) = &best {
            if Rational::new(s as u64, (n - s) as u64) >= *b {
                break;
            }
        }
        let mut combo: Vec<usize> = (0..s).collect();
        loop {
            let set = VertexSet::from(combo.clone());
            let c = g.count_components_without(&set);
            if c >= 2 {
                let r = Rational::new(s as u64, c as u64);
                if best.as_ref().is_none_or(|(b, _)| r < *b) {
                    best = Some((r, combo.clone()));
                }
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    let (r, w) = best.expect("non-complete graph has a cutset");
    ToughnessResult { value: Toughness::Finite(r), witness: Some(VertexSet::from(w)) }
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn is_t_tough(g: &Graph, t: Rational) -> bool {
    toughness_exact(g).value.at_least(t)
}

/// An inclusion-maximal tough-set.
///
/// Starting from the witness of [`toughness_exact`], repeatedly looks for a
/// component `R` of `G - S` and a cutset `Q` of `R` with
/// `|Q| = τ·(c(R - Q) - 1)`; exactly such `Q` extend `S` to a larger
/// tough-set, and a superset of `S` is a tough-set only if every component
/// it touches admits one. Components are scanned by minimum vertex and the
/// smallest such `Q` is taken.
pub fn maximal_tough_set(g: &Graph) -> Result<VertexSet, ToughnessError> {
    if g.is_complete() {
        return Err(ToughnessError::Complete);
    }
    if !g.is_connected() {
        return Err(ToughnessError::Disconnected);
    }
    let res = toughness_exact(g);
    let t = res.value.finite().expect("non-complete");
    let mut s = res.witness.expect("finite toughness has a witness");
    'grow: loop {
        for comp in g.components_without(&s) {
            if comp.len() < 3 {
                continue;
            }
            let sub = g.induced_subgraph(&comp);
            let prof = component_profile(&sub).ok_or(ToughnessError::TooLarge(sub.n()))?;
            for q in 1..sub.n() {
                let c = prof.max_components(q);
                if c >= 2 && Rational::new(q as u64, (c - 1) as u64) == t {
                    let ext = prof.witness(q).map(|v| comp.as_slice()[v]);
                    s = s.union(&ext);
                    continue 'grow;
                }
            }
        }
        return Ok(s);
    }
}

/// `c(G, S, X)`: components of `G - S` with a neighbour in `X`.
pub fn adjacency_count(g: &Graph, s: &VertexSet, x: &VertexSet) -> Result<usize, ToughnessError> {
    if !x.is_subset(s) {
        return Err(ToughnessError::NotSubset(x.clone()));
    }
    Ok(g.components_without(s)
        .iter()
        .filter(|comp| comp.iter().any(|v| x.iter().any(|u| g.has_edge(u, v))))
        .count())
}

/// Greedy deletion: drop the least vertex whose removal keeps a cutset, until
/// none can be dropped. A cutset from which no single vertex can be dropped
/// is inclusion-minimal: each of its vertices touches every component.
pub fn minimal_cutset_within(g: &Graph, s: &VertexSet) -> Result<VertexSet, ToughnessError> {
    if !g.is_cutset(s) {
        return Err(ToughnessError::NotCutset(s.clone()));
    }
    let mut cur = s.clone();
    'shrink: loop {
        for v in cur.clone().iter() {
            let mut smaller = cur.clone();
            smaller.remove(v);
            if g.is_cutset(&smaller) {
                cur = smaller;
                continue 'shrink;
            }
        }
        return Ok(cur);
    }
}

pub fn is_minimal_cutset(g: &Graph, s: &VertexSet) -> bool {
    g.is_cutset(s)
        && s.iter().all(|v| {
            let mut smaller = s.clone();
            smaller.remove(v);
            !g.is_cutset(&smaller)
        })
}

/// Builds `(U, X, Y)` for a non-minimal cutset `s` of a connected cograph
/// whose vertices each touch at least two components of `G - s`.
///
/// Peel a minimal cutset `U₀ ⊆ S`, move to the nontrivial component `G₁` of
/// `G - U₀` meeting `S`, and either stop (when `S ∩ V(G₁)` is a minimal
/// cutset of `G₁`) or recurse into `G₁`, accumulating `U`.
pub fn find_tripartite_witness(g: &Graph, s: &VertexSet) -> Result<TripartiteWitness, ToughnessError> {
    if !g.is_connected() {
        return Err(ToughnessError::Disconnected);
    }
    if !g.is_cutset(s) {
        return Err(ToughnessError::NotCutset(s.clone()));
    }
    if is_minimal_cutset(g, s) {
        return Err(ToughnessError::AlreadyMinimal(s.clone()));
    }
    check_attachment(g, s)?;
    let w = tripartite_step(g, s)?;
    if !w.verify(g, s) {
        return Err(ToughnessError::Internal(format!("tripartite witness {w:?} fails verification")));
    }
    Ok(w)
}

/// Structural preconditions on a cutset: each vertex touches two or more
/// components and saturates the components it touches.
fn check_attachment(g: &Graph, s: &VertexSet) -> Result<(), ToughnessError> {
    let comps = g.components_without(s);
    for u in s.iter() {
        let touched = comps.iter().filter(|c| c.iter().any(|v| g.has_edge(u, v))).count();
        if touched < 2 {
            return Err(ToughnessError::LowAttachment(u));
        }
    }
    if !neighbor_saturation_check(g, s) {
        return Err(ToughnessError::Saturation(s.clone()));
    }
    Ok(())
}

fn tripartite_step(g: &Graph, s: &VertexSet) -> Result<TripartiteWitness, ToughnessError> {
    let u0 = minimal_cutset_within(g, s)?;
    let rest = s.difference(&u0);
    let anchor = rest
        .first()
        .ok_or_else(|| ToughnessError::Internal("peeled cutset left nothing of S".into()))?;
    let g1 = g
        .components_without(&u0)
        .into_iter()
        .find(|c| c.contains(anchor))
        .expect("anchor lies in some component");
    if g1.len() < 2 {
        return Err(ToughnessError::Internal(format!("component of {anchor} in G - U0 is trivial")));
    }
    let sub = g.induced_subgraph(&g1);
    let back = |v: usize| g1.as_slice()[v];
    // ids of S ∩ V(G1) inside `sub`
    let s1: VertexSet = g1.iter().enumerate().filter(|&(_, v)| s.contains(v)).map(|(i, _)| i).collect();
    if is_minimal_cutset(&sub, &s1) {
        let y = s1.complement(sub.n());
        return Ok(TripartiteWitness { u_set: u0, x_set: s1.map(back), y_set: y.map(back) });
    }
    if !sub.is_cutset(&s1) {
        return Err(ToughnessError::Internal("S ∩ V(G1) is not a cutset of G1".into()));
    }
    let inner = tripartite_step(&sub, &s1)?;
    Ok(TripartiteWitness {
        u_set: u0.union(&inner.u_set.map(back)),
        x_set: inner.x_set.map(back),
        y_set: inner.y_set.map(back),
    })
}

/// Outcome of [`check_contraction_toughness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContractionToughness {
    /// `R` is `1/⌈1/τ(G)⌉`-tough.
    pub component_tough: bool,
    /// `G` with `R` contracted is `τ(G)`-tough.
    pub contracted_tough: bool,
}

/// For a maximal tough-set `s` of `g` (with `τ(g) ≤ 1`) and a component `r`
/// of `g - s`, checks the two toughness consequences the SBEP induction
/// relies on.
pub fn check_contraction_toughness(
    g: &Graph,
    s: &VertexSet,
    r: &VertexSet,
) -> Result<ContractionToughness, ToughnessError> {
    let t = toughness_exact(g).value.finite().ok_or(ToughnessError::Complete)?;
    if !g.is_cutset(s) {
        return Err(ToughnessError::NotCutset(s.clone()));
    }
    let k = t.ceil_recip().ok_or(ToughnessError::Disconnected)?;
    let component_tough = is_t_tough(&g.induced_subgraph(r), Rational::new(1, k));
    let contracted = g
        .contract(r)
        .map_err(|e| ToughnessError::Internal(e.to_string()))?;
    let contracted_tough = is_t_tough(&contracted.graph, t);
    Ok(ContractionToughness { component_tough, contracted_tough })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(p: usize) -> Graph {
        // ((2p-2)K1 ∪ K_{1,2}) + K_p; the K_p occupies the last p ids
        Graph::empty(2 * p - 2)
            .disjoint_union(&Graph::complete_bipartite(1, 2))
            .join(&Graph::complete(p))
    }

    #[test]
    fn clique_join_independent_set() {
        let g = Graph::complete(2).join(&Graph::empty(3));
        let r = toughness_exact(&g);
        assert_eq!(r.value, Toughness::Finite(Rational::new(2, 3)));
        assert!(r.witness_is_consistent(&g));
    }

    #[test]
    fn clique_join_path_family() {
        let g = family(2);
        let r = toughness_exact(&g);
        assert_eq!(r.value, Toughness::Finite(Rational::new(2, 3)));
        assert_eq!(r.witness, Some(VertexSet::from([5, 6])));
        assert_eq!(maximal_tough_set(&g).unwrap(), VertexSet::from([5, 6]));
    }

    #[test]
    fn small_examples() {
        assert_eq!(toughness_exact(&Graph::complete(4)).value, Toughness::Infinite);
        let p3 = toughness_exact(&Graph::path(3));
        assert_eq!(p3.value, Toughness::Finite(Rational::new(1, 2)));
        assert_eq!(p3.witness, Some(VertexSet::from([1])));
        assert_eq!(toughness_exact(&Graph::empty(2)).value, Toughness::Finite(Rational::integer(0)));
    }

    #[test]
    fn search_agrees_on_non_cographs() {
        let c5 = toughness_search(&Graph::cycle(5));
        assert_eq!(c5.value, Toughness::Finite(Rational::integer(1)));
        assert_eq!(c5.witness, Some(VertexSet::from([0, 2])));
        let p4 = toughness_exact(&Graph::path(4));
        assert_eq!(p4.value, Toughness::Finite(Rational::new(1, 2)));
    }

    #[test]
    fn t_tough_examples() {
        assert!(is_t_tough(&Graph::cycle(4), Rational::integer(1)));
        assert!(is_t_tough(&Graph::path(3), Rational::new(1, 2)));
        assert!(!is_t_tough(&Graph::path(3), Rational::new(2, 3)));
        assert!(is_t_tough(&Graph::complete(2).join(&Graph::empty(4)), Rational::new(1, 2)));
    }

    #[test]
    fn maximal_tough_set_examples() {
        assert_eq!(maximal_tough_set(&Graph::path(3)).unwrap(), VertexSet::from([1]));
        let c4 = maximal_tough_set(&Graph::cycle(4)).unwrap();
        assert!(c4 == VertexSet::from([0, 2]) || c4 == VertexSet::from([1, 3]));
        assert_eq!(maximal_tough_set(&Graph::complete(3)), Err(ToughnessError::Complete));
        assert_eq!(maximal_tough_set(&Graph::empty(3)), Err(ToughnessError::Disconnected));
    }

    #[test]
    fn maximal_tough_set_extends_through_a_component() {
        // K1 + (K1 ∪ K_{1,3}): the apex alone gives 1/2, and adding the star
        // centre gives 2/4, so the maximal tough-set is {apex, centre}.
        let g = Graph::complete(1).join(&Graph::empty(1).disjoint_union(&Graph::complete_bipartite(1, 3)));
        assert_eq!(toughness_exact(&g).value, Toughness::Finite(Rational::new(1, 2)));
        assert_eq!(maximal_tough_set(&g).unwrap(), VertexSet::from([0, 2]));
        // K1 + (2K1 ∪ C4): apex gives 1/3; apex plus an opposite pair gives
        // 3/4, so the apex alone is maximal.
        let h = Graph::complete(1).join(&Graph::empty(2).disjoint_union(&Graph::cycle(4)));
        assert_eq!(maximal_tough_set(&h).unwrap(), VertexSet::from([0]));
    }

    #[test]
    fn adjacency_counts() {
        let p3 = Graph::path(3);
        let s = VertexSet::from([1]);
        assert_eq!(adjacency_count(&p3, &s, &s), Ok(2));
        let g = Graph::complete(2).join(&Graph::empty(4));
        assert_eq!(adjacency_count(&g, &VertexSet::from([0, 1]), &VertexSet::from([0])), Ok(4));
        assert!(matches!(adjacency_count(&p3, &s, &VertexSet::from([0])), Err(ToughnessError::NotSubset(_))));
    }

    #[test]
    fn minimal_cutsets() {
        let p3 = Graph::path(3);
        assert_eq!(minimal_cutset_within(&p3, &VertexSet::from([1])).unwrap(), VertexSet::from([1]));
        // P4: {1,2} -> dropping 1 leaves {2}, still a cutset
        assert_eq!(minimal_cutset_within(&Graph::path(4), &VertexSet::from([1, 2])).unwrap(), VertexSet::from([2]));
        let c6 = minimal_cutset_within(&Graph::cycle(6), &VertexSet::from([0, 2, 3])).unwrap();
        assert_eq!(c6, VertexSet::from([0, 3]));
        assert!(matches!(minimal_cutset_within(&p3, &VertexSet::from([0])), Err(ToughnessError::NotCutset(_))));
    }

    #[test]
    fn tripartite_depth_zero() {
        // K1 + (K1 ∪ (K1 + 2K1)): S = {apex, inner centre} is a tough-set
        // shape that is not minimal; U0 = {apex}.
        let inner = Graph::complete(1).join(&Graph::empty(2));
        let g = Graph::complete(1).join(&Graph::empty(1).disjoint_union(&inner));
        // ids: 0 apex, 1 isolated, 2 centre, 3,4 leaves
        let s = VertexSet::from([0, 2]);
        let w = find_tripartite_witness(&g, &s).unwrap();
        assert_eq!(w.u_set, VertexSet::from([0]));
        assert_eq!(w.x_set, VertexSet::from([2]));
        assert_eq!(w.y_set, VertexSet::from([3, 4]));
        assert!(w.verify(&g, &s));
    }

    #[test]
    fn tripartite_rejects_minimal() {
        let g = Graph::complete(2).join(&Graph::empty(3));
        assert!(matches!(
            find_tripartite_witness(&g, &VertexSet::from([0, 1])),
            Err(ToughnessError::AlreadyMinimal(_))
        ));
    }

    #[test]
    fn contraction_family() {
        for p in 2..=4 {
            let g = family(p);
            let s = maximal_tough_set(&g).unwrap();
            let n = g.n();
            assert_eq!(s, VertexSet::from((n - p..n).collect::<Vec<_>>()));
            let r = VertexSet::from([2 * p - 2, 2 * p - 1, 2 * p]);
            let sub = g.induced_subgraph(&r);
            assert!(is_t_tough(&sub, Rational::new(1, 2)));
            assert!(!is_t_tough(&sub, Rational::new(p as u64, 2 * p as u64 - 1)));
            let check = check_contraction_toughness(&g, &s, &r).unwrap();
            assert!(check.component_tough && check.contracted_tough);
        }
    }

    #[test]
    fn single_vertex_component_contraction() {
        let g = Graph::path(3);
        let s = VertexSet::from([1]);
        let check = check_contraction_toughness(&g, &s, &VertexSet::from([0])).unwrap();
        assert!(check.component_tough && check.contracted_tough);
    }

    #[test]
    fn json_shape() {
        let r = toughness_exact(&Graph::path(3));
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"toughness":"1/2","tough_set":[1]}"#);
        let inf = toughness_exact(&Graph::complete(3));
        assert_eq!(serde_json::to_string(&inf).unwrap(), r#"{"toughness":"inf","tough_set":null}"#);
    }
}
