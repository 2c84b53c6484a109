//! Constructive results against the brute-force oracles on every graph with
//! at most seven vertices and on every connected cograph up to nine.

use cotough::catalog::{all_cographs, connected_cographs};
use cotough::cograph::{is_p4_free_oracle, recognize, Recognition};
use cotough::graph::io::{parse_graph, Format};
use cotough::oracle::{oracle_hamiltonian, oracle_k_walk, oracle_toughness, HamKind};
use cotough::prism_walks::{find_k_walk, WalkOutcome};
use cotough::toughness::{adjacency_count, maximal_tough_set, toughness_exact, Toughness};
use cotough::{Graph, Rational, VertexSet};

fn atlas() -> Vec<Graph> {
    let text = include_str!("data/atlas_n7.g6");
    text.lines().map(|l| parse_graph(l, Format::Graph6).unwrap()).collect()
}

#[test]
fn atlas_has_every_graph_up_to_seven_vertices() {
    let counts = atlas().iter().fold([0usize; 8], |mut c, g| {
        c[g.n()] += 1;
        c
    });
    assert_eq!(counts, [0, 1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn recognition_matches_quadruple_search() {
    for g in atlas() {
        match recognize(&g) {
            Recognition::Cograph(t) => {
                assert!(is_p4_free_oracle(&g));
                assert!(t.realizes(&g) && t.realize() == g);
            }
            Recognition::NotCograph(w) => {
                assert!(!is_p4_free_oracle(&g));
                assert!(w.verify(&g));
            }
        }
    }
}

#[test]
fn toughness_matches_exhaustive_enumeration() {
    for g in atlas() {
        let ours = toughness_exact(&g);
        let oracle = oracle_toughness(&g).unwrap();
        assert_eq!(ours.value, oracle.value, "{:?}", g.edges().collect::<Vec<_>>());
        assert!(ours.witness_is_consistent(&g));
    }
}

#[test]
fn hamiltonian_and_walks_force_toughness() {
    for g in atlas().iter().filter(|g| g.n() >= 3) {
        let tau = toughness_exact(g).value;
        if oracle_hamiltonian(g, HamKind::Cycle).unwrap().holds {
            assert!(tau.at_least(Rational::integer(1)));
        }
        for k in 1..=3usize {
            if g.n() * k <= 18 && oracle_k_walk(g, k).unwrap().holds {
                assert!(tau.at_least(Rational::new(1, k as u64)));
            }
        }
    }
}

#[test]
fn k_walk_success_matches_toughness_up_to_seven() {
    for n in 1..=7 {
        for g in connected_cographs(n) {
            let tau = toughness_exact(&g).value;
            for k in 1..=3usize {
                let found = matches!(find_k_walk(&g, k).unwrap(), WalkOutcome::Found(_));
                assert_eq!(found, tau.at_least(Rational::new(1, k as u64)), "n={n} k={k}");
            }
        }
    }
}

/// Subset bounds and two-component attachment for a tough-set `s` of a
/// graph with toughness `t <= 1`.
fn check_tough_set(g: &Graph, s: &VertexSet, t: Rational) {
    let comps = g.components_without(s);
    for u in s.iter() {
        let touched = comps.iter().filter(|c| c.iter().any(|v| g.has_edge(u, v))).count();
        assert!(touched >= 2, "vertex {u} of {s} touches {touched} components");
    }
    let members = s.as_slice();
    for mask in 1u32..(1 << members.len()) {
        let sub: VertexSet = (0..members.len()).filter(|i| mask >> i & 1 == 1).map(|i| members[i]).collect();
        let c = adjacency_count(g, s, &sub).unwrap() as u64;
        let need = (sub.len() as u64 * t.denom()).div_ceil(t.numer());
        let proper = sub.len() < s.len();
        assert!(c >= need + u64::from(proper), "subset {sub} of {s}: {c} components, need {need}");
    }
}

#[test]
fn tough_sets_satisfy_subset_bounds() {
    let mut checked = 0;
    for n in 3..=9 {
        for g in connected_cographs(n) {
            let res = toughness_exact(&g);
            let Toughness::Finite(t) = res.value else { continue };
            if t > Rational::integer(1) || t.is_zero() {
                continue;
            }
            check_tough_set(&g, res.witness.as_ref().unwrap(), t);
            check_tough_set(&g, &maximal_tough_set(&g).unwrap(), t);
            checked += 1;
        }
    }
    assert!(checked > 500);
}

#[test]
fn maximal_tough_set_cannot_grow() {
    for n in 3..=8 {
        for g in connected_cographs(n) {
            let Toughness::Finite(t) = toughness_exact(&g).value else { continue };
            let s = maximal_tough_set(&g).unwrap();
            // no superset obtained by adding one vertex is a tough-set, and by
            // exhaustion no larger superset either
            let rest: Vec<usize> = s.complement(g.n()).into_vec();
            for mask in 1u32..(1 << rest.len()) {
                let mut bigger = s.clone();
                for (i, &v) in rest.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        bigger.insert(v);
                    }
                }
                let c = g.count_components_without(&bigger);
                assert!(c < 2 || Rational::new(bigger.len() as u64, c as u64) != t, "{s} extends to {bigger}");
            }
        }
    }
}

#[test]
fn lexicographic_products_stay_p4_free() {
    for n in 1..=5 {
        for g in all_cographs(n) {
            for k in 1..=3 {
                assert!(is_p4_free_oracle(&g.lex_product_k(k).unwrap()));
            }
        }
    }
}
