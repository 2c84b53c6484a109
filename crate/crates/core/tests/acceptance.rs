//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test --test acceptance`.

use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use cotough::catalog::{all_cographs, random_cographs, Catalog};
use cotough::cograph::{self, Cotree};
use cotough::graph::io::{parse_graph, Format};
use cotough::oracle::{
    oracle_hamiltonian, oracle_k_walk, oracle_prism_hamiltonian, oracle_toughness, HamKind,
};
use cotough::prism_walks::{
    cograph_ham_cycle, find_k_walk, prism_cycle_from_sbep, two_walk_from_prism_cycle, uses_vertical_edges,
    validate_k_walk, validate_prism_cycle, WalkOutcome,
};
use cotough::sbep::{validate_sbep, SbepBuilder, SbepOutcome, SbepStats};
use cotough::toughness::{is_t_tough, maximal_tough_set, toughness_exact, Toughness};
use cotough::{Graph, Rational, VertexSet};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

/// SBEP statistics gathered by every sweep that builds SBEP subgraphs.
static STATS: Mutex<SbepStats> = Mutex::new(SbepStats {
    hamiltonian_base: 0,
    contraction_case: 0,
    bipartite_case: 0,
    tripartite_case: 0,
    combines: 0,
    attachment_checks: 0,
    subset_checks: 0,
    toughness_checks: 0,
});
static SBEP_BUILDS: Mutex<(usize, usize)> = Mutex::new((0, 0));

fn half() -> Rational {
    Rational::new(1, 2)
}

fn connected(cat: &Catalog, ns: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    ns.flat_map(|n| cat.connected(n).iter().map(Cotree::realize).collect::<Vec<_>>()).collect()
}

/// Builds a spanning SBEP subgraph and records the statistics.
fn build_sbep(g: &Graph) -> Result<SbepOutcome, String> {
    let mut b = SbepBuilder::with_subset_check_limit(16);
    let out = b.build(g);
    *STATS.lock().unwrap() += b.stats();
    let mut builds = SBEP_BUILDS.lock().unwrap();
    builds.0 += 1;
    if out.is_err() {
        builds.1 += 1;
    }
    out.map_err(|e| format!("spanning_sbep failed on {}: {e}", describe(g)))
}

fn describe(g: &Graph) -> String {
    cotough::graph::io::emit_graph(g, cotough::graph::io::EmitFormat::Graph6).trim().to_string()
}

fn first_error(errors: Vec<String>, total: usize) -> Outcome {
    match errors.into_iter().next() {
        None => Ok(format!("{total} graphs")),
        Some(e) => Err(e),
    }
}

fn criterion_1(cat: &Catalog) -> Outcome {
    let graphs = connected(cat, 2..=9);
    let errors: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| -> Option<String> {
            let check = || -> Result<(), String> {
                let tau = toughness_exact(g);
                let tough = tau.value.at_least(half());
                let sbep = match build_sbep(g)? {
                    SbepOutcome::Spanning(s) => {
                        if !validate_sbep(g, &s) || !s.is_spanning(g) {
                            return Err("invalid SBEP".into());
                        }
                        Some(s)
                    }
                    SbepOutcome::NotTough(r) => {
                        if !r.witness_is_consistent(g) {
                            return Err("inconsistent not-tough witness".into());
                        }
                        None
                    }
                };
                let prism = match &sbep {
                    Some(s) => {
                        let c = prism_cycle_from_sbep(g, s).map_err(|e| e.to_string())?;
                        if !validate_prism_cycle(g, &c) || !validate_k_walk(g, &two_walk_from_prism_cycle(&c)) {
                            return Err("invalid prism cycle or 2-walk".into());
                        }
                        true
                    }
                    None => false,
                };
                let oracle = oracle_prism_hamiltonian(g).map_err(|e| e.to_string())?.holds;
                if sbep.is_some() == prism && prism == oracle && oracle == tough {
                    Ok(())
                } else {
                    Err(format!("sbep={} prism={prism} oracle={oracle} half-tough={tough}", sbep.is_some()))
                }
            };
            check().err().map(|e| format!("{}: {e}", describe(g)))
        })
        .collect();
    first_error(errors, graphs.len())
}

fn criterion_2(cat: &Catalog) -> Outcome {
    let graphs = connected(cat, 1..=6);
    let cases: Vec<(&Graph, usize)> = graphs.iter().flat_map(|g| (1..=3).map(move |k| (g, k))).collect();
    let errors: Vec<String> = cases
        .par_iter()
        .filter_map(|&(g, k)| {
            let tough = toughness_exact(g).value.at_least(Rational::new(1, k as u64));
            let found = match find_k_walk(g, k) {
                Ok(WalkOutcome::Found(w)) => {
                    if !validate_k_walk(g, &w) {
                        return Some(format!("{} k={k}: invalid walk", describe(g)));
                    }
                    true
                }
                Ok(WalkOutcome::NotTough(_)) => false,
                Err(e) => return Some(format!("{} k={k}: {e}", describe(g))),
            };
            let oracle = match oracle_k_walk(g, k) {
                Ok(v) => v.holds,
                Err(e) => return Some(e.to_string()),
            };
            (!(found == tough && tough == oracle))
                .then(|| format!("{} k={k}: walk={found} tough={tough} oracle={oracle}", describe(g)))
        })
        .collect();
    first_error(errors, cases.len()).map(|s| s.replace("graphs", "graph/k pairs"))
}

fn criterion_3(cat: &Catalog) -> Outcome {
    let graphs = connected(cat, 3..=9);
    let errors: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let Some(tree) = cograph::cotree(g) else {
                return Some(format!("{}: not recognized", describe(g)));
            };
            let tough = toughness_exact(g).value.at_least(Rational::integer(1));
            let cycle = match cograph_ham_cycle(g, &tree) {
                Ok(c) => c,
                Err(e) => return Some(format!("{}: {e}", describe(g))),
            };
            let oracle = match oracle_hamiltonian(g, HamKind::Cycle) {
                Ok(v) => v.holds,
                Err(e) => return Some(e.to_string()),
            };
            if let Some(c) = &cycle {
                let ok = c.len() == g.n()
                    && c.iter().copied().collect::<VertexSet>().len() == g.n()
                    && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]));
                if !ok {
                    return Some(format!("{}: invalid cycle {c:?}", describe(g)));
                }
            }
            (!(cycle.is_some() == tough && tough == oracle))
                .then(|| format!("{}: cycle={} tough={tough} oracle={oracle}", describe(g), cycle.is_some()))
        })
        .collect();
    first_error(errors, graphs.len())
}

fn criterion_4() -> Outcome {
    let graphs: Vec<Graph> = (1..=6).flat_map(all_cographs).collect();
    let cases: Vec<(&Graph, usize)> = graphs.iter().flat_map(|g| (1..=3).map(move |k| (g, k))).collect();
    let errors: Vec<String> = cases
        .par_iter()
        .filter_map(|&(g, k)| {
            let product = g.lex_product_k(k).expect("k >= 1");
            let lhs = toughness_exact(&product).value;
            let rhs = toughness_exact(g).value.scale(k as u64);
            if lhs != rhs {
                return Some(format!("{} k={k}: {lhs} != {rhs}", describe(g)));
            }
            if product.n() <= 10 {
                let oracle = match oracle_toughness(&product) {
                    Ok(r) => r.value,
                    Err(e) => return Some(e.to_string()),
                };
                if oracle != lhs {
                    return Some(format!("{} k={k}: oracle {oracle} != {lhs}", describe(g)));
                }
            }
            None
        })
        .collect();
    first_error(errors, cases.len()).map(|s| s.replace("graphs", "graph/k pairs"))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for m in 1..=4u64 {
        for n in 2..=8u64 {
            let g = Graph::complete(m as usize).join(&Graph::empty(n as usize));
            let res = toughness_exact(&g);
            if res.value != Toughness::Finite(Rational::new(m, n)) || !res.witness_is_consistent(&g) {
                return Err(format!("K{m} + {n}K1: got {}", res.value));
            }
            if g.n() <= 10 && oracle_toughness(&g).map_err(|e| e.to_string())?.value != res.value {
                return Err(format!("K{m} + {n}K1: oracle disagrees"));
            }
            checked += 1;
        }
    }
    for p in 2..=4usize {
        let g = Graph::empty(2 * p - 2)
            .disjoint_union(&Graph::complete_bipartite(1, 2))
            .join(&Graph::complete(p));
        let t = Rational::new(p as u64, 2 * p as u64 - 1);
        let res = toughness_exact(&g);
        if res.value != Toughness::Finite(t) {
            return Err(format!("p={p}: toughness {}", res.value));
        }
        let clique: VertexSet = (g.n() - p..g.n()).collect();
        let s = maximal_tough_set(&g).map_err(|e| e.to_string())?;
        if s != clique {
            return Err(format!("p={p}: maximal tough-set {s}, expected {clique}"));
        }
        let r = Graph::complete_bipartite(1, 2);
        if is_t_tough(&r, t) || !is_t_tough(&r, half()) {
            return Err(format!("p={p}: component toughness bounds wrong"));
        }
        checked += 1;
    }
    Ok(format!("{checked} family members"))
}

fn load_g6(path: &str) -> Result<Vec<Graph>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| parse_graph(l, Format::Graph6).map_err(|e| format!("{path}: {e}")))
        .collect()
}

struct Chain {
    ham_path: bool,
    prism: bool,
    two_walk: bool,
}

fn chain(g: &Graph) -> Result<Chain, String> {
    let e = |e: cotough::oracle::OracleError| e.to_string();
    Ok(Chain {
        ham_path: oracle_hamiltonian(g, HamKind::Path).map_err(e)?.holds,
        prism: oracle_prism_hamiltonian(g).map_err(e)?.holds,
        two_walk: oracle_k_walk(g, 2).map_err(e)?.holds,
    })
}

fn criterion_6() -> Outcome {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");
    // prism-hamiltonicity needs two vertices, so K1 is left out
    let atlas: Vec<Graph> = load_g6(&format!("{dir}/atlas_n7.g6"))?.into_iter().filter(|g| g.n() >= 2).collect();
    let chains: Vec<Result<Chain, String>> = atlas.par_iter().map(chain).collect();
    let mut reversed = [0usize; 2];
    let mut first: [Option<String>; 2] = [None, None];
    for (g, c) in atlas.iter().zip(chains) {
        let c = c?;
        if (c.ham_path && !c.prism) || (c.prism && !c.two_walk) {
            return Err(format!("{}: implication broken", describe(g)));
        }
        for (i, hit) in [c.prism && !c.ham_path, c.two_walk && !c.prism].into_iter().enumerate() {
            if hit {
                reversed[i] += 1;
                first[i].get_or_insert_with(|| describe(g));
            }
        }
    }
    if reversed.contains(&0) {
        return Err(format!("sweep found no counterexample to a reversed implication: {reversed:?}"));
    }
    let fixtures = load_g6(&format!("{dir}/counterexamples.g6"))
        .map_err(|e| format!("{e}; sweep suggests {first:?}"))?;
    let [prism_not_path, walk_not_prism] = fixtures.as_slice() else {
        return Err("expected two stored counterexamples".into());
    };
    let a = chain(prism_not_path)?;
    let b = chain(walk_not_prism)?;
    if !(a.prism && !a.ham_path) || !(b.two_walk && !b.prism) {
        return Err("stored counterexamples no longer separate the properties".into());
    }
    Ok(format!(
        "{} graphs; {} prism-ham without ham-path, {} 2-walk without prism-ham",
        atlas.len(),
        reversed[0],
        reversed[1]
    ))
}

fn criterion_7() -> Outcome {
    let graphs = random_cographs(20_240_611, 10_000, 10..=20);
    let errors: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let check = || -> Result<(), String> {
                let tree = cograph::cotree(g).ok_or("not recognized")?;
                if !tree.realizes(g) {
                    return Err("cotree does not realize the graph".into());
                }
                let tau = toughness_exact(g);
                if !tau.witness_is_consistent(g) {
                    return Err("inconsistent tough-set".into());
                }
                match (build_sbep(g)?, tau.value.at_least(half())) {
                    (SbepOutcome::Spanning(s), true) => {
                        if !validate_sbep(g, &s) || !s.is_spanning(g) {
                            return Err("invalid SBEP".into());
                        }
                        let c = prism_cycle_from_sbep(g, &s).map_err(|e| e.to_string())?;
                        if !validate_prism_cycle(g, &c) || !uses_vertical_edges(&c, s.single_block_vertices().iter()) {
                            return Err("invalid prism cycle".into());
                        }
                        if !validate_k_walk(g, &two_walk_from_prism_cycle(&c)) {
                            return Err("invalid 2-walk".into());
                        }
                    }
                    (SbepOutcome::NotTough(_), false) => {}
                    (_, tough) => return Err(format!("SBEP outcome disagrees with half-toughness {tough}")),
                }
                let ham = cograph_ham_cycle(g, &tree).map_err(|e| e.to_string())?;
                if ham.is_some() != tau.value.at_least(Rational::integer(1)) {
                    return Err("hamiltonian cycle disagrees with 1-toughness".into());
                }
                if let Some(k) = tau.value.finite().and_then(|t| t.ceil_recip()).filter(|&k| k <= 3) {
                    match find_k_walk(g, k as usize).map_err(|e| e.to_string())? {
                        WalkOutcome::Found(w) if validate_k_walk(g, &w) => {}
                        _ => return Err(format!("no valid {k}-walk")),
                    }
                }
                Ok(())
            };
            check().err().map(|e| format!("{}: {e}", describe(g)))
        })
        .collect();
    first_error(errors, graphs.len())
}

fn criterion_8() -> Outcome {
    let stats = *STATS.lock().unwrap();
    let (builds, failures) = *SBEP_BUILDS.lock().unwrap();
    if failures > 0 {
        return Err(format!("{failures} of {builds} SBEP builds hit a violated invariant"));
    }
    let exercised = [
        ("tough-set attachment", stats.attachment_checks),
        ("tough-set subset bounds", stats.subset_checks),
        ("bipartite single-block property", stats.bipartite_case + stats.tripartite_case),
        ("block-count preservation", stats.combines),
        ("contraction", stats.contraction_case),
    ];
    if let Some((name, _)) = exercised.iter().find(|(_, c)| *c == 0) {
        return Err(format!("{name} never exercised"));
    }
    Ok(format!(
        "{builds} SBEP builds clean; {} attachment, {} subset, {} toughness checks; \
         {} contraction, {} bipartite, {} tripartite steps, {} combines",
        stats.attachment_checks,
        stats.subset_checks,
        stats.toughness_checks,
        stats.contraction_case,
        stats.bipartite_case,
        stats.tripartite_case,
        stats.combines
    ))
}

fn main() {
    let cat = Catalog::up_to(9);
    let criteria: Vec<Criterion> = vec![
        ("prism-hamiltonian / spanning SBEP / half-tough equivalence", Box::new(|| criterion_1(&cat))),
        ("spanning k-walk / 1/k-tough equivalence", Box::new(|| criterion_2(&cat))),
        ("hamiltonian / 1-tough equivalence", Box::new(|| criterion_3(&cat))),
        ("toughness of G[K_k] is k times toughness of G", Box::new(criterion_4)),
        ("example families", Box::new(criterion_5)),
        ("implication chain and stored counterexamples", Box::new(criterion_6)),
        ("random certificates pass independent validators", Box::new(criterion_7)),
        ("structural invariants across all sweeps", Box::new(criterion_8)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}; {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({detail}; {secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
