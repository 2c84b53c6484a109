//! `cotough` command-line front end. JSON reports go to stdout, diagnostics
//! to stderr.
//!
//! Exit codes: 0 property holds, 1 property fails (with witness), 2 I/O or
//! parse error, 3 precondition violated (input not P4-free), 4 a certificate
//! or oracle cross-check failed.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::catalog::{random_cographs, random_cotree, Catalog};
use crate::cograph::{self, Cotree, P4Witness, Recognition};
use crate::graph::io::{detect_format, emit_graph, parse_graph_with_warnings, EmitFormat, Format, ParseWarning};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{
    oracle_hamiltonian, oracle_k_walk, oracle_prism_hamiltonian, oracle_toughness, HamKind, HAMILTONIAN_LIMIT,
    PRISM_LIMIT,
};
use crate::prism_walks::{
    cograph_ham_cycle, find_k_walk, prism_cycle_from_sbep, two_walk_from_prism_cycle, uses_vertical_edges,
    validate_k_walk, validate_prism_cycle, KWalk, PrismCycle, WalkError, WalkOutcome,
};
use crate::rational::Rational;
use crate::sbep::{check_sbep, spanning_sbep, SbepError, SbepGraph, SbepOutcome};
use crate::toughness::{toughness_exact, Toughness, ToughnessResult};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser)]
#[command(name = "cotough", version, about = "Certified toughness, prism-hamiltonicity and spanning walks of P4-free graphs")]
struct Cli {
    /// Add wall time in milliseconds to every report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Graph file; `-` or absent reads stdin.
    path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    Toughness,
    Prism,
    KWalk,
    Ham,
}

#[derive(ValueEnum, Clone, Copy)]
enum Model {
    RandomCotree,
}

#[derive(Subcommand)]
enum Command {
    /// Cotree of a P4-free graph, or an induced P4.
    Recognize(Input),
    /// Exact toughness with an optimal tough-set.
    Toughness {
        #[command(flatten)]
        input: Input,
        /// Cross-check against exhaustive enumeration (up to 10 vertices).
        #[arg(long)]
        oracle: bool,
    },
    /// Prism-hamiltonian cycle via a spanning SBEP subgraph, or a tough-set
    /// showing toughness below 1/2.
    PrismHam {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        emit_sbep: bool,
        #[arg(long = "emit-2walk")]
        emit_2walk: bool,
        /// Re-run every validator and, size permitting, the oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Spanning closed walk visiting every vertex at most k times.
    KWalk {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long)]
        verify: bool,
    },
    /// Check a certificate (or a whole report) against a graph.
    Verify {
        #[command(flatten)]
        input: Input,
        /// JSON certificate file.
        #[arg(long)]
        cert: PathBuf,
    },
    /// Cross-check constructions against oracles on every connected cograph
    /// up to `nmax` vertices, plus seeded random ones.
    Sweep {
        #[arg(long, default_value_t = 7)]
        nmax: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Kind::Toughness, Kind::Prism, Kind::KWalk, Kind::Ham])]
        kinds: Vec<Kind>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random cographs added to the sweep.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 10)]
        random_min: usize,
        #[arg(long, default_value_t = 20)]
        random_max: usize,
    },
    /// Random cographs in graph6, one per line.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Only connected cographs.
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value_t = Model::RandomCotree)]
        model: Model,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleCheck {
    NotRequested,
    Agree,
    Disagree,
    SkippedSize,
}

/// One JSON object per run (or per graph of a sweep).
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub input_sha256: String,
    pub n: usize,
    /// Whether the decided property holds; absent for pure computations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    pub result: Value,
    pub witness: Option<Value>,
    /// Whether every validator accepted the witness, when asked.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    pub oracle_check: OracleCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

struct Loaded {
    graph: Graph,
    digest: String,
}

fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn load(input: &Input, stdin: &mut dyn Read, stderr: &mut dyn Write) -> Result<Loaded, Failure> {
    let mut bytes = Vec::new();
    match &input.path {
        Some(p) if p.as_os_str() != "-" => {
            bytes = std::fs::read(p).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", p.display())))?;
        }
        _ => {
            stdin.read_to_end(&mut bytes).map_err(|e| fail(EXIT_INPUT, format!("stdin: {e}")))?;
        }
    }
    let text = String::from_utf8(bytes.clone()).map_err(|_| fail(EXIT_INPUT, "input is not UTF-8"))?;
    let format = match input.format {
        InputFormat::Auto => detect_format(&text),
        InputFormat::Graph6 => Format::Graph6,
        InputFormat::EdgeList => Format::EdgeList,
    };
    let (graph, warnings) = parse_graph_with_warnings(&text, format).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
    for w in warnings {
        let ParseWarning::DuplicateEdge { line, u, v } = w;
        let _ = writeln!(stderr, "warning: line {line}: duplicate edge {u} {v} ignored");
    }
    Ok(Loaded { graph, digest: digest(&bytes) })
}

fn report(command: &'static str, l: &Loaded, result: Value) -> RunReport {
    RunReport {
        command,
        input_sha256: l.digest.clone(),
        n: l.graph.n(),
        holds: None,
        result,
        witness: None,
        verified: None,
        oracle_check: OracleCheck::NotRequested,
        wall_ms: None,
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("certificate types serialize")
}

fn not_cograph(command: &'static str, l: &Loaded, w: P4Witness) -> (RunReport, i32) {
    let mut r = report(command, l, json!({"error": "input is not P4-free"}));
    r.holds = Some(false);
    r.witness = Some(json!({"p4": w.0}));
    (r, EXIT_PRECONDITION)
}

fn agreement(ours: bool, oracle: Option<bool>) -> OracleCheck {
    match oracle {
        None => OracleCheck::SkippedSize,
        Some(o) if o == ours => OracleCheck::Agree,
        Some(_) => OracleCheck::Disagree,
    }
}

fn toughness_json(r: &ToughnessResult) -> Value {
    to_value(r)
}

fn cmd_recognize(l: &Loaded) -> (RunReport, i32) {
    match cograph::recognize(&l.graph) {
        Recognition::Cograph(t) => {
            let mut r = report("recognize", l, json!({"cograph": true, "cotree_text": t.to_string()}));
            r.holds = Some(true);
            r.witness = Some(json!({"cotree": to_value(&t)}));
            (r, EXIT_HOLDS)
        }
        Recognition::NotCograph(w) => {
            let mut r = report("recognize", l, json!({"cograph": false}));
            r.holds = Some(false);
            r.witness = Some(json!({"p4": w.0}));
            (r, EXIT_FAILS)
        }
    }
}

fn cmd_toughness(l: &Loaded, oracle: bool) -> Result<(RunReport, i32), Failure> {
    if l.graph.n() == 0 {
        return Err(fail(EXIT_INPUT, "toughness of the empty graph is undefined"));
    }
    let res = toughness_exact(&l.graph);
    let mut r = report("toughness", l, toughness_json(&res));
    r.witness = res.witness.as_ref().map(|s| json!({"tough_set": s}));
    let mut code = EXIT_HOLDS;
    if oracle {
        r.oracle_check = match oracle_toughness(&l.graph) {
            Ok(o) if o.value == res.value => OracleCheck::Agree,
            Ok(_) => OracleCheck::Disagree,
            Err(_) => OracleCheck::SkippedSize,
        };
        if r.oracle_check == OracleCheck::Disagree || !res.witness_is_consistent(&l.graph) {
            code = EXIT_VERIFY;
        }
    }
    Ok((r, code))
}

fn cmd_prism_ham(l: &Loaded, emit_sbep: bool, emit_2walk: bool, verify: bool) -> Result<(RunReport, i32), Failure> {
    let g = &l.graph;
    let outcome = match spanning_sbep(g) {
        Ok(o) => o,
        Err(SbepError::NotCograph(w)) => return Ok(not_cograph("prism-ham", l, w)),
        Err(SbepError::TooSmall(n)) => {
            let mut r = report("prism-ham", l, json!({"error": format!("needs at least two vertices, got {n}")}));
            r.holds = Some(false);
            return Ok((r, EXIT_PRECONDITION));
        }
        Err(e) => return Err(fail(EXIT_VERIFY, e.to_string())),
    };
    let tau = toughness_exact(g);
    match outcome {
        SbepOutcome::Spanning(s) => {
            let cycle = prism_cycle_from_sbep(g, &s).map_err(|e| fail(EXIT_VERIFY, e.to_string()))?;
            let walk = two_walk_from_prism_cycle(&cycle);
            let mut r = report("prism-ham", l, json!({"prism_hamiltonian": true, "toughness": tau.value.to_string()}));
            r.holds = Some(true);
            let mut witness = json!({"prism_cycle": to_value(&cycle)});
            if emit_sbep {
                witness["sbep"] = to_value(&s);
            }
            if emit_2walk {
                witness["two_walk"] = to_value(&walk);
            }
            r.witness = Some(witness);
            let mut code = EXIT_HOLDS;
            if verify {
                let ok = check_sbep(g, &s).is_ok()
                    && s.is_spanning(g)
                    && validate_prism_cycle(g, &cycle)
                    && uses_vertical_edges(&cycle, s.single_block_vertices().iter())
                    && validate_k_walk(g, &walk);
                r.verified = Some(ok);
                r.oracle_check = agreement(true, oracle_prism_hamiltonian(g).ok().map(|v| v.holds));
                if !ok || r.oracle_check == OracleCheck::Disagree {
                    code = EXIT_VERIFY;
                }
            }
            Ok((r, code))
        }
        SbepOutcome::NotTough(res) => {
            let mut r = report("prism-ham", l, json!({"prism_hamiltonian": false, "toughness": res.value.to_string()}));
            r.holds = Some(false);
            r.witness = Some(json!({"tough_set": res.witness}));
            let mut code = EXIT_FAILS;
            if verify {
                let ok = res.witness_is_consistent(g) && !res.value.at_least(Rational::new(1, 2));
                r.verified = Some(ok);
                r.oracle_check = agreement(false, oracle_prism_hamiltonian(g).ok().map(|v| v.holds));
                if !ok || r.oracle_check == OracleCheck::Disagree {
                    code = EXIT_VERIFY;
                }
            }
            Ok((r, code))
        }
    }
}

fn cmd_k_walk(l: &Loaded, k: usize, verify: bool) -> Result<(RunReport, i32), Failure> {
    let g = &l.graph;
    let oracle = |holds: bool| agreement(holds, oracle_k_walk(g, k).ok().map(|v| v.holds));
    let (mut r, holds, ok) = match find_k_walk(g, k) {
        Ok(WalkOutcome::Found(w)) => {
            let mut r = report("k-walk", l, json!({"k_walk": true, "k": k}));
            r.witness = Some(json!({"walk": to_value(&w)}));
            let ok = validate_k_walk(g, &w);
            (r, true, ok)
        }
        Ok(WalkOutcome::NotTough(res)) => {
            let mut r = report("k-walk", l, json!({"k_walk": false, "k": k, "toughness": res.value.to_string()}));
            r.witness = Some(json!({"tough_set": res.witness}));
            let ok = res.witness_is_consistent(g) && !res.value.at_least(Rational::new(1, k as u64));
            (r, false, ok)
        }
        Err(WalkError::Disconnected) => {
            // the empty set already separates the graph
            let mut r = report("k-walk", l, json!({"k_walk": false, "k": k, "toughness": "0/1"}));
            r.witness = Some(json!({"tough_set": []}));
            (r, false, true)
        }
        Err(WalkError::NotCograph(w)) => return Ok(not_cograph("k-walk", l, w)),
        Err(WalkError::Empty) => {
            let mut r = report("k-walk", l, json!({"error": "graph has no vertices"}));
            r.holds = Some(false);
            return Ok((r, EXIT_PRECONDITION));
        }
        Err(e) => return Err(fail(EXIT_VERIFY, e.to_string())),
    };
    r.holds = Some(holds);
    let mut code = if holds { EXIT_HOLDS } else { EXIT_FAILS };
    if verify {
        r.verified = Some(ok);
        r.oracle_check = oracle(holds);
        if !ok || r.oracle_check == OracleCheck::Disagree {
            code = EXIT_VERIFY;
        }
    }
    Ok((r, code))
}

/// Validates every recognized certificate in `cert` (a bare certificate, a
/// witness object, or a whole report).
fn cmd_verify(l: &Loaded, cert: &Value) -> Result<(RunReport, i32), Failure> {
    let g = &l.graph;
    let root = cert.get("witness").filter(|w| w.is_object()).unwrap_or(cert);
    let mut checks = serde_json::Map::new();
    let parse_err = |what: &str, e: serde_json::Error| fail(EXIT_INPUT, format!("{what}: {e}"));

    let sbep = root.get("sbep").or_else(|| root.get("blocks").map(|_| root));
    if let Some(v) = sbep {
        let s: SbepGraph = serde_json::from_value(v.clone()).map_err(|e| parse_err("sbep", e))?;
        let verdict = match check_sbep(g, &s) {
            Ok(()) if s.is_spanning(g) => json!(true),
            Ok(()) => json!("valid SBEP subgraph but not spanning"),
            Err(e) => json!(e),
        };
        checks.insert("sbep".into(), verdict);
    }
    let prism = root.get("prism_cycle").or_else(|| root.get("cycle").map(|_| root));
    if let Some(v) = prism {
        let c: PrismCycle = serde_json::from_value(v.clone()).map_err(|e| parse_err("prism_cycle", e))?;
        checks.insert("prism_cycle".into(), json!(validate_prism_cycle(g, &c)));
    }
    let walk = root
        .get("two_walk")
        .or_else(|| root.get("walk").filter(|w| w.is_object()))
        .or_else(|| root.get("walk").map(|_| root));
    if let Some(v) = walk {
        let w: KWalk = serde_json::from_value(v.clone()).map_err(|e| parse_err("walk", e))?;
        checks.insert("walk".into(), json!(validate_k_walk(g, &w)));
    }
    if let Some(v) = root.get("tough_set").filter(|v| !v.is_null()) {
        let s: VertexSet = serde_json::from_value(v.clone()).map_err(|e| parse_err("tough_set", e))?;
        let ok = s.iter().all(|v| v < g.n()) && {
            let c = g.count_components_without(&s);
            c >= 2 && toughness_exact(g).value == Toughness::Finite(Rational::new(s.len() as u64, c as u64))
        };
        checks.insert("tough_set".into(), json!(ok));
    }
    if let Some(v) = root.get("p4") {
        let w: P4Witness = serde_json::from_value(v.clone()).map_err(|e| parse_err("p4", e))?;
        checks.insert("p4".into(), json!(w.verify(g)));
    }
    if let Some(v) = root.get("cotree") {
        let t: Cotree = serde_json::from_value(v.clone()).map_err(|e| parse_err("cotree", e))?;
        checks.insert("cotree".into(), json!(t.realizes(g)));
    }
    if checks.is_empty() {
        return Err(fail(EXIT_INPUT, "no recognizable certificate in the JSON"));
    }
    let all = checks.values().all(|v| v == &json!(true));
    let mut r = report("verify", l, Value::Object(checks));
    r.holds = Some(all);
    r.verified = Some(all);
    Ok((r, if all { EXIT_HOLDS } else { EXIT_FAILS }))
}

#[derive(Serialize)]
struct KindCheck {
    holds: bool,
    certified: bool,
    oracle: OracleCheck,
}

impl KindCheck {
    fn clean(&self) -> bool {
        self.certified && self.oracle != OracleCheck::Disagree
    }
}

fn sweep_graph(g: &Graph, kinds: &[Kind]) -> (Value, bool) {
    let tau = toughness_exact(g);
    let mut checks = serde_json::Map::new();
    let mut clean = true;
    let mut push = |name: String, c: KindCheck| {
        clean &= c.clean();
        checks.insert(name, to_value(&c));
    };
    for kind in kinds {
        match kind {
            Kind::Toughness => {
                let oracle = oracle_toughness(g).ok().map(|o| o.value);
                push(
                    "toughness".into(),
                    KindCheck {
                        holds: true,
                        certified: tau.witness_is_consistent(g),
                        oracle: match oracle {
                            None => OracleCheck::SkippedSize,
                            Some(v) if v == tau.value => OracleCheck::Agree,
                            Some(_) => OracleCheck::Disagree,
                        },
                    },
                );
            }
            Kind::Prism if g.n() >= 2 => {
                let (holds, certified) = match spanning_sbep(g) {
                    Ok(SbepOutcome::Spanning(s)) => {
                        let ok = prism_cycle_from_sbep(g, &s)
                            .map(|c| validate_k_walk(g, &two_walk_from_prism_cycle(&c)))
                            .unwrap_or(false);
                        (true, ok && tau.value.at_least(Rational::new(1, 2)))
                    }
                    Ok(SbepOutcome::NotTough(r)) => (false, r.witness_is_consistent(g)),
                    Err(_) => (false, false),
                };
                let oracle = (g.n() <= PRISM_LIMIT).then(|| oracle_prism_hamiltonian(g).map(|v| v.holds).ok()).flatten();
                push("prism".into(), KindCheck { holds, certified, oracle: agreement(holds, oracle) });
            }
            Kind::Prism => {}
            Kind::KWalk => {
                for k in 1..=3usize {
                    let (holds, certified) = match find_k_walk(g, k) {
                        Ok(WalkOutcome::Found(w)) => (true, validate_k_walk(g, &w)),
                        Ok(WalkOutcome::NotTough(r)) => {
                            (false, !r.value.at_least(Rational::new(1, k as u64)) && r.witness_is_consistent(g))
                        }
                        Err(_) => (false, false),
                    };
                    let oracle = (g.n() * k <= HAMILTONIAN_LIMIT).then(|| oracle_k_walk(g, k).map(|v| v.holds).ok()).flatten();
                    push(format!("k_walk_{k}"), KindCheck { holds, certified, oracle: agreement(holds, oracle) });
                }
            }
            Kind::Ham => {
                let tree = cograph::cotree(g).expect("sweep graphs are cographs");
                let cycle = cograph_ham_cycle(g, &tree).ok().flatten();
                let holds = cycle.is_some();
                let certified = holds == (g.n() >= 3 && tau.value.at_least(Rational::integer(1)));
                let oracle = (g.n() <= HAMILTONIAN_LIMIT).then(|| oracle_hamiltonian(g, HamKind::Cycle).map(|v| v.holds).ok()).flatten();
                push("hamiltonian".into(), KindCheck { holds, certified, oracle: agreement(holds, oracle) });
            }
        }
    }
    (json!({"toughness": tau.value.to_string(), "checks": checks}), clean)
}

fn cmd_sweep(
    nmax: usize,
    kinds: &[Kind],
    seed: u64,
    random: usize,
    (rmin, rmax): (usize, usize),
    timing: bool,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    if rmin == 0 || rmin > rmax {
        return Err(fail(EXIT_INPUT, "need 1 <= random-min <= random-max"));
    }
    let cat = Catalog::up_to(nmax);
    let mut graphs: Vec<Graph> = (1..=nmax).flat_map(|n| cat.connected(n).iter().map(Cotree::realize)).collect();
    graphs.extend(random_cographs(seed, random, rmin..=rmax));
    let reports: Vec<(RunReport, bool)> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let start = Instant::now();
            let g6 = emit_graph(g, EmitFormat::Graph6);
            let (mut result, clean) = sweep_graph(g, kinds);
            result["index"] = json!(i);
            result["graph6"] = json!(g6.trim());
            let disagree = result["checks"]
                .as_object()
                .is_some_and(|m| m.values().any(|c| c["oracle"] == json!("disagree")));
            let any_agree = result["checks"]
                .as_object()
                .is_some_and(|m| m.values().any(|c| c["oracle"] == json!("agree")));
            let r = RunReport {
                command: "sweep",
                input_sha256: digest(g6.trim().as_bytes()),
                n: g.n(),
                holds: None,
                result,
                witness: None,
                verified: Some(clean),
                oracle_check: if disagree {
                    OracleCheck::Disagree
                } else if any_agree {
                    OracleCheck::Agree
                } else {
                    OracleCheck::SkippedSize
                },
                wall_ms: timing.then(|| start.elapsed().as_secs_f64() * 1e3),
            };
            (r, clean)
        })
        .collect();
    let mut discrepancies = 0;
    for (r, clean) in &reports {
        discrepancies += usize::from(!clean);
        writeln!(stdout, "{}", serde_json::to_string(r).expect("report serializes"))
            .map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
    }
    let summary = json!({"summary": {"graphs": reports.len(), "discrepancies": discrepancies,
        "kinds": kinds.iter().filter_map(|k| k.to_possible_value()).map(|v| v.get_name().to_string()).collect::<Vec<_>>(), "seed": seed}});
    writeln!(stdout, "{summary}").map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
    Ok(if discrepancies == 0 { EXIT_HOLDS } else { EXIT_VERIFY })
}

fn cmd_gen(n: usize, seed: u64, count: usize, connected: bool, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if n == 0 {
        return Err(fail(EXIT_INPUT, "n must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let join_root = connected || rng.gen_bool(0.5);
        let g = random_cotree(n, join_root, &mut rng).realize();
        writeln!(stdout, "{}", emit_graph(&g, EmitFormat::Graph6).trim_end()).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
    }
    Ok(EXIT_HOLDS)
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_HOLDS };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let start = Instant::now();
    let timing = cli.timing;
    let outcome: Result<i32, Failure> = (|| {
        let single = |(mut r, code): (RunReport, i32), stdout: &mut dyn Write| -> Result<i32, Failure> {
            r.wall_ms = timing.then(|| start.elapsed().as_secs_f64() * 1e3);
            let line = serde_json::to_string(&r).expect("report serializes");
            writeln!(stdout, "{line}").map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
            Ok(code)
        };
        match &cli.command {
            Command::Recognize(input) => {
                let l = load(input, stdin, stderr)?;
                single(cmd_recognize(&l), stdout)
            }
            Command::Toughness { input, oracle } => {
                let l = load(input, stdin, stderr)?;
                single(cmd_toughness(&l, *oracle)?, stdout)
            }
            Command::PrismHam { input, emit_sbep, emit_2walk, verify } => {
                let l = load(input, stdin, stderr)?;
                single(cmd_prism_ham(&l, *emit_sbep, *emit_2walk, *verify)?, stdout)
            }
            Command::KWalk { input, k, verify } => {
                let l = load(input, stdin, stderr)?;
                single(cmd_k_walk(&l, *k as usize, *verify)?, stdout)
            }
            Command::Verify { input, cert } => {
                let text = std::fs::read_to_string(cert).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", cert.display())))?;
                let value: Value = serde_json::from_str(&text).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", cert.display())))?;
                let l = load(input, stdin, stderr)?;
                single(cmd_verify(&l, &value)?, stdout)
            }
            Command::Sweep { nmax, kinds, seed, random, random_min, random_max } => {
                cmd_sweep(*nmax, kinds, *seed, *random, (*random_min, *random_max), timing, stdout)
            }
            Command::Gen { n, seed, count, connected, model: Model::RandomCotree } => {
                cmd_gen(*n, *seed, *count, *connected, stdout)
            }
        }
    })();
    match outcome {
        Ok(code) => {
            if code == EXIT_VERIFY {
                let _ = writeln!(stderr, "error: certificate or oracle cross-check failed");
            }
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
