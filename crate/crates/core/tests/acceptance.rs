//! One test per acceptance criterion. Each prints a single PASS/FAIL line;
//! run with `--nocapture` to see them.

mod common;

use common::{labeling_spectrum, random_connected, random_graph, random_labeling};
use parity_signed::graph::graph6::{parse_graph6_str, write_graph6};
use parity_signed::graph::{
    bridge_join, build_family, canonical_code, corona, enumerate_connected, enumerate_trees, Graph,
};
use parity_signed::parity::{all_negative_realizable, induce_signs, is_balanced, is_parity_realizable, Sign, SignedGraph};
use parity_signed::rna::{closed_form_rna, proof_labeling, rna_exact, rna_heuristic, sigma_spectrum};
use parity_signed::verify::{scan_enumerated, verify_theorems, THEOREM_IDS};
use parity_signed::{FamilySpec, DEFAULT_EXACT_LIMIT};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

const BUDGET_1: Duration = Duration::from_secs(5);
const BUDGET_2: Duration = Duration::from_secs(2);
const BUDGET_3: Duration = Duration::from_secs(60);
const BUDGET_4: Duration = Duration::from_secs(10);
const BUDGET_5: Duration = Duration::from_secs(120);
const BUDGET_6: Duration = Duration::from_secs(120);
const BUDGET_7: Duration = Duration::from_secs(60);

const BALANCE_PAIRS: usize = 1000;
const BALANCE_SEED: u64 = 4;
const HEURISTIC_GRAPHS: usize = 200;
const HEURISTIC_GRAPH_SEED: u64 = 7;
const HEURISTIC_SEED: u64 = 1;
const HEURISTIC_RESTARTS: usize = 32;
const VERIFY_MAX_N: usize = 6;

/// Prints the criterion line, then fails the test if the criterion failed.
fn report(id: u32, name: &str, failures: &[String], detail: String, elapsed: Duration, budget: Option<Duration>) {
    let mut problems = failures.to_vec();
    if let Some(b) = budget {
        if elapsed > b {
            problems.push(format!("took {:.2} s, budget {} s", elapsed.as_secs_f64(), b.as_secs()));
        }
    }
    let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
    let timing = match budget {
        Some(b) => format!("{:.2} s of {} s", elapsed.as_secs_f64(), b.as_secs()),
        None => format!("{:.2} s", elapsed.as_secs_f64()),
    };
    println!("criterion {id} [{name}]: {verdict} ({detail}; {timing})");
    for p in problems.iter().take(10) {
        println!("    {p}");
    }
    assert!(problems.is_empty(), "criterion {id} failed: {} problem(s)", problems.len());
}

/// Criterion-1 families with their values restated from the closed forms.
fn closed_form_cases() -> Vec<(FamilySpec, usize)> {
    let mut v = Vec::new();
    v.extend((2..=20).map(|n| (FamilySpec::Path(n), 1)));
    v.extend((3..=20).map(|n| (FamilySpec::Cycle(n), 2)));
    v.extend((1..=20).map(|k| (FamilySpec::Star(k), k.div_ceil(2))));
    v.extend((2..=16).map(|n| (FamilySpec::Complete(n), (n / 2) * n.div_ceil(2))));
    v
}

fn connected_up_to_six() -> Vec<Graph> {
    (1..=6).flat_map(|n| enumerate_connected(n).unwrap()).collect()
}

fn balance_pairs() -> Vec<(Graph, parity_signed::Labeling)> {
    let mut rng = ChaCha8Rng::seed_from_u64(BALANCE_SEED);
    (0..BALANCE_PAIRS)
        .map(|_| {
            let n = rng.gen_range(1..=16);
            let p = rng.gen_range(0.05..0.9);
            let g = random_graph(&mut rng, n, p);
            let f = random_labeling(&mut rng, n);
            (g, f)
        })
        .collect()
}

fn heuristic_graphs() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(HEURISTIC_GRAPH_SEED);
    (0..HEURISTIC_GRAPHS)
        .map(|_| {
            let n = rng.gen_range(2..=16);
            let p = rng.gen_range(0.0..0.6);
            random_connected(&mut rng, n, p)
        })
        .collect()
}

fn code(g: &Graph) -> u64 {
    canonical_code(g).unwrap()
}

#[test]
fn criterion_1_closed_forms() {
    let start = Instant::now();
    let cases = closed_form_cases();
    let mut failures = Vec::new();
    for (f, expected) in &cases {
        let g = build_family(f).unwrap();
        let got = rna_exact(&g).unwrap().value;
        if got != *expected {
            failures.push(format!("{f}: rna_exact {got}, expected {expected}"));
        }
        if closed_form_rna(f).unwrap() != *expected {
            failures.push(format!("{f}: closed_form_rna disagrees"));
        }
    }
    report(1, "closed forms", &failures, format!("{} family instances, exact equality", cases.len()), start.elapsed(), Some(BUDGET_1));
}

#[test]
fn criterion_2_proof_labelings() {
    let start = Instant::now();
    let cases = closed_form_cases();
    let mut failures = Vec::new();
    for (f, _) in &cases {
        let g = build_family(f).unwrap();
        let l = proof_labeling(f).unwrap();
        let neg = induce_signs(&g, &l).unwrap().negative_count();
        let want = closed_form_rna(f).unwrap();
        if neg != want {
            failures.push(format!("{f}: labeling {l} induces {neg} negative edges, closed form {want}"));
        }
    }
    report(2, "proof labelings", &failures, format!("{} family instances, exact equality", cases.len()), start.elapsed(), Some(BUDGET_2));
}

#[test]
fn criterion_3_oracle_equivalence() {
    let start = Instant::now();
    let graphs = connected_up_to_six();
    let mut failures = Vec::new();
    if graphs.len() != 143 {
        failures.push(format!("expected 143 connected graphs on at most 6 vertices, got {}", graphs.len()));
    }
    for g in &graphs {
        let oracle = *labeling_spectrum(g).first().unwrap();
        let exact = rna_exact(g).unwrap().value;
        if oracle != exact {
            failures.push(format!("{}: labeling oracle {oracle}, rna_exact {exact}", write_graph6(g).unwrap()));
        }
    }
    report(3, "oracle equivalence", &failures, format!("{} connected graphs, all n! labelings", graphs.len()), start.elapsed(), Some(BUDGET_3));
}

#[test]
fn criterion_4_universal_balance() {
    let start = Instant::now();
    let pairs = balance_pairs();
    let mut failures = Vec::new();
    for (g, f) in &pairs {
        let s = induce_signs(g, f).unwrap();
        let name = || format!("{} with {f}", write_graph6(g).unwrap());
        if is_balanced(&s).is_none() {
            failures.push(format!("{}: not balanced", name()));
            continue;
        }
        // parity classes as the coloring: negative exactly across classes
        let valid = g.edges().into_iter().all(|(u, v)| {
            let across = f.label(u) % 2 != f.label(v) % 2;
            (s.sign(u, v) == Some(Sign::Negative)) == across
        });
        if !valid {
            failures.push(format!("{}: parity classes are not a balance coloring", name()));
        }
    }
    report(4, "universal balance", &failures, format!("{} seeded pairs, n <= 16, zero failures required", pairs.len()), start.elapsed(), Some(BUDGET_4));
}

#[test]
fn criterion_5_theorem_suite() {
    let start = Instant::now();
    let checks = verify_theorems(VERIFY_MAX_N).unwrap();
    let mut failures = Vec::new();
    let ids: Vec<&str> = checks.iter().map(|c| c.id.as_str()).collect();
    if ids != THEOREM_IDS {
        failures.push(format!("unexpected check list {ids:?}"));
    }
    let find = |id: &str| checks.iter().find(|c| c.id == id).unwrap();
    // coverage the criterion names explicitly
    let coverage = [
        ("negc", 10, "cycles C_3..C_12"),
        ("tree_star", 24, "all trees with 2 <= n <= 7"),
        ("corona_cycle", 6, "C_n o K_1 up to n = 8"),
        ("corona_complete", 8, "K_n o K_1 up to n = 8"),
        ("positive_disconnected", 143, "connected graphs n <= 6 plus 2K_2"),
        ("subsigned", 1, "stored counterexample pair"),
    ];
    for (id, instances, what) in coverage {
        if find(id).instances != instances {
            failures.push(format!("{id}: expected {instances} instances ({what}), got {}", find(id).instances));
        }
    }
    if find("subsigned").witness.len() != 2 {
        failures.push("subsigned: counterexample pair missing".into());
    }
    for c in checks.iter().filter(|c| !c.passed()) {
        let w = &c.witness[0];
        let mut line = format!("{}: {} of {} instances fail; witness {} {}", c.id, c.failures, c.instances, w.graph6, w.note);
        // re-check the witness through the public operations
        if let Some(signs) = &w.signs {
            let g = parse_graph6_str(&w.graph6).unwrap();
            let s = SignedGraph::from_sign_str(g, signs).unwrap();
            line.push_str(&format!("; re-check: realizable = {}", is_parity_realizable(&s).is_some()));
        }
        failures.push(line);
    }
    report(5, "theorem suite", &failures, format!("{} checks at max_n = {VERIFY_MAX_N}", checks.len()), start.elapsed(), Some(BUDGET_5));
}

#[test]
fn criterion_6_conjecture_scan() {
    let start = Instant::now();
    let scan = scan_enumerated(6, DEFAULT_EXACT_LIMIT).unwrap();
    let s = &scan.summary;
    let mut failures = Vec::new();
    let complete: BTreeSet<u64> = s.complete.iter().map(|g| code(&parse_graph6_str(g).unwrap())).collect();
    let odd_star: BTreeSet<u64> = s.odd_star.iter().map(|g| code(&parse_graph6_str(g).unwrap())).collect();
    for n in 1..=6 {
        if !complete.contains(&code(&build_family(&FamilySpec::Complete(n)).unwrap())) {
            failures.push(format!("K_{n} not in bucket complete"));
        }
    }
    for k in [1, 3, 5] {
        if !odd_star.contains(&code(&build_family(&FamilySpec::Star(k)).unwrap())) {
            failures.push(format!("K_1,{k} not in bucket odd_star"));
        }
    }
    for r in &s.other {
        let g = parse_graph6_str(&r.graph6).unwrap();
        let oracle: Vec<usize> = labeling_spectrum(&g).into_iter().collect();
        if oracle != r.spectrum.values || oracle.len() != 1 {
            failures.push(format!("{}: reported spectrum {:?}, labeling oracle {oracle:?}", r.graph6, r.spectrum.values));
        }
    }
    let others: Vec<&str> = s.other.iter().map(|r| r.graph6.as_str()).collect();
    report(
        6,
        "conjecture scan",
        &failures,
        format!("{} graphs, {} singletons, other bucket {:?}", s.scanned, s.singletons, others),
        start.elapsed(),
        Some(BUDGET_6),
    );
}

#[test]
fn criterion_7_heuristic_quality() {
    let start = Instant::now();
    let mut graphs: Vec<(String, Graph)> =
        closed_form_cases().iter().map(|(f, _)| (f.to_string(), build_family(f).unwrap())).collect();
    graphs.extend(heuristic_graphs().into_iter().map(|g| (write_graph6(&g).unwrap(), g)));
    let mut failures = Vec::new();
    for (name, g) in &graphs {
        let exact = rna_exact(g).unwrap().value;
        let h = rna_heuristic(g, HEURISTIC_SEED, HEURISTIC_RESTARTS).unwrap().value;
        let spectrum = sigma_spectrum(g).unwrap();
        if h != exact {
            failures.push(format!("{name}: heuristic {h}, exact {exact}"));
        }
        if h < exact || !spectrum.contains(h) {
            failures.push(format!("{name}: heuristic {h} outside [exact, spectrum]"));
        }
    }
    report(
        7,
        "heuristic quality",
        &failures,
        format!("{} instances, seed {HEURISTIC_SEED}, {HEURISTIC_RESTARTS} restarts", graphs.len()),
        start.elapsed(),
        Some(BUDGET_7),
    );
}

/// Every graph the other criteria construct.
fn all_criterion_graphs() -> Vec<Graph> {
    let mut v: Vec<Graph> = closed_form_cases().iter().map(|(f, _)| build_family(f).unwrap()).collect();
    let connected = connected_up_to_six();
    v.extend(connected.iter().cloned());
    v.extend(balance_pairs().into_iter().map(|(g, _)| g));
    v.extend(heuristic_graphs());
    v.extend((3..=2 * VERIFY_MAX_N).map(|n| build_family(&FamilySpec::Cycle(n)).unwrap()));
    v.extend((2..=VERIFY_MAX_N + 1).flat_map(|n| enumerate_trees(n).unwrap()));
    let k1 = Graph::empty(1).unwrap();
    for n in 1..=VERIFY_MAX_N + 2 {
        if n >= 3 {
            v.push(corona(&build_family(&FamilySpec::Cycle(n)).unwrap(), &k1).unwrap());
        }
        v.push(corona(&build_family(&FamilySpec::Complete(n)).unwrap(), &k1).unwrap());
    }
    let negative: Vec<&Graph> = connected.iter().filter(|g| g.n() >= 2 && all_negative_realizable(g)).collect();
    for a in &negative {
        for b in &negative {
            for u in 0..a.n() {
                for w in 0..b.n() {
                    v.push(bridge_join(a, u, b, w).unwrap());
                }
            }
        }
    }
    for c in verify_theorems(VERIFY_MAX_N).unwrap() {
        v.extend(c.witness.iter().map(|w| parse_graph6_str(&w.graph6).unwrap()));
    }
    v.extend(scan_enumerated(6, DEFAULT_EXACT_LIMIT).unwrap().records.iter().map(|r| parse_graph6_str(&r.graph6).unwrap()));
    v
}

#[test]
fn criterion_8_codec_round_trip() {
    let start = Instant::now();
    let graphs = all_criterion_graphs();
    let mut failures = Vec::new();
    for g in &graphs {
        let text = write_graph6(g).unwrap();
        match parse_graph6_str(&text) {
            Ok(back) if back == *g && write_graph6(&back).unwrap() == text => {}
            Ok(_) => failures.push(format!("{text}: round trip changed the graph")),
            Err(e) => failures.push(format!("{text}: {e}")),
        }
    }
    report(8, "graph6 codec", &failures, format!("{} graphs, bit-exact", graphs.len()), start.elapsed(), None);
}
