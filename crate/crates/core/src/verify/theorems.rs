use super::{Status, TheoremCheck, Witness};
use crate::error::{Error, Result};
use crate::graph::graph6::write_graph6;
use crate::graph::{bridge_join, build_family, enumerate_connected, enumerate_trees, FamilySpec, Graph, MAX_ENUMERATION_N};
use crate::parity::{all_negative_realizable, induce_signs, is_balanced, is_parity_realizable, signs_from_bipartition, SignedGraph};
use crate::rna::{adhika, closed_form_rna, proof_labeling, rna_exact, sigma_spectrum};

/// Identifiers of the checks run by [`verify_theorems`], in report order.
pub const THEOREM_IDS: &[&str] = &[
    "negc",
    "nont",
    "subsigned",
    "balanced_cycle",
    "positive_disconnected",
    "inequalities",
    "path_prop",
    "cycle_prop",
    "star_prop",
    "complete_prop",
    "tree_star",
    "corona_cycle",
    "corona_complete",
    "bridge",
    "bridge_parity",
];

struct Tally {
    id: &'static str,
    statement: &'static str,
    scope: String,
    instances: usize,
    failures: usize,
    witness: Vec<Witness>,
}

impl Tally {
    fn new(id: &'static str, statement: &'static str, scope: impl Into<String>) -> Self {
        Tally { id, statement, scope: scope.into(), instances: 0, failures: 0, witness: Vec::new() }
    }

    /// Records one instance; the first failure keeps its witness.
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Result<Witness>) -> Result<()> {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_empty() {
                self.witness.push(witness()?);
            }
        }
        Ok(())
    }

    fn finish(self) -> TheoremCheck {
        TheoremCheck {
            id: self.id.to_string(),
            statement: self.statement.to_string(),
            scope: self.scope,
            status: if self.failures == 0 { Status::Pass } else { Status::Fail },
            instances: self.instances,
            failures: self.failures,
            witness: self.witness,
        }
    }
}

fn fam(spec: FamilySpec) -> Result<Graph> {
    build_family(&spec)
}

fn graph_witness(g: &Graph, note: String) -> Result<Witness> {
    Ok(Witness { graph6: write_graph6(g)?, note, ..Witness::default() })
}

fn signed_witness(s: &SignedGraph, note: String) -> Result<Witness> {
    Ok(Witness {
        graph6: write_graph6(s.graph())?,
        signs: Some(s.sign_string()),
        labeling: is_parity_realizable(s).map(|f| f.to_string()),
        note,
        ..Witness::default()
    })
}

fn connected_graphs(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(enumerate_connected(n)?);
    }
    Ok(out)
}

/// Runs every check in [`THEOREM_IDS`].
///
/// `max_n` (3..=6) scales the searches: exhaustive scans cover connected
/// graphs up to `max_n` vertices, cycles run to `C_{2 max_n}`, trees to
/// `max_n + 1` vertices and coronas to `n = max_n + 2`. The four family
/// propositions always cover paths and cycles to 20, stars to 20 leaves and
/// complete graphs to 16.
pub fn verify_theorems(max_n: usize) -> Result<Vec<TheoremCheck>> {
    if !(3..=MAX_ENUMERATION_N).contains(&max_n) {
        return Err(Error::invalid(format!(
            "max_n must lie in 3..={MAX_ENUMERATION_N}, got {max_n}"
        )));
    }
    type Check = fn(usize) -> Result<TheoremCheck>;
    let checks: [(&str, Check); 15] = [
        ("negc", negc),
        ("nont", nont),
        ("subsigned", subsigned),
        ("balanced_cycle", balanced_cycle),
        ("positive_disconnected", positive_disconnected),
        ("inequalities", inequalities),
        ("path_prop", |_| proposition("path_prop", "rna(P_n) = 1", (2..=20).map(FamilySpec::Path))),
        ("cycle_prop", |_| proposition("cycle_prop", "rna(C_n) = 2", (3..=20).map(FamilySpec::Cycle))),
        ("star_prop", |_| proposition("star_prop", "rna(K_{1,n}) = ceil(n/2)", (1..=20).map(FamilySpec::Star))),
        ("complete_prop", |_| {
            proposition("complete_prop", "rna(K_n) = floor(n/2) * ceil(n/2)", (2..=16).map(FamilySpec::Complete))
        }),
        ("tree_star", tree_star),
        ("corona_cycle", corona_cycle),
        ("corona_complete", corona_complete),
        ("bridge", bridge),
        ("bridge_parity", bridge_parity),
    ];
    use rayon::prelude::*;
    checks
        .par_iter()
        .map(|(id, check)| {
            check(max_n).map_err(|e| Error::Check { id: id.to_string(), source: Box::new(e) })
        })
        .collect()
}

fn negc(max_n: usize) -> Result<TheoremCheck> {
    let hi = 2 * max_n;
    let mut t = Tally::new(
        "negc",
        "the all-negative cycle C_n is a parity signed graph iff n is even",
        format!("C_n, 3 <= n <= {hi}"),
    );
    for n in 3..=hi {
        let g = fam(FamilySpec::Cycle(n))?;
        let realizable = all_negative_realizable(&g);
        t.record(realizable == (n % 2 == 0), || {
            signed_witness(
                &SignedGraph::all_negative(g.clone()),
                format!("all-negative C_{n}: realizable = {realizable}"),
            )
        })?;
    }
    Ok(t.finish())
}

fn nont(max_n: usize) -> Result<TheoremCheck> {
    let mut t = Tally::new(
        "nont",
        "every labeling of a connected graph on n >= 2 vertices induces a negative edge",
        format!("all connected graphs, 2 <= n <= {max_n}"),
    );
    for g in connected_graphs(2, max_n)? {
        let r = rna_exact(&g)?;
        t.record(r.value >= 1, || {
            Ok(Witness {
                odd_set: Some(r.witness.odd_vertices()),
                labeling: Some(r.witness.to_labeling().to_string()),
                ..graph_witness(&g, format!("labeling with {} negative edges", r.value))?
            })
        })?;
    }
    Ok(t.finish())
}

/// All-negative `C_4 ∘ K_1` is realizable while its connected induced
/// subgraph on a cycle vertex, its two cycle neighbors and its pendant (a
/// `K_{1,3}`) is not.
fn subsigned(_max_n: usize) -> Result<TheoremCheck> {
    let mut t = Tally::new(
        "subsigned",
        "a connected subsignedgraph of a homogeneous parity signed graph need not be a parity signed graph",
        "stored example: all-negative C_4 o K_1 and its induced K_{1,3}",
    );
    let parent = SignedGraph::all_negative(fam(FamilySpec::CoronaCycleK1(4))?);
    // vertex 0, cycle neighbors 1 and 3, pendant 4
    let sub_graph = parent.graph().induced(0b1_1011);
    let child = SignedGraph::all_negative(sub_graph.clone());
    let parent_ok = is_parity_realizable(&parent).is_some();
    let child_ok = is_parity_realizable(&child).is_some();
    let shape_ok = sub_graph.is_connected() && sub_graph.star_leaves() == Some(3);
    t.record(parent_ok && !child_ok && shape_ok, || {
        signed_witness(&child, format!("parent realizable = {parent_ok}, K_1,3 realizable = {child_ok}"))
    })?;
    let mut check = t.finish();
    if check.passed() {
        check.witness = vec![
            signed_witness(&parent, "all-negative C_4 o K_1: realizable".into())?,
            signed_witness(&child, "induced all-negative K_1,3 on vertices 0,1,3,4: not realizable".into())?,
        ];
    }
    Ok(check)
}

fn balanced_cycle(max_n: usize) -> Result<TheoremCheck> {
    let hi = 2 * max_n;
    let mut t = Tally::new(
        "balanced_cycle",
        "every parity signed cycle is balanced",
        format!("every balanced bipartition of C_n, 3 <= n <= {hi}"),
    );
    for n in 3..=hi {
        let g = fam(FamilySpec::Cycle(n))?;
        let spectrum = sigma_spectrum(&g)?;
        let odd_value = spectrum.values.iter().copied().find(|v| v % 2 == 1);
        t.record(odd_value.is_none(), || {
            graph_witness(&g, format!("C_{n} admits a labeling with {} negative edges", odd_value.unwrap()))
        })?;
        for odd in 0..1u64 << n {
            let Ok(b) = crate::parity::Bipartition::new(odd, n) else { continue };
            let s = signs_from_bipartition(&g, &b);
            t.record(is_balanced(&s).is_some(), || {
                Ok(Witness {
                    odd_set: Some(b.odd_vertices()),
                    ..signed_witness(&s, format!("unbalanced parity signature of C_{n}"))?
                })
            })?;
        }
    }
    Ok(t.finish())
}

fn positive_disconnected(max_n: usize) -> Result<TheoremCheck> {
    let mut t = Tally::new(
        "positive_disconnected",
        "an all-positive parity signed graph (with an edge) is not connected",
        format!("all connected graphs 2 <= n <= {max_n} are not all-positive realizable; 2K_2 is"),
    );
    for g in connected_graphs(2, max_n)? {
        let s = SignedGraph::all_positive(g);
        let found = is_parity_realizable(&s);
        t.record(found.is_none(), || signed_witness(&s, "connected all-positive signature realized".into()))?;
    }
    let two_k2 = SignedGraph::all_positive(Graph::from_edges(4, &[(0, 1), (2, 3)])?);
    let ok = is_parity_realizable(&two_k2)
        .map(|f| induce_signs(two_k2.graph(), &f).map(|s| s == two_k2))
        .transpose()?
        .unwrap_or(false);
    t.record(ok, || signed_witness(&two_k2, "all-positive 2K_2 not realized".into()))?;
    Ok(t.finish())
}

fn inequalities(max_n: usize) -> Result<TheoremCheck> {
    let mut t = Tally::new(
        "inequalities",
        "rna <= |E^-| and |E^+| <= adhika under every labeling; adhika = m - rna",
        format!("all connected graphs, 1 <= n <= {max_n}"),
    );
    for g in connected_graphs(1, max_n)? {
        let rna = rna_exact(&g)?.value;
        let plus = adhika(&g)?;
        let spectrum = sigma_spectrum(&g)?;
        let m = g.m();
        let ok = spectrum.min == rna
            && plus + rna == m
            && spectrum.values.iter().all(|&neg| rna <= neg && m - neg <= plus);
        t.record(ok, || {
            graph_witness(&g, format!("rna {rna}, adhika {plus}, spectrum {:?}", spectrum.values))
        })?;
    }
    Ok(t.finish())
}

fn proposition(
    id: &'static str,
    statement: &'static str,
    specs: impl Iterator<Item = FamilySpec> + Clone,
) -> Result<TheoremCheck> {
    let first = specs.clone().next().map(|s| s.to_string()).unwrap_or_default();
    let last = specs.clone().last().map(|s| s.to_string()).unwrap_or_default();
    let mut t = Tally::new(id, statement, format!("{first} ..= {last}; exact value and explicit labeling"));
    for spec in specs {
        let g = build_family(&spec)?;
        let expected = closed_form_rna(&spec)?;
        let exact = rna_exact(&g)?;
        let f = proof_labeling(&spec)?;
        let attained = induce_signs(&g, &f)?.negative_count();
        t.record(exact.value == expected && attained == expected, || {
            Ok(Witness {
                labeling: Some(f.to_string()),
                odd_set: Some(exact.witness.odd_vertices()),
                ..graph_witness(
                    &g,
                    format!("{spec}: closed form {expected}, exact {}, labeling attains {attained}", exact.value),
                )?
            })
        })?;
    }
    Ok(t.finish())
}

fn tree_star(max_n: usize) -> Result<TheoremCheck> {
    let hi = max_n + 1;
    let mut t = Tally::new(
        "tree_star",
        "for a tree, the negative-edge count is labeling-independent iff the tree is K_{1,n} with n odd",
        format!("all trees, 2 <= n <= {hi}"),
    );
    for n in 2..=hi {
        for g in enumerate_trees(n)? {
            let spectrum = sigma_spectrum(&g)?;
            let odd_star = g.star_leaves().is_some_and(|k| k % 2 == 1);
            t.record(spectrum.singleton == odd_star, || {
                graph_witness(&g, format!("odd star = {odd_star}, spectrum {:?}", spectrum.values))
            })?;
        }
    }
    Ok(t.finish())
}

fn corona_cycle(max_n: usize) -> Result<TheoremCheck> {
    let hi = max_n + 2;
    let mut t = Tally::new(
        "corona_cycle",
        "all-negative C_n o K_1 is a parity signed graph iff n is even",
        format!("3 <= n <= {hi}"),
    );
    for n in 3..=hi {
        let g = fam(FamilySpec::CoronaCycleK1(n))?;
        let realizable = all_negative_realizable(&g);
        t.record(realizable == (n % 2 == 0), || {
            signed_witness(&SignedGraph::all_negative(g.clone()), format!("C_{n} o K_1: realizable = {realizable}"))
        })?;
    }
    Ok(t.finish())
}

fn corona_complete(max_n: usize) -> Result<TheoremCheck> {
    let hi = max_n + 2;
    let mut t = Tally::new(
        "corona_complete",
        "all-negative K_n o K_1 is a parity signed graph iff n <= 2",
        format!("1 <= n <= {hi}"),
    );
    for n in 1..=hi {
        let g = fam(FamilySpec::CoronaCompleteK1(n))?;
        let realizable = all_negative_realizable(&g);
        t.record(realizable == (n <= 2), || {
            signed_witness(&SignedGraph::all_negative(g.clone()), format!("K_{n} o K_1: realizable = {realizable}"))
        })?;
    }
    Ok(t.finish())
}

/// Connected graphs with at least one edge whose all-negative signature is
/// realizable.
fn negative_parity_graphs(max_n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs(2, max_n)?.into_iter().filter(all_negative_realizable).collect())
}

/// `bridge_join` with the bridge signed `bridge_negative` and every other edge
/// negative.
fn bridged_signature(g1: &Graph, u: usize, g2: &Graph, v: usize, bridge_negative: bool) -> Result<SignedGraph> {
    let g = bridge_join(g1, u, g2, v)?;
    let bridge = (u, g1.n() + v);
    let signs: Vec<_> = g
        .edges()
        .into_iter()
        .map(|e| {
            if e == bridge && !bridge_negative {
                crate::parity::Sign::Positive
            } else {
                crate::parity::Sign::Negative
            }
        })
        .collect();
    SignedGraph::from_signs(g, &signs)
}

/// Visits every unordered pair of graphs, every attachment pair and both
/// bridge signs; `f` gets `(g1, g2, u, v, [positive bridge, negative bridge] realizable)`.
fn for_each_bridge(max_n: usize, mut f: impl FnMut(&Graph, &Graph, usize, usize, [&SignedGraph; 2], [bool; 2]) -> Result<()>) -> Result<()> {
    let graphs = negative_parity_graphs(max_n)?;
    for (i, g1) in graphs.iter().enumerate() {
        for g2 in &graphs[i..] {
            for u in 0..g1.n() {
                for v in 0..g2.n() {
                    let pos = bridged_signature(g1, u, g2, v, false)?;
                    let neg = bridged_signature(g1, u, g2, v, true)?;
                    let ok = [is_parity_realizable(&pos).is_some(), is_parity_realizable(&neg).is_some()];
                    f(g1, g2, u, v, [&pos, &neg], ok)?;
                }
            }
        }
    }
    Ok(())
}

fn bridge(max_n: usize) -> Result<TheoremCheck> {
    let mut t = Tally::new(
        "bridge",
        "two all-negative parity signed graphs joined by a bridge of either sign form a parity signed graph",
        format!(
            "every pair of connected all-negative-realizable graphs with 2 <= n <= {max_n}, every attachment pair, both bridge signs"
        ),
    );
    for_each_bridge(max_n, |g1, g2, u, v, signed, ok| {
        for (k, sign) in ["positive", "negative"].iter().enumerate() {
            t.record(ok[k], || {
                signed_witness(
                    signed[k],
                    format!(
                        "components of orders {} and {} joined by a {sign} bridge {u}-{}; no labeling induces this signature",
                        g1.n(),
                        g2.n(),
                        g1.n() + v
                    ),
                )
            })?;
        }
        Ok(())
    })?;
    Ok(t.finish())
}

/// The exact count of realizable bridge signs: both when either side has even
/// order, exactly one when both orders are odd (the bridge then fixes whether
/// the two larger color classes share a parity, and only one choice hits
/// `ceil(n/2)`).
fn bridge_parity(max_n: usize) -> Result<TheoremCheck> {
    let mut t = Tally::new(
        "bridge_parity",
        "for a bridge joining two all-negative parity signed graphs, both bridge signs are realizable if either side has even order, exactly one otherwise",
        format!("same instances as `bridge`, 2 <= n <= {max_n}"),
    );
    for_each_bridge(max_n, |g1, g2, u, v, signed, ok| {
        let expected = if g1.n() % 2 == 0 || g2.n() % 2 == 0 { 2 } else { 1 };
        let got = ok.iter().filter(|&&b| b).count();
        t.record(got == expected, || {
            signed_witness(
                signed[0],
                format!("orders {} and {}, bridge {u}-{}: {got} realizable signs, expected {expected}", g1.n(), g2.n(), g1.n() + v),
            )
        })
    })?;
    Ok(t.finish())
}
