//! Verification campaigns: one per bound, family or reduction. Each
//! campaign generates seeded instances, builds the construction, runs the
//! engines and the brute-force oracles, compares, and emits a report.
//!
//! Engine budget errors downgrade a record to inconclusive, never to fail:
//! a capped search is not a counterexample.

use std::time::Instant;

use automata_core::{Dfa, StateSet, Word};
use gadget_factory::{
    chromatic_rank_binary_gadget, chromatic_rank_gadget, digest_hex,
    independent_set_maxsync_binary_gadget, independent_set_maxsync_binary_wa_gadget,
    independent_set_maxsync_gadget, layered_subset_gadget, padding_maxsync_gadget,
    sat_careful_gadget, sat_intersection_gadget, sat_matrix_set, sat_reachability_gadget,
    sat_subset_sync_gadget, subset_binary_family, subset_large_alphabet_family,
    tight_rank_family, CnfFormula, Graph,
};
use matrix_semigroup::{is_triangular, positive_product_search, Orientation, ProductSearchOutcome};
use oracles::{max_independent_set_brute, sat_solve_brute};
use rand_chacha::ChaCha8Rng;
use sync_engines::{
    careful_shortest_word, greedy_rank_word_wa, intersection_nonempty, is_subset_reachable,
    is_synchronizing, max_sync_set, max_sync_set_unary, rank_of_automaton_exact, rank_of_subset,
    shortest_sync_word, subset_shortest_sync_word, Acceptor, Budget, EngineError, MaxSyncMode,
};

use crate::gen::{
    all_graphs, random_3cnf_with, random_cnf_with, random_dfa_with,
    random_connected_eulerian_with, random_graph_with, random_subset_with,
    random_weakly_acyclic_with, rng_from_seed,
};
use crate::report::{Record, Status, VerificationReport};

/// All campaign names with their default instance counts (grid-only
/// campaigns ignore the count).
pub const CAMPAIGNS: &[(&str, usize)] = &[
    ("bound-prop1", 500),
    ("family-tight", 0),
    ("family-fig1", 0),
    ("family-reviewer", 0),
    ("layered-subset", 200),
    ("padding-maxsync", 100),
    ("maxsync-alphabet", 300),
    ("maxsync-binary", 20),
    ("maxsync-binary-wa", 20),
    ("chromatic-rank", 100),
    ("sat-subset-sync", 300),
    ("sat-careful", 300),
    ("sat-intersection", 300),
    ("sat-reachability", 300),
    ("sat-positive-matrix", 300),
    ("sat-triangularity", 300),
    ("unary-maxsync", 500),
    ("eulerian-partition", 100),
    ("engine-oracle", 10000),
];

#[derive(Debug)]
pub enum CampaignError {
    Unknown(String),
}

impl std::fmt::Display for CampaignError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CampaignError::Unknown(name) => {
                write!(f, "unknown campaign {name:?}; available: ")?;
                let names: Vec<&str> = CAMPAIGNS.iter().map(|(n, _)| *n).collect();
                write!(f, "{}", names.join(", "))
            }
        }
    }
}

impl std::error::Error for CampaignError {}

/// Outcome of one instance check.
enum Check {
    Pass(String),
    Fail(String),
    Inconclusive(String),
}

impl Check {
    fn of_eq<T: PartialEq + std::fmt::Display>(expected: T, computed: T) -> Check {
        if expected == computed {
            Check::Pass(computed.to_string())
        } else {
            Check::Fail(computed.to_string())
        }
    }

    fn from_engine<T>(result: Result<T, EngineError>, f: impl FnOnce(T) -> Check) -> Check {
        match result {
            Ok(value) => f(value),
            Err(err) if err.is_budget() => Check::Inconclusive(err.to_string()),
            Err(err) => Check::Fail(format!("engine error: {err}")),
        }
    }
}

struct Runner {
    report: VerificationReport,
    budget: Budget,
}

impl Runner {
    fn new(name: &str, seed: u64) -> Self {
        Runner {
            report: VerificationReport::new(name, seed),
            // Sized for the largest constructions the campaigns build.
            budget: Budget::with_max_states(1 << 14),
        }
    }

    fn run(&mut self, digest: impl Into<String>, expected: impl Into<String>, check: impl FnOnce(&Budget) -> Check) {
        let start = Instant::now();
        let outcome = check(&self.budget);
        let micros = start.elapsed().as_micros();
        let (status, computed) = match outcome {
            Check::Pass(c) => (Status::Pass, c),
            Check::Fail(c) => (Status::Fail, c),
            Check::Inconclusive(c) => (Status::Inconclusive, c),
        };
        self.report.push(Record {
            digest: digest.into(),
            expected: expected.into(),
            computed,
            status,
            micros,
        });
    }

    fn finish(mut self) -> VerificationReport {
        self.report.finalize();
        self.report
    }
}

pub fn run_campaign(
    name: &str,
    seed: u64,
    count: Option<usize>,
    max_states: Option<usize>,
    max_visited: Option<usize>,
) -> Result<VerificationReport, CampaignError> {
    let default_count = CAMPAIGNS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, c)| *c)
        .ok_or_else(|| CampaignError::Unknown(name.to_string()))?;
    let count = count.unwrap_or(default_count);
    let mut runner = Runner::new(name, seed);
    if let Some(max_states) = max_states {
        runner.budget.max_states = max_states;
    }
    if let Some(max_visited) = max_visited {
        runner.budget.max_visited = max_visited;
    }
    match name {
        "bound-prop1" => bound_prop1(&mut runner, seed, count),
        "family-tight" => family_tight(&mut runner),
        "family-fig1" => family_fig1(&mut runner),
        "family-reviewer" => family_reviewer(&mut runner),
        "layered-subset" => layered_subset(&mut runner, seed, count),
        "padding-maxsync" => padding_maxsync(&mut runner, seed, count),
        "maxsync-alphabet" => maxsync_alphabet(&mut runner, seed, count),
        "maxsync-binary" => maxsync_binary(&mut runner, seed, count),
        "maxsync-binary-wa" => maxsync_binary_wa(&mut runner, seed, count),
        "chromatic-rank" => chromatic_rank(&mut runner, seed, count),
        "sat-subset-sync" => sat_campaign(&mut runner, seed, count, SatCheck::SubsetSync),
        "sat-careful" => sat_campaign(&mut runner, seed, count, SatCheck::Careful),
        "sat-intersection" => sat_campaign(&mut runner, seed, count, SatCheck::Intersection),
        "sat-reachability" => sat_campaign(&mut runner, seed, count, SatCheck::Reachability),
        "sat-positive-matrix" => sat_campaign(&mut runner, seed, count, SatCheck::PositiveMatrix),
        "sat-triangularity" => sat_campaign(&mut runner, seed, count, SatCheck::Triangularity),
        "unary-maxsync" => unary_maxsync(&mut runner, seed, count),
        "eulerian-partition" => eulerian_partition(&mut runner, seed, count),
        "engine-oracle" => engine_oracle(&mut runner, seed, count),
        _ => unreachable!("name found in the registry above"),
    }
    Ok(runner.finish())
}

fn dfa_digest(a: &Dfa) -> String {
    digest_hex(automata_core::serialize_dfa(a).as_bytes())
}

// -------------------------------------------------------------------------
// Bounds and families

fn bound_prop1(runner: &mut Runner, seed: u64, count: usize) {
    let mut rng = rng_from_seed(seed);
    for _ in 0..count {
        let n = rng_range(&mut rng, 1, 12);
        let k = rng_range(&mut rng, 1, 3);
        let a = random_weakly_acyclic_with(n, k, &mut rng);
        let r = a.sink_states().len();
        let digest = dfa_digest(&a);
        let expected = format!("rank={r},len<={}", n - r);
        runner.run(digest, expected, |budget| {
            let order = match a.topological_sort() {
                Ok(order) => order,
                Err(_) => return Check::Fail("generator emitted a cyclic automaton".into()),
            };
            let greedy = match greedy_rank_word_wa(&a, &order) {
                Ok(g) => g,
                Err(err) => return Check::Fail(err.to_string()),
            };
            Check::from_engine(rank_of_automaton_exact(&a, budget), |exact| {
                let ok = greedy.rank == r
                    && greedy.witness.len() <= n - r
                    && exact.rank == r;
                let computed = format!(
                    "greedy_rank={},len={},exact_rank={}",
                    greedy.rank,
                    greedy.witness.len(),
                    exact.rank
                );
                if ok {
                    Check::Pass(computed)
                } else {
                    Check::Fail(computed)
                }
            })
        });
    }
}

fn family_tight(runner: &mut Runner) {
    for n in 1..=12 {
        for r in 1..=n {
            let bundle = tight_rank_family(n, r).expect("parameters in range");
            let a = bundle.automaton.as_complete().expect("family is complete");
            let digest = bundle.source.instance_digest.clone();
            runner.run(digest, format!("rank={r},len={}", n - r), |budget| {
                Check::from_engine(rank_of_automaton_exact(a, budget), |exact| {
                    Check::of_eq(
                        format!("rank={r},len={}", n - r),
                        format!("rank={},len={}", exact.rank, exact.witness.len()),
                    )
                })
            });
        }
    }
}

fn family_fig1(runner: &mut Runner) {
    for n in 4..=12 {
        for k in 2..n {
            let bundle = subset_binary_family(n, k).expect("parameters in range");
            let a = bundle.automaton.as_complete().expect("family is complete");
            let s = bundle.subset.as_ref().expect("family designates a subset");
            let want = (k - 1) * (n - k);
            let cap = k * (2 * n - k - 1) / 2;
            let digest = bundle.source.instance_digest.clone();
            runner.run(digest, format!("len={want}"), |budget| {
                Check::from_engine(subset_shortest_sync_word(a, s, budget), |result| {
                    let Some(word) = result.witness else {
                        return Check::Fail("not synchronizing".into());
                    };
                    let image = a.image(s, &word).expect("witness is applicable");
                    let ok = word.len() == want && word.len() <= cap && image.len() == 1;
                    let computed = format!("len={},image={}", word.len(), image.len());
                    if ok {
                        Check::Pass(computed)
                    } else {
                        Check::Fail(computed)
                    }
                })
            });
        }
    }
}

fn family_reviewer(runner: &mut Runner) {
    for n in 4..=10 {
        for k in 2..n {
            let bundle = subset_large_alphabet_family(n, k).expect("parameters in range");
            let a = bundle.automaton.as_complete().expect("family is complete");
            let s = bundle.subset.as_ref().expect("family designates a subset");
            let want = (k - 1) * (2 * n - k - 2) / 2;
            let digest = bundle.source.instance_digest.clone();
            runner.run(digest, format!("len={want}"), |budget| {
                Check::from_engine(subset_shortest_sync_word(a, s, budget), |result| {
                    match result.witness {
                        Some(word) => Check::of_eq(want, word.len()),
                        None => Check::Fail("not synchronizing".into()),
                    }
                })
            });
        }
    }
}

// -------------------------------------------------------------------------
// Layered and padding constructions

fn layered_subset(runner: &mut Runner, seed: u64, count: usize) {
    let mut rng = rng_from_seed(seed);
    for _ in 0..count {
        let p = rng_range(&mut rng, 1, 6);
        let base = random_dfa_with(p, 2, &mut rng);
        let digest = dfa_digest(&base);
        runner.run(digest, "subset-sync iff base word of length <= p", |budget| {
            let bundle = layered_subset_gadget(&base).expect("base is binary");
            let a = bundle.automaton.as_complete().expect("gadget is complete");
            let s = bundle.subset.as_ref().expect("gadget designates a subset");
            let base_result = match shortest_sync_word(&base, budget) {
                Ok(r) => r,
                Err(err) if err.is_budget() => return Check::Inconclusive(err.to_string()),
                Err(err) => return Check::Fail(err.to_string()),
            };
            Check::from_engine(subset_shortest_sync_word(a, s, budget), |layer_result| {
                let base_len = base_result.witness.as_ref().map(Word::len);
                let base_short = base_len.is_some_and(|len| len <= p);
                let computed = format!(
                    "base_len={base_len:?},layer_len={:?}",
                    layer_result.witness.as_ref().map(Word::len)
                );
                let ok = layer_result.synchronizing == base_short
                    && (!base_short
                        || layer_result.witness.as_ref().map(Word::len) == base_len);
                if ok {
                    Check::Pass(computed)
                } else {
                    Check::Fail(computed)
                }
            })
        });
    }
}

fn padding_maxsync(runner: &mut Runner, seed: u64, count: usize) {
    let mut rng = rng_from_seed(seed);
    for _ in 0..count {
        let n = rng_range(&mut rng, 1, 4);
        let base = random_dfa_with(n, 2, &mut rng);
        let size = rng_range(&mut rng, 1, 2.min(n));
        let subset = random_subset_with(n, size, &mut rng);
        let digest = digest_hex(
            format!("{}|{subset}", automata_core::serialize_dfa(&base)).as_bytes(),
        );
        runner.run(digest, "max >= c iff subset synchronizing", |budget| {
            let bundle = padding_maxsync_gadget(&base, &subset).expect("subset fits");
            let a = bundle.automaton.as_complete().expect("gadget is complete");
            let c = bundle.threshold.expect("gadget sets a threshold");
            let sync = match subset_shortest_sync_word(&base, &subset, budget) {
                Ok(r) => r.synchronizing,
                Err(err) if err.is_budget() => return Check::Inconclusive(err.to_string()),
                Err(err) => return Check::Fail(err.to_string()),
            };
            Check::from_engine(max_sync_set(a, MaxSyncMode::Exact, budget), |exact| {
                let reached = exact.set.len() >= c;
                let computed = format!("max={},c={c},sync={sync}", exact.set.len());
                if reached == sync {
                    Check::Pass(computed)
                } else {
                    Check::Fail(computed)
                }
            })
        });
    }
}

// -------------------------------------------------------------------------
// Independent-set constructions

fn maxsync_alphabet(runner: &mut Runner, seed: u64, count: usize) {
    let mut graphs: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
    let mut rng = rng_from_seed(seed);
    for _ in 0..count {
        let p = rng_range(&mut rng, 1, 6);
        graphs.push(random_graph_with(p, &mut rng));
    }
    for g in graphs {
        let (alpha, _) = max_independent_set_brute(&g).expect("p is small");
        let digest = digest_hex(g.to_dimacs().as_bytes());
        runner.run(digest, format!("max={}", alpha + 1), |budget| {
            let bundle = independent_set_maxsync_gadget(&g).expect("graph is non-empty");
            let a = bundle.automaton.as_complete().expect("gadget is complete");
            Check::from_engine(max_sync_set(a, MaxSyncMode::Exact, budget), |exact| {
                Check::of_eq(alpha + 1, exact.set.len())
            })
        });
    }
}

fn expected_usize_array(value: &serde_json::Value) -> Vec<usize> {
    value
        .as_array()
        .expect("array value")
        .iter()
        .map(|v| v.as_u64().expect("integer") as usize)
        .collect()
}

/// Applies the bundled witness word to the bundled witness set and checks it
/// lands on a single state.
fn witness_check(bundle: &gadget_factory::GadgetBundle) -> Check {
    let a = bundle.automaton.as_complete().expect("gadget is complete");
    let witness_set = expected_usize_array(&bundle.expected["witness_set"]);
    let word = Word::from_letters(expected_usize_array(&bundle.expected["witness_word"]));
    let set =
        StateSet::from_indices(a.n_states(), witness_set.iter().copied()).expect("in range");
    let image = a.image(&set, &word).expect("word is applicable");
    let computed = format!("witness_size={},image={}", set.len(), image.len());
    if image.len() == 1 {
        Check::Pass(computed)
    } else {
        Check::Fail(computed)
    }
}

fn maxsync_binary(runner: &mut Runner, seed: u64, count: usize) {
    // Exact check on every 2-vertex graph with alpha > 1.
    for g in all_graphs(2) {
        let (alpha, _) = max_independent_set_brute(&g).expect("p is small");
        if alpha <= 1 {
            continue;
        }
        let digest = digest_hex(g.to_dimacs().as_bytes());
        runner.run(digest, format!("max={}", 2 * alpha + 1), |budget| {
            let bundle = independent_set_maxsync_binary_gadget(&g).expect("graph is non-empty");
            let a = bundle.automaton.as_complete().expect("gadget is complete");
            Check::from_engine(max_sync_set(a, MaxSyncMode::Exact, budget), |exact| {
                Check::of_eq(2 * alpha + 1, exact.set.len())
            })
        });
    }
    // Witness-only check (lower bound) on all 3-vertex graphs plus random
    // extras: the bundled p*alpha(G)+1 witness set must synchronize.
    let mut graphs: Vec<Graph> = all_graphs(3);
    let mut rng = rng_from_seed(seed);
    for _ in 0..count {
        let p = rng_range(&mut rng, 2, 4);
        graphs.push(random_graph_with(p, &mut rng));
    }
    for g in graphs {
        let digest = digest_hex(g.to_dimacs().as_bytes());
        runner.run(digest, "witness set synchronizes", |_| {
            let bundle = independent_set_maxsync_binary_gadget(&g).expect("graph is non-empty");
            let p = g.n_vertices();
            let a = bundle.automaton.as_complete().expect("gadget is complete");
            if a.n_states() != 4 * p * p - p {
                return Check::Fail(format!("state count {}", a.n_states()));
            }
            witness_check(&bundle)
        });
    }
}

fn maxsync_binary_wa(runner: &mut Runner, seed: u64, count: usize) {
    for g in all_graphs(2) {
        let (alpha, _) = max_independent_set_brute(&g).expect("p is small");
        let lower = 4 * alpha;
        let upper = 4 * alpha + 2 + 1;
        let digest = digest_hex(g.to_dimacs().as_bytes());
        runner.run(digest, format!("max in [{lower},{upper}]"), |budget| {
            let bundle = independent_set_maxsync_binary_wa_gadget(&g).expect("graph is non-empty");
            let a = bundle.automaton.as_complete().expect("gadget is complete");
            if !a.is_weakly_acyclic() {
                return Check::Fail("not weakly acyclic".into());
            }
            Check::from_engine(max_sync_set(a, MaxSyncMode::Exact, budget), |exact| {
                let size = exact.set.len();
                let computed = format!("max={size}");
                if (lower..=upper).contains(&size) {
                    Check::Pass(computed)
                } else {
                    Check::Fail(computed)
                }
            })
        });
    }
    let mut graphs: Vec<Graph> = all_graphs(3);
    let mut rng = rng_from_seed(seed);
    for _ in 0..count {
        let p = rng_range(&mut rng, 2, 3);
        graphs.push(random_graph_with(p, &mut rng));
    }
    for g in graphs {
        let digest = digest_hex(g.to_dimacs().as_bytes());
        runner.run(digest, "witness set synchronizes", |_| {
            let bundle = independent_set_maxsync_binary_wa_gadget(&g).expect("graph is non-empty");
            let a = bundle.automaton.as_complete().expect("gadget is complete");
            if !a.is_weakly_acyclic() {
                return Check::Fail("not weakly acyclic".into());
            }
            witness_check(&bundle)
        });
    }
}

fn chromatic_rank(runner: &mut Runner, seed: u64, count: usize) {
    let mut graphs: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
    let mut rng = rng_from_seed(seed);
    for _ in 0..count {
        graphs.push(random_graph_with(5, &mut rng));
    }
    for g in graphs {
        let (chi, _) = oracles::chromatic_number_brute(&g).expect("p is small");
        let digest = digest_hex(g.to_dimacs().as_bytes());
        runner.run(digest, format!("rank={chi} on both gadgets"), |budget| {
            let wide = chromatic_rank_gadget(&g).expect("graph is non-empty");
            let a = wide.automaton.as_complete().expect("gadget is complete");
            let s = wide.subset.as_ref().expect("gadget designates a subset");
            let wide_rank = match rank_of_subset(a, s, budget) {
                Ok(r) => r.rank,
                Err(err) if err.is_budget() => return Check::Inconclusive(err.to_string()),
                Err(err) => return Check::Fail(err.to_string()),
            };
            let binary = chromatic_rank_binary_gadget(&g).expect("graph is non-empty");
            let a = binary.automaton.as_complete().expect("gadget is complete");
            let s = binary.subset.as_ref().expect("gadget designates a subset");
            Check::from_engine(rank_of_subset(a, s, budget), |r| {
                let computed = format!("wide={wide_rank},binary={}", r.rank);
                if wide_rank == chi && r.rank == chi {
                    Check::Pass(computed)
                } else {
                    Check::Fail(computed)
                }
            })
        });
    }
}

// -------------------------------------------------------------------------
// SAT reductions

#[derive(Clone, Copy, PartialEq, Eq)]
enum SatCheck {
    SubsetSync,
    Careful,
    Intersection,
    Reachability,
    PositiveMatrix,
    Triangularity,
}

/// Deterministic instance pool shared by the SAT campaigns: a seeded grid
/// over every (variables, clauses) pair up to 4x4, then `count` random
/// 3-CNFs with up to 5 variables and 6 clauses.
fn sat_instances(seed: u64, count: usize) -> Vec<CnfFormula> {
    let mut rng = rng_from_seed(seed);
    let mut formulas = Vec::new();
    for n in 1..=4usize {
        for m in 1..=4usize {
            for _ in 0..8 {
                formulas.push(random_cnf_with(n, m, n, &mut rng));
            }
        }
    }
    for _ in 0..count {
        let n = rng_range(&mut rng, 3, 5);
        let m = rng_range(&mut rng, 1, 6);
        formulas.push(random_3cnf_with(n, m, &mut rng));
    }
    formulas
}

fn sat_campaign(runner: &mut Runner, seed: u64, count: usize, check: SatCheck) {
    for formula in sat_instances(seed, count) {
        let assignment = sat_solve_brute(&formula).expect("within oracle budget");
        let sat = assignment.is_some();
        let digest = digest_hex(formula.to_dimacs().as_bytes());
        let expected = match check {
            SatCheck::Triangularity => "upper,upper,lower,lower".to_string(),
            _ => format!("sat={sat}"),
        };
        runner.run(digest, expected, |budget| match check {
            SatCheck::SubsetSync => {
                let bundle = sat_subset_sync_gadget(&formula).expect("m >= 1");
                let a = bundle.automaton.as_complete().expect("gadget is complete");
                let s = bundle.subset.as_ref().expect("gadget designates a subset");
                Check::from_engine(subset_shortest_sync_word(a, s, budget), |result| {
                    if result.synchronizing != sat {
                        return Check::Fail(format!("sync={}", result.synchronizing));
                    }
                    if let Some(assignment) = &assignment {
                        // The assignment word itself must synchronize S.
                        let word = Word::from_letters(
                            assignment.values().iter().map(|&v| usize::from(v)).collect(),
                        );
                        let image = a.image(s, &word).expect("word is applicable");
                        if image.len() != 1 {
                            return Check::Fail(format!(
                                "assignment word leaves {} states",
                                image.len()
                            ));
                        }
                    }
                    Check::Pass(format!("sync={}", result.synchronizing))
                })
            }
            SatCheck::Careful => {
                let bundle = sat_careful_gadget(&formula).expect("m >= 1");
                let p = bundle.automaton.as_partial().expect("gadget is partial");
                Check::from_engine(careful_shortest_word(p, budget), |result| {
                    if result.synchronizing != sat {
                        return Check::Fail(format!("careful={}", result.synchronizing));
                    }
                    if let Some(word) = &result.witness {
                        if word.letters().first() != Some(&2) {
                            return Check::Fail("careful word does not start with r".into());
                        }
                    }
                    if let Some(assignment) = &assignment {
                        // r w_1..w_n 0 from the oracle's assignment must
                        // carefully synchronize.
                        let mut letters = vec![2usize];
                        letters.extend(assignment.values().iter().map(|&v| usize::from(v)));
                        letters.push(0);
                        let outcome = p
                            .partial_image(
                                &StateSet::full(p.n_states()),
                                &Word::from_letters(letters),
                            )
                            .expect("letters in range");
                        match outcome {
                            automata_core::PartialImage::Image(image) if image.len() == 1 => {}
                            other => {
                                return Check::Fail(format!("assignment word failed: {other:?}"))
                            }
                        }
                    }
                    Check::Pass(format!("careful={}", result.synchronizing))
                })
            }
            SatCheck::Intersection => {
                let gadget = sat_intersection_gadget(&formula).expect("m >= 1");
                let acceptors: Vec<Acceptor> = gadget
                    .acceptors
                    .iter()
                    .map(|spec| {
                        Acceptor::new(spec.dfa.clone(), spec.initial, spec.accepting.clone())
                            .expect("spec is valid")
                    })
                    .collect();
                Check::from_engine(intersection_nonempty(&acceptors, budget), |result| {
                    Check::of_eq(sat, result.nonempty)
                })
            }
            SatCheck::Reachability => {
                let bundle = sat_reachability_gadget(&formula).expect("m >= 1");
                let a = bundle.automaton.as_complete().expect("gadget is complete");
                let target = bundle.target_set.as_ref().expect("gadget sets a target");
                Check::from_engine(is_subset_reachable(a, target, budget), |result| {
                    Check::of_eq(sat, result.reachable)
                })
            }
            SatCheck::PositiveMatrix => {
                let set = sat_matrix_set(&formula).expect("m >= 1");
                match positive_product_search(&set.matrices, matrix_semigroup::DEFAULT_ELEMENT_CAP)
                {
                    Ok(ProductSearchOutcome::Found(seq)) => {
                        if sat {
                            Check::Pass(format!("found len={}", seq.len()))
                        } else {
                            Check::Fail("found a product for an unsatisfiable formula".into())
                        }
                    }
                    Ok(ProductSearchOutcome::NoneExhausted { semigroup_size }) => {
                        if sat {
                            Check::Fail("no product for a satisfiable formula".into())
                        } else {
                            Check::Pass(format!("exhausted size={semigroup_size}"))
                        }
                    }
                    Ok(ProductSearchOutcome::Inconclusive { cap }) => {
                        Check::Inconclusive(format!("semigroup cap {cap} hit"))
                    }
                    Err(err) => Check::Fail(err.to_string()),
                }
            }
            SatCheck::Triangularity => {
                let set = sat_matrix_set(&formula).expect("m >= 1");
                let orientations = [
                    Orientation::Upper,
                    Orientation::Upper,
                    Orientation::Lower,
                    Orientation::Lower,
                ];
                let results: Vec<bool> = set
                    .matrices
                    .iter()
                    .zip(orientations)
                    .map(|(m, o)| is_triangular(m, o))
                    .collect();
                let computed = results
                    .iter()
                    .map(|&ok| if ok { "ok" } else { "NO" })
                    .collect::<Vec<_>>()
                    .join(",");
                if results.iter().all(|&ok| ok) {
                    Check::Pass(computed)
                } else {
                    Check::Fail(computed)
                }
            }
        });
    }
}

// -------------------------------------------------------------------------
// Polynomial classes

fn unary_maxsync(runner: &mut Runner, seed: u64, count: usize) {
    let mut rng = rng_from_seed(seed);
    for _ in 0..count {
        let n = rng_range(&mut rng, 1, 10);
        let a = random_dfa_with(n, 1, &mut rng);
        let digest = dfa_digest(&a);
        runner.run(digest, "unary == exact", |budget| {
            let unary = match max_sync_set_unary(&a) {
                Ok(u) => u,
                Err(err) => return Check::Fail(err.to_string()),
            };
            Check::from_engine(max_sync_set(&a, MaxSyncMode::Exact, budget), |exact| {
                Check::of_eq(exact.set.len(), unary.set.len())
            })
        });
    }
}

fn eulerian_partition(runner: &mut Runner, seed: u64, count: usize) {
    let mut rng = rng_from_seed(seed);
    for _ in 0..count {
        let n = rng_range(&mut rng, 2, 6);
        let a = random_connected_eulerian_with(n, 2, &mut rng);
        let digest = dfa_digest(&a);
        runner.run(digest, "rank-many equal classes partition Q", |budget| {
            Check::from_engine(
                sync_engines::verify_eulerian_partition(&a, budget),
                |report| {
                    let computed = format!(
                        "rank={},classes={},holds={}",
                        report.rank,
                        report.classes.len(),
                        report.holds()
                    );
                    if report.holds() {
                        Check::Pass(computed)
                    } else {
                        Check::Fail(computed)
                    }
                },
            )
        });
    }
}

// -------------------------------------------------------------------------
// Engine oracle equivalence

/// Lexicographically first synchronizing word of exactly `len` letters, by
/// plain enumeration (no deduplication).
fn enumeration_hit(a: &Dfa, image: &StateSet, prefix: &mut Vec<usize>, len: usize) -> Option<Word> {
    if len == 0 {
        return (image.len() == 1).then(|| Word::from_letters(prefix.clone()));
    }
    for x in 0..a.n_letters() {
        let next = a.image_letter(image, x);
        prefix.push(x);
        if let Some(word) = enumeration_hit(a, &next, prefix, len - 1) {
            return Some(word);
        }
        prefix.pop();
    }
    None
}

fn engine_oracle(runner: &mut Runner, seed: u64, count: usize) {
    let mut rng = rng_from_seed(seed);
    for _ in 0..count {
        let n = rng_range(&mut rng, 1, 6);
        let a = random_dfa_with(n, 2, &mut rng);
        let digest = dfa_digest(&a);
        runner.run(digest, "BFS == enumeration, pair test agrees", |budget| {
            let pair = is_synchronizing(&a);
            Check::from_engine(shortest_sync_word(&a, budget), |bfs| {
                if bfs.synchronizing != pair.synchronizing {
                    return Check::Fail(format!(
                        "bfs={} pair={}",
                        bfs.synchronizing, pair.synchronizing
                    ));
                }
                let Some(word) = &bfs.witness else {
                    return Check::Pass("not synchronizing (both engines)".into());
                };
                let full = StateSet::full(a.n_states());
                // No word shorter than the BFS result may synchronize, and
                // the first word of that length in lexicographic order must
                // be the BFS witness itself.
                for len in 0..word.len() {
                    if let Some(short) = enumeration_hit(&a, &full, &mut Vec::new(), len) {
                        return Check::Fail(format!(
                            "enumeration found length {} < {}",
                            short.len(),
                            word.len()
                        ));
                    }
                }
                match enumeration_hit(&a, &full, &mut Vec::new(), word.len()) {
                    Some(oracle_word) if &oracle_word == word => {
                        Check::Pass(format!("len={}", word.len()))
                    }
                    Some(oracle_word) => Check::Fail(format!(
                        "lex-first word differs: {:?} vs {:?}",
                        oracle_word, word
                    )),
                    None => Check::Fail("enumeration found no word of the BFS length".into()),
                }
            })
        });
    }
}

fn rng_range(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    use rand::Rng;
    rng.gen_range(lo..=hi)
}
