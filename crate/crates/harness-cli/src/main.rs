//! `wasync` — synchronization toolkit for finite automata.
//!
//! Exit codes: 0 success, 1 property violation (failed verification),
//! 2 input error, 3 resource cap / inconclusive.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use automata_core::{parse_dfa, Automaton, Dfa, PartialDfa, StateSet, Word};
use clap::{Parser, Subcommand};
use gadget_factory::{
    chromatic_rank_binary_gadget, chromatic_rank_gadget, independent_set_maxsync_binary_gadget,
    independent_set_maxsync_binary_wa_gadget, independent_set_maxsync_gadget,
    layered_subset_gadget, padding_maxsync_gadget, sat_base_automaton, sat_careful_gadget,
    sat_intersection_gadget, sat_matrix_set, sat_reachability_gadget, sat_subset_sync_gadget,
    subset_binary_family, subset_large_alphabet_family, tight_rank_family, GadgetBundle,
};
use harness_cli::acceptor_files::{parse_acceptor, render_acceptor};
use harness_cli::campaign::{run_campaign, CAMPAIGNS};
use harness_cli::gen::{gen_random_dfa, gen_random_eulerian, gen_random_weakly_acyclic};
use matrix_semigroup::{
    parse_mat_file, positive_product_search, render_mat_file, ProductSearchOutcome,
};
use oracles::{parse_dimacs_cnf, parse_dimacs_graph};
use serde_json::json;
use sync_engines::{
    careful_shortest_word, is_subset_reachable, is_synchronizing, intersection_nonempty,
    max_sync_set, max_sync_set_unary, max_sync_set_via_monoid, rank_of_automaton,
    rank_of_automaton_exact, rank_of_subset, shortest_sync_word, subset_shortest_sync_word,
    Budget, EngineError, MaxSyncMode,
};

#[derive(Parser)]
#[command(
    name = "wasync",
    about = "Synchronization problems in finite automata: exact engines, gadget builders and verification campaigns",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// State cap for whole-state-set searches (default 64).
    #[arg(long, global = true)]
    max_states: Option<usize>,

    /// Cap on distinct search nodes per search (default 2^24; the
    /// WASYNC_BUDGET environment variable overrides the default).
    #[arg(long, global = true)]
    max_visited: Option<usize>,

    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Synchronizability (pair test) and the exact shortest synchronizing word.
    Check { dfa: PathBuf },

    /// Shortest word synchronizing a designated subset of states.
    Subset {
        dfa: PathBuf,
        /// Comma-separated state names or indices.
        #[arg(long)]
        set: String,
    },

    /// Rank of the automaton, or of a subset when --set is given.
    Rank {
        dfa: PathBuf,
        #[arg(long)]
        set: Option<String>,
        /// Skip the weakly acyclic fast path and search exhaustively.
        #[arg(long)]
        exact: bool,
    },

    /// A maximum (or maximal) synchronizing set of states.
    Maxset {
        dfa: PathBuf,
        /// exact | witness | unary (polynomial, 1-letter alphabets only)
        #[arg(long, default_value = "exact")]
        mode: String,
        /// Cross-check through transition-monoid enumeration.
        #[arg(long)]
        via_monoid: bool,
        /// Element cap for --via-monoid.
        #[arg(long, default_value_t = 1 << 20)]
        monoid_cap: usize,
    },

    /// Shortest carefully synchronizing word of a (partial) automaton.
    Careful { dfa: PathBuf },

    /// Whether some word maps the full state set exactly onto --set.
    Reach {
        dfa: PathBuf,
        #[arg(long)]
        set: String,
    },

    /// Shortest word accepted by every acceptor file.
    Intersect { files: Vec<PathBuf> },

    /// Build a named construction and emit automaton + JSON sidecar.
    Gadget {
        /// tight-rank | subset-binary | subset-large-alphabet | layered |
        /// padding | maxsync-alphabet | maxsync-binary | maxsync-binary-wa |
        /// chromatic-rank | chromatic-rank-binary | a-base | sat-subset-sync |
        /// sat-intersection | sat-careful | sat-reachability
        name: String,
        #[arg(long)]
        cnf: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        dfa: Option<PathBuf>,
        #[arg(long)]
        set: Option<String>,
        #[arg(short = 'n', long)]
        n: Option<usize>,
        #[arg(short = 'r', long)]
        r: Option<usize>,
        #[arg(short = 'k', long)]
        k: Option<usize>,
        /// Write <base>.dfa and <base>.json instead of printing.
        #[arg(long)]
        out_base: Option<PathBuf>,
    },

    /// Emit the four positive-matrix generators of a CNF in `mat` format.
    Matrices {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        out_base: Option<PathBuf>,
    },

    /// Search a `mat` file's semigroup for an all-ones product.
    Positive {
        mat: PathBuf,
        #[arg(long, default_value_t = 1 << 20)]
        cap: usize,
    },

    /// Generate a random automaton (kinds: wa | dfa | eulerian).
    Gen {
        kind: String,
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(short = 'k', long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },

    /// Run a verification campaign and report per-instance results.
    Verify {
        #[arg(required_unless_present = "list")]
        campaign: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        count: Option<usize>,
        /// List available campaigns and exit.
        #[arg(long)]
        list: bool,
    },
}

/// An error carrying the process exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

type CliResult<T> = Result<T, Failure>;

fn input_error(error: anyhow::Error) -> Failure {
    Failure { code: 2, error }
}

fn engine_failure(error: EngineError) -> Failure {
    let code = if error.is_budget() { 3 } else { 2 };
    Failure {
        code,
        error: anyhow!(error),
    }
}

trait IntoCli<T> {
    fn or_input(self) -> CliResult<T>;
}

impl<T, E: Into<anyhow::Error>> IntoCli<T> for Result<T, E> {
    fn or_input(self) -> CliResult<T> {
        self.map_err(|e| input_error(e.into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut sink = Output::default();
    let code = match run(&cli, &mut sink) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            failure.code
        }
    };
    if let Err(err) = sink.flush(cli.out.as_deref()) {
        eprintln!("error: {err:#}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

/// Collects report text so --out can redirect it atomically at the end.
#[derive(Default)]
struct Output {
    buffer: String,
}

impl Output {
    fn line(&mut self, text: impl AsRef<str>) {
        self.buffer.push_str(text.as_ref());
        self.buffer.push('\n');
    }

    fn raw(&mut self, text: impl AsRef<str>) {
        self.buffer.push_str(text.as_ref());
    }

    fn flush(self, out: Option<&Path>) -> anyhow::Result<()> {
        match out {
            Some(path) => fs::write(path, self.buffer)
                .with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{}", self.buffer);
                Ok(())
            }
        }
    }
}

fn budget_from(cli: &Cli) -> Budget {
    let mut budget = Budget::default();
    if let Ok(value) = std::env::var("WASYNC_BUDGET") {
        if let Ok(parsed) = value.trim().parse::<usize>() {
            budget.max_visited = parsed;
        }
    }
    if let Some(max_states) = cli.max_states {
        budget.max_states = max_states;
    }
    if let Some(max_visited) = cli.max_visited {
        budget.max_visited = max_visited;
    }
    budget
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .or_input()
}

fn load_automaton(path: &Path) -> CliResult<Automaton> {
    parse_dfa(&read_file(path)?)
        .with_context(|| format!("parsing {}", path.display()))
        .or_input()
}

fn load_complete(path: &Path) -> CliResult<Dfa> {
    match load_automaton(path)? {
        Automaton::Complete(dfa) => Ok(dfa),
        Automaton::Partial(p) => p
            .to_complete()
            .context("this command needs a complete automaton")
            .or_input(),
    }
}

fn load_partial(path: &Path) -> CliResult<PartialDfa> {
    Ok(match load_automaton(path)? {
        Automaton::Partial(p) => p,
        Automaton::Complete(dfa) => dfa.to_partial(),
    })
}

fn parse_state_set(dfa: &Dfa, tokens: &str) -> CliResult<StateSet> {
    let mut set = StateSet::empty(dfa.n_states());
    for token in tokens.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let state = dfa
            .resolve_state(token)
            .ok_or_else(|| input_error(anyhow!("unknown state {token:?}")))?;
        set.insert(state);
    }
    if set.is_empty() {
        return Err(input_error(anyhow!("--set selected no states")));
    }
    Ok(set)
}

fn word_json(dfa: &Dfa, word: &Word) -> serde_json::Value {
    json!({
        "rendered": dfa.render_word(word),
        "letters": word.letters(),
        "length": word.len(),
    })
}

fn run(cli: &Cli, out: &mut Output) -> CliResult<u8> {
    let budget = budget_from(cli);
    match &cli.command {
        Command::Check { dfa } => {
            let a = load_complete(dfa)?;
            let pair = is_synchronizing(&a);
            let bfs = shortest_sync_word(&a, &budget).map_err(engine_failure)?;
            if cli.json {
                out.line(
                    json!({
                        "synchronizing": bfs.synchronizing,
                        "shortest_word": bfs.witness.as_ref().map(|w| word_json(&a, w)),
                        "target": bfs.target.map(|t| a.state_label(t)),
                        "pair_test_agrees": pair.synchronizing == bfs.synchronizing,
                        "explored": bfs.explored,
                    })
                    .to_string(),
                );
            } else if bfs.synchronizing {
                let word = bfs.witness.as_ref().expect("synchronizing result");
                out.line(format!(
                    "synchronizing: yes (shortest word {} of length {}, target {})",
                    a.render_word(word),
                    word.len(),
                    a.state_label(bfs.target.expect("synchronizing result"))
                ));
            } else {
                out.line("synchronizing: no");
            }
            debug_assert_eq!(pair.synchronizing, bfs.synchronizing);
            Ok(0)
        }
        Command::Subset { dfa, set } => {
            let a = load_complete(dfa)?;
            let s = parse_state_set(&a, set)?;
            let result = subset_shortest_sync_word(&a, &s, &budget).map_err(engine_failure)?;
            if cli.json {
                out.line(
                    json!({
                        "synchronizing": result.synchronizing,
                        "shortest_word": result.witness.as_ref().map(|w| word_json(&a, w)),
                        "target": result.target.map(|t| a.state_label(t)),
                        "explored": result.explored,
                    })
                    .to_string(),
                );
            } else if let Some(word) = &result.witness {
                out.line(format!(
                    "synchronizing: yes (shortest word {} of length {}, target {})",
                    a.render_word(word),
                    word.len(),
                    a.state_label(result.target.expect("synchronizing result"))
                ));
            } else {
                out.line("synchronizing: no");
            }
            Ok(0)
        }
        Command::Rank { dfa, set, exact } => {
            let a = load_complete(dfa)?;
            let result = match set {
                Some(tokens) => {
                    let s = parse_state_set(&a, tokens)?;
                    rank_of_subset(&a, &s, &budget).map_err(engine_failure)?
                }
                None if *exact => rank_of_automaton_exact(&a, &budget).map_err(engine_failure)?,
                None => rank_of_automaton(&a, &budget).map_err(engine_failure)?,
            };
            if cli.json {
                out.line(
                    json!({
                        "rank": result.rank,
                        "witness": word_json(&a, &result.witness),
                        "final_image": result.final_image.iter()
                            .map(|q| a.state_label(q)).collect::<Vec<_>>(),
                    })
                    .to_string(),
                );
            } else {
                out.line(format!(
                    "rank: {} (witness {} of length {})",
                    result.rank,
                    a.render_word(&result.witness),
                    result.witness.len()
                ));
            }
            Ok(0)
        }
        Command::Maxset {
            dfa,
            mode,
            via_monoid,
            monoid_cap,
        } => {
            let a = load_complete(dfa)?;
            let result = if *via_monoid {
                max_sync_set_via_monoid(&a, *monoid_cap).map_err(engine_failure)?
            } else {
                match mode.as_str() {
                    "exact" => {
                        max_sync_set(&a, MaxSyncMode::Exact, &budget).map_err(engine_failure)?
                    }
                    "witness" | "witness-only" => {
                        max_sync_set(&a, MaxSyncMode::WitnessOnly, &budget)
                            .map_err(engine_failure)?
                    }
                    "unary" => max_sync_set_unary(&a).map_err(engine_failure)?,
                    other => {
                        return Err(input_error(anyhow!(
                            "unknown mode {other:?} (use exact, witness or unary)"
                        )))
                    }
                }
            };
            let members: Vec<String> = result.set.iter().map(|q| a.state_label(q)).collect();
            if cli.json {
                out.line(
                    json!({
                        "size": result.set.len(),
                        "set": members,
                        "witness": word_json(&a, &result.witness),
                        "target": a.state_label(result.target),
                    })
                    .to_string(),
                );
            } else {
                out.line(format!(
                    "size {}: {{{}}} (word {} -> {})",
                    result.set.len(),
                    members.join(","),
                    a.render_word(&result.witness),
                    a.state_label(result.target)
                ));
            }
            Ok(0)
        }
        Command::Careful { dfa } => {
            let p = load_partial(dfa)?;
            let result = careful_shortest_word(&p, &budget).map_err(engine_failure)?;
            if cli.json {
                out.line(
                    json!({
                        "carefully_synchronizing": result.synchronizing,
                        "shortest_word": result.witness.as_ref()
                            .map(|w| p.render_word(w)),
                        "target": result.target.map(|t| p.state_label(t)),
                        "explored": result.explored,
                    })
                    .to_string(),
                );
            } else if let Some(word) = &result.witness {
                out.line(format!(
                    "carefully synchronizing: yes (word {} of length {})",
                    p.render_word(word),
                    word.len()
                ));
            } else {
                out.line("carefully synchronizing: no");
            }
            Ok(0)
        }
        Command::Reach { dfa, set } => {
            let a = load_complete(dfa)?;
            let target = parse_state_set(&a, set)?;
            let result = is_subset_reachable(&a, &target, &budget).map_err(engine_failure)?;
            if cli.json {
                out.line(
                    json!({
                        "reachable": result.reachable,
                        "witness": result.witness.as_ref().map(|w| word_json(&a, w)),
                    })
                    .to_string(),
                );
            } else if let Some(word) = &result.witness {
                out.line(format!(
                    "reachable: yes (word {} of length {})",
                    a.render_word(word),
                    word.len()
                ));
            } else {
                out.line("reachable: no");
            }
            Ok(0)
        }
        Command::Intersect { files } => {
            if files.is_empty() {
                return Err(input_error(anyhow!("need at least one acceptor file")));
            }
            let mut acceptors = Vec::new();
            for path in files {
                let text = read_file(path)?;
                acceptors.push(
                    parse_acceptor(&text)
                        .with_context(|| format!("parsing acceptor {}", path.display()))
                        .or_input()?,
                );
            }
            let result = intersection_nonempty(&acceptors, &budget).map_err(engine_failure)?;
            let dfa = &acceptors[0].dfa;
            if cli.json {
                out.line(
                    json!({
                        "nonempty": result.nonempty,
                        "witness": result.witness.as_ref().map(|w| word_json(dfa, w)),
                    })
                    .to_string(),
                );
            } else if let Some(word) = &result.witness {
                out.line(format!(
                    "intersection: nonempty (word {} of length {})",
                    dfa.render_word(word),
                    word.len()
                ));
            } else {
                out.line("intersection: empty");
            }
            Ok(0)
        }
        Command::Gadget {
            name,
            cnf,
            graph,
            dfa,
            set,
            n,
            r,
            k,
            out_base,
        } => run_gadget(
            cli,
            out,
            GadgetArgs {
                name,
                cnf: cnf.as_deref(),
                graph: graph.as_deref(),
                dfa: dfa.as_deref(),
                set: set.as_deref(),
                n: *n,
                r: *r,
                k: *k,
                out_base: out_base.as_deref(),
            },
        ),
        Command::Matrices { cnf, out_base } => {
            let formula = parse_dimacs_cnf(&read_file(cnf)?).or_input()?;
            let set = sat_matrix_set(&formula).or_input()?;
            let mat_text = render_mat_file(&set.matrices);
            let sidecar = json!({
                "gadget": set.source.gadget,
                "labels": set.labels,
                "states": set.state_names,
                "expected": set.expected,
                "instance_digest": set.source.instance_digest,
            });
            match out_base {
                Some(base) => {
                    write_with_extension(base, "mat", &mat_text)?;
                    write_with_extension(base, "json", &format!("{sidecar:#}\n"))?;
                    out.line(format!("wrote {}.mat and {}.json", base.display(), base.display()));
                }
                None => {
                    out.raw(&mat_text);
                    out.line(format!("{sidecar:#}"));
                }
            }
            Ok(0)
        }
        Command::Positive { mat, cap } => {
            let matrices = parse_mat_file(&read_file(mat)?).or_input()?;
            let outcome = positive_product_search(&matrices, *cap).or_input()?;
            match outcome {
                ProductSearchOutcome::Found(sequence) => {
                    if cli.json {
                        out.line(json!({"outcome": "found", "sequence": sequence}).to_string());
                    } else {
                        let rendered: Vec<String> =
                            sequence.iter().map(|i| i.to_string()).collect();
                        out.line(format!("positive product: {}", rendered.join(" ")));
                    }
                    Ok(0)
                }
                ProductSearchOutcome::NoneExhausted { semigroup_size } => {
                    if cli.json {
                        out.line(
                            json!({"outcome": "none", "semigroup_size": semigroup_size})
                                .to_string(),
                        );
                    } else {
                        out.line(format!(
                            "no positive product (semigroup exhausted, {semigroup_size} elements)"
                        ));
                    }
                    Ok(0)
                }
                ProductSearchOutcome::Inconclusive { cap } => {
                    if cli.json {
                        out.line(json!({"outcome": "inconclusive", "cap": cap}).to_string());
                    } else {
                        out.line(format!("inconclusive: element cap {cap} reached"));
                    }
                    Ok(3)
                }
            }
        }
        Command::Gen { kind, n, k, seed } => {
            let a = match kind.as_str() {
                "wa" => gen_random_weakly_acyclic(*n, *k, *seed),
                "dfa" => gen_random_dfa(*n, *k, *seed),
                "eulerian" => gen_random_eulerian(*n, *k, *seed),
                other => {
                    return Err(input_error(anyhow!(
                        "unknown generator {other:?} (use wa, dfa or eulerian)"
                    )))
                }
            };
            out.raw(automata_core::serialize_dfa(&a));
            Ok(0)
        }
        Command::Verify {
            campaign,
            seed,
            count,
            list,
        } => {
            if *list {
                for (name, default_count) in CAMPAIGNS {
                    out.line(format!("{name} (default count {default_count})"));
                }
                return Ok(0);
            }
            let campaign = campaign
                .as_deref()
                .expect("clap enforces campaign unless --list");
            // Campaigns size their own state caps to the gadgets they build;
            // only explicit flags (or WASYNC_BUDGET) override them.
            let env_visited = std::env::var("WASYNC_BUDGET")
                .ok()
                .and_then(|v| v.trim().parse::<usize>().ok());
            let report = run_campaign(
                campaign,
                *seed,
                *count,
                cli.max_states,
                cli.max_visited.or(env_visited),
            )
            .map_err(|e| input_error(anyhow!(e)))?;
            if cli.json {
                out.line(report.to_json().to_string());
            } else {
                out.raw(report.render_text());
            }
            Ok(report.exit_code() as u8)
        }
    }
}

struct GadgetArgs<'a> {
    name: &'a str,
    cnf: Option<&'a Path>,
    graph: Option<&'a Path>,
    dfa: Option<&'a Path>,
    set: Option<&'a str>,
    n: Option<usize>,
    r: Option<usize>,
    k: Option<usize>,
    out_base: Option<&'a Path>,
}

fn write_with_extension(base: &Path, extension: &str, text: &str) -> CliResult<()> {
    let path = base.with_extension(extension);
    fs::write(&path, text)
        .with_context(|| format!("writing {}", path.display()))
        .or_input()
}

fn emit_bundle(
    out: &mut Output,
    bundle: &GadgetBundle,
    out_base: Option<&Path>,
) -> CliResult<()> {
    match out_base {
        Some(base) => {
            write_with_extension(base, "dfa", &bundle.dfa_text())?;
            write_with_extension(base, "json", &bundle.sidecar_text())?;
            out.line(format!(
                "wrote {}.dfa and {}.json",
                base.display(),
                base.display()
            ));
        }
        None => {
            out.raw(bundle.dfa_text());
            out.raw(bundle.sidecar_text());
        }
    }
    Ok(())
}

fn run_gadget(cli: &Cli, out: &mut Output, args: GadgetArgs<'_>) -> CliResult<u8> {
    let need_cnf = || -> CliResult<gadget_factory::CnfFormula> {
        let path = args
            .cnf
            .ok_or_else(|| input_error(anyhow!("this gadget needs --cnf <dimacs file>")))?;
        parse_dimacs_cnf(&read_file(path)?).or_input()
    };
    let need_graph = || -> CliResult<gadget_factory::Graph> {
        let path = args
            .graph
            .ok_or_else(|| input_error(anyhow!("this gadget needs --graph <dimacs file>")))?;
        parse_dimacs_graph(&read_file(path)?).or_input()
    };
    let need_n = || args.n.ok_or_else(|| input_error(anyhow!("this gadget needs -n")));
    let need_k = || args.k.ok_or_else(|| input_error(anyhow!("this gadget needs -k")));

    let bundle = match args.name {
        "tight-rank" => {
            let r = args
                .r
                .ok_or_else(|| input_error(anyhow!("this gadget needs -r")))?;
            tight_rank_family(need_n()?, r).or_input()?
        }
        "subset-binary" => subset_binary_family(need_n()?, need_k()?).or_input()?,
        "subset-large-alphabet" => {
            subset_large_alphabet_family(need_n()?, need_k()?).or_input()?
        }
        "layered" => {
            let path = args
                .dfa
                .ok_or_else(|| input_error(anyhow!("this gadget needs --dfa")))?;
            let base = load_complete(path)?;
            layered_subset_gadget(&base).or_input()?
        }
        "padding" => {
            let path = args
                .dfa
                .ok_or_else(|| input_error(anyhow!("this gadget needs --dfa")))?;
            let base = load_complete(path)?;
            let tokens = args
                .set
                .ok_or_else(|| input_error(anyhow!("this gadget needs --set")))?;
            let subset = parse_state_set(&base, tokens)?;
            padding_maxsync_gadget(&base, &subset).or_input()?
        }
        "maxsync-alphabet" => independent_set_maxsync_gadget(&need_graph()?).or_input()?,
        "maxsync-binary" => independent_set_maxsync_binary_gadget(&need_graph()?).or_input()?,
        "maxsync-binary-wa" => {
            independent_set_maxsync_binary_wa_gadget(&need_graph()?).or_input()?
        }
        "chromatic-rank" => chromatic_rank_gadget(&need_graph()?).or_input()?,
        "chromatic-rank-binary" => chromatic_rank_binary_gadget(&need_graph()?).or_input()?,
        "a-base" => sat_base_automaton(&need_cnf()?).or_input()?,
        "sat-subset-sync" => sat_subset_sync_gadget(&need_cnf()?).or_input()?,
        "sat-careful" => sat_careful_gadget(&need_cnf()?).or_input()?,
        "sat-reachability" => sat_reachability_gadget(&need_cnf()?).or_input()?,
        "sat-intersection" => {
            let gadget = sat_intersection_gadget(&need_cnf()?).or_input()?;
            let sidecar = json!({
                "gadget": gadget.source.gadget,
                "acceptors": gadget.acceptors.len(),
                "expected": gadget.expected,
                "instance_digest": gadget.source.instance_digest,
            });
            match args.out_base {
                Some(base) => {
                    for (idx, spec) in gadget.acceptors.iter().enumerate() {
                        let path = base.with_extension(format!("{}.dfa", idx + 1));
                        fs::write(
                            &path,
                            render_acceptor(&spec.dfa, spec.initial, &spec.accepting),
                        )
                        .with_context(|| format!("writing {}", path.display()))
                        .or_input()?;
                    }
                    write_with_extension(base, "json", &format!("{sidecar:#}\n"))?;
                    out.line(format!(
                        "wrote {} acceptor files and {}.json",
                        gadget.acceptors.len(),
                        base.display()
                    ));
                }
                None => {
                    for spec in &gadget.acceptors {
                        out.raw(render_acceptor(&spec.dfa, spec.initial, &spec.accepting));
                    }
                    out.line(format!("{sidecar:#}"));
                }
            }
            return Ok(0);
        }
        other => {
            return Err(input_error(anyhow!(
                "unknown gadget {other:?}; see `wasync gadget --help` for the list"
            )))
        }
    };
    let _ = cli;
    emit_bundle(out, &bundle, args.out_base)?;
    Ok(0)
}
