//! Command-line front end. Exit codes: 0 success/verified, 1 a
//! counterexample was found or an asserted contagion failed, 2 usage or
//! parse error, 3 enumeration budget refusal.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bitset::VertexSet;
use crate::constructive::{construct_dense_seed, construct_ore_seed};
use crate::error::{invalid, Error, Result};
use crate::generators::FamilySpec;
use crate::graph::Graph;
use crate::io::{emit_graph_document, parse_graph_document, GraphDocument};
use crate::oracle::{
    min_contagious, scan_seeds, MinContagiousOutcome, SearchConfig, DEFAULT_BUDGET,
};
use crate::percolation::percolate;
use crate::verify::{
    verify_almost_there, verify_min_degree, verify_mk2, verify_mkk, verify_mnn, verify_ore,
    verify_ore_lemmas, verify_speed, verify_star_counterexample, verify_stop_lemma,
    verify_tightness_example7, TheoremReport, Verdict,
};

/// Fixed default so unseeded runs are reproducible.
pub const DEFAULT_RNG_SEED: u64 = 0x5eed_0001;
const DEFAULT_SAMPLE_BUDGET: u64 = 10_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "contagion",
    about = "Bootstrap percolation: simulate, construct seeds, find minimum contagious sets, and verify the dense-graph results",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named graph family as an edge-list document
    Generate(GenerateArgs),
    /// Percolate a seed set and report the trace
    Simulate(SimulateArgs),
    /// Exact minimum contagious set m(G, r) by exhaustive scan
    FindMin(FindMinArgs),
    /// Build a contagious seed from the constructive proofs
    Construct(ConstructArgs),
    /// Statistics over every seed of one size
    Scan(ScanArgs),
    /// Run a theorem checker and report a verdict
    Verify(VerifyArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name: dc, clique_minus_matching, speed8, circulant,
    /// extremal_mkk, extremal_mk2, star_counterexample, ore_groups,
    /// random_min_degree, random_ore
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    /// Group sizes for ore_groups, comma-separated
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long, default_value_t = DEFAULT_RNG_SEED)]
    rng_seed: u64,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec> {
        let family = self
            .family
            .as_deref()
            .ok_or_else(|| invalid("--family is required"))?;
        FamilySpec::from_parts(
            family,
            self.n,
            self.k,
            self.c,
            self.sizes.as_deref(),
            self.rng_seed,
        )
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    r: usize,
    /// Comma-separated 0-based vertex ids
    #[arg(long, value_delimiter = ',')]
    seed_set: Vec<usize>,
    /// Exit 1 unless the seed is contagious
    #[arg(long)]
    expect_contagious: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FindMinArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    r: usize,
    /// Stop after this seed size and report `m > max-size` if nothing
    /// was found
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    graph: PathBuf,
    /// dense (requires --k) or ore
    #[arg(long)]
    mode: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    size: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: min_degree, tightness_example7, speed, stop_lemma,
    /// almost_there, mkk, mnn, mk2, star_counterexample, ore_theorem,
    /// ore_lemmas
    #[arg(long)]
    theorem: String,
    /// Graph file for instance-based checkers (alternative to --family)
    #[arg(long)]
    graph: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n_lo: Option<usize>,
    #[arg(long)]
    n_hi: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SAMPLE_BUDGET)]
    sample_budget: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    json: bool,
}

/// Parses and executes one invocation; returns the process exit code.
pub fn run_command<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // clap handles --help/--version as "errors" with exit code 0
            let code = if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
            let _ = err.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::FindMin(args) => cmd_find_min(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::BudgetExceeded { .. } => EXIT_REFUSED,
                Error::Internal(_) => EXIT_COUNTEREXAMPLE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<GraphDocument> {
    let text = fs::read_to_string(path)?;
    parse_graph_document(&text)
}

fn seed_from_ids(g: &Graph, ids: &[usize]) -> Result<VertexSet> {
    let mut seed = VertexSet::new(g.n());
    for &v in ids {
        if v >= g.n() {
            return Err(invalid(format!(
                "seed vertex {v} out of range for n = {}",
                g.n()
            )));
        }
        seed.insert(v);
    }
    Ok(seed)
}

fn cmd_generate(args: GenerateArgs) -> Result<i32> {
    let spec = args.family.spec()?;
    let graph = spec.build()?;
    let doc = GraphDocument::with_family(graph, spec.to_string());
    let output = if args.json {
        let value = serde_json::json!({
            "family": spec.to_string(),
            "n": doc.graph.n(),
            "m": doc.graph.edge_count(),
            "edges": doc.graph.edges(),
        });
        format!(
            "{}\n",
            serde_json::to_string_pretty(&value).expect("serializable")
        )
    } else {
        emit_graph_document(&doc)
    };
    match &args.out {
        Some(path) => fs::write(path, output)?,
        None => print!("{output}"),
    }
    Ok(EXIT_OK)
}

fn cmd_simulate(args: SimulateArgs) -> Result<i32> {
    if args.r == 0 {
        return Err(invalid("--r must be at least 1"));
    }
    let doc = load_graph(&args.graph)?;
    let seed = seed_from_ids(&doc.graph, &args.seed_set)?;
    let trace = percolate(&doc.graph, &seed, args.r);
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&trace).expect("serializable")
        );
    } else {
        println!("n={} r={} seed={:?}", trace.n, trace.r, trace.seed.to_vec());
        for (i, wave) in trace.waves.iter().enumerate() {
            println!("round {}: +{:?}", i + 1, wave.to_vec());
        }
        if trace.contagious {
            println!("contagious after {} rounds", trace.rounds);
        } else {
            println!(
                "not contagious: stalls at {} of {} vertices after {} rounds",
                trace.closure().len(),
                trace.n,
                trace.rounds
            );
        }
    }
    if args.expect_contagious && !trace.contagious {
        return Ok(EXIT_COUNTEREXAMPLE);
    }
    Ok(EXIT_OK)
}

fn cmd_find_min(args: FindMinArgs) -> Result<i32> {
    if args.r == 0 {
        return Err(invalid("--r must be at least 1"));
    }
    let doc = load_graph(&args.graph)?;
    let cfg = SearchConfig {
        budget: args.budget,
        workers: args.workers,
    };
    let outcome = min_contagious(&doc.graph, args.r, args.max_size, &cfg)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&outcome).expect("serializable")
        );
    } else {
        match &outcome {
            MinContagiousOutcome::Exact(res) => println!(
                "m(G, {}) = {} witness={:?} seeds_examined={}",
                args.r,
                res.m,
                res.witness.to_vec(),
                res.seeds_examined
            ),
            MinContagiousOutcome::ExceedsBound {
                bound,
                seeds_examined,
                ..
            } => println!("m(G, {}) > {bound} seeds_examined={seeds_examined}", args.r),
        }
    }
    Ok(EXIT_OK)
}

fn cmd_construct(args: ConstructArgs) -> Result<i32> {
    let doc = load_graph(&args.graph)?;
    let recipe = match args.mode.as_str() {
        "dense" => {
            let k = args.k.ok_or_else(|| invalid("--mode dense requires --k"))?;
            construct_dense_seed(&doc.graph, k)?
        }
        "ore" => construct_ore_seed(&doc.graph)?,
        other => {
            return Err(invalid(format!(
                "unknown mode: {other} (expected dense or ore)"
            )))
        }
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&recipe).expect("serializable")
        );
    } else {
        println!(
            "seed={:?} method={} anchor={:?}",
            recipe.seed.to_vec(),
            serde_json::to_value(recipe.method)
                .expect("serializable")
                .as_str()
                .unwrap(),
            recipe.anchor
        );
    }
    Ok(EXIT_OK)
}

fn cmd_scan(args: ScanArgs) -> Result<i32> {
    if args.r == 0 {
        return Err(invalid("--r must be at least 1"));
    }
    let doc = load_graph(&args.graph)?;
    let cfg = SearchConfig {
        budget: args.budget,
        workers: args.workers,
    };
    let stats = scan_seeds(&doc.graph, args.r, args.size, &cfg)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&stats).expect("serializable")
        );
    } else {
        println!(
            "size={} total={} contagious={} max_rounds={:?} argmax={:?}",
            stats.size,
            stats.total,
            stats.contagious_count,
            stats.max_rounds,
            stats.argmax_seed.as_ref().map(|s| s.to_vec())
        );
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    let cfg = SearchConfig {
        budget: args.budget,
        workers: args.workers,
    };
    let sample_budget = args.sample_budget;
    let rng_seed = args.family.rng_seed;

    // instance-based checkers accept --graph FILE or a --family spec
    let instance = |args: &VerifyArgs| -> Result<Graph> {
        if let Some(path) = &args.graph {
            Ok(load_graph(path)?.graph)
        } else if args.family.family.is_some() {
            args.family.spec()?.build()
        } else {
            Err(invalid(
                "this theorem needs an instance: pass --graph or --family",
            ))
        }
    };
    let need = |value: Option<usize>, flag: &str| -> Result<usize> {
        value.ok_or_else(|| invalid(format!("--theorem {} requires {flag}", args.theorem)))
    };

    let report = match args.theorem.as_str() {
        "min_degree" => verify_min_degree(
            need(args.n_lo, "--n-lo")?,
            need(args.n_hi, "--n-hi")?,
            need(args.family.k, "--k")?,
            args.trials.unwrap_or(50),
            rng_seed,
            &cfg,
        )?,
        "tightness_example7" => verify_tightness_example7(need(args.family.n, "--n")?, &cfg)?,
        "speed" => verify_speed(&instance(&args)?, need(args.family.k, "--k")?, &cfg)?,
        "stop_lemma" => verify_stop_lemma(
            &instance(&args)?,
            need(args.family.k, "--k")?,
            sample_budget,
            rng_seed,
            &cfg,
        )?,
        "almost_there" => verify_almost_there(
            &instance(&args)?,
            need(args.family.k, "--k")?,
            sample_budget,
            rng_seed,
            &cfg,
        )?,
        "mkk" => verify_mkk(
            need(args.family.n, "--n")?,
            need(args.family.k, "--k")?,
            &cfg,
        )?,
        "mnn" => verify_mnn(need(args.family.n, "--n")?, &cfg)?,
        "mk2" => verify_mk2(
            need(args.family.n, "--n")?,
            need(args.family.k, "--k")?,
            &cfg,
        )?,
        "star_counterexample" => verify_star_counterexample(
            need(args.family.n, "--n")?,
            need(args.family.k, "--k")?,
            &cfg,
        )?,
        "ore_theorem" => {
            let groups_c = match args.family.family.as_deref() {
                Some("ore_groups") => args.family.c,
                _ => None,
            };
            verify_ore(&instance(&args)?, groups_c, sample_budget, rng_seed, &cfg)?
        }
        "ore_lemmas" => verify_ore_lemmas(&instance(&args)?, sample_budget, rng_seed, &cfg)?,
        other => return Err(invalid(format!("unknown theorem: {other}"))),
    };

    print_report(&report, args.json);
    Ok(match report.verdict {
        Verdict::Verified => EXIT_OK,
        Verdict::Counterexample => EXIT_COUNTEREXAMPLE,
        Verdict::Refused => EXIT_REFUSED,
    })
}

fn print_report(report: &TheoremReport, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("serializable")
        );
        return;
    }
    let verdict = match report.verdict {
        Verdict::Verified => "verified",
        Verdict::Counterexample => "COUNTEREXAMPLE",
        Verdict::Refused => "refused",
    };
    println!(
        "{}: {verdict} ({}; graphs={} seeds={} rounds={}; {} ms)",
        report.theorem_id.as_str(),
        report.scope,
        report.work.graphs,
        report.work.seeds,
        report.work.rounds,
        report.elapsed_ms
    );
    for (key, value) in &report.stats {
        println!("  {key} = {value}");
    }
    if let Some(ce) = &report.counterexample {
        println!(
            "  counterexample: n={} r={} seed={:?} observed={}",
            ce.n, ce.r, ce.seed, ce.observed
        );
        println!("  edges: {:?}", ce.graph_edges);
    }
}
