use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use edginj::eihom::{count_edginj_poly, count_emb_small_vc};
use edginj::graph::{parse_graph, serialize_graph};
use edginj::holant::{build_match_holant, col_holant, colmatch_via_subdivision, colmatch_via_uncolored};
use edginj::line_matchings::{count_odd_edge_sets, count_perfmatch_3regular_line, perfmatch_via_line_reduction};
use edginj::numeric::to_count;
use edginj::oracles::{
    count_edge_disjoint, count_edginj, count_edginj_weighted, count_emb, count_hom, count_matchings, count_odd_edge_sets_enum,
    count_perfect_matchings, count_simple_cycles, WalkKind,
};
use edginj::patterns::{make_pattern, parse_builtin, pattern_graph};
use edginj::reductions::{
    count_edginj_wedges, count_matchings_via_apex, count_matchings_via_star, count_matchings_via_wedges,
    count_simple_cycles_via_gadget, ec_cycles_via_paths, BipartiteInstance,
};
use edginj::verify::{run_suite, run_suite_on, Outcome, Suite, SuiteReport, DEFAULT_SEED};
use edginj::{Caps, Error, Graph, PatternKind};

#[derive(Parser)]
#[command(name = "edginj", version, about = "Exact counts of edge-injective homomorphisms and related graph quantities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count a quantity on a host graph.
    Count(CountArgs),
    /// Print a named pattern graph in the graph file format.
    Gen {
        kind: String,
        params: Vec<usize>,
    },
    /// Re-emit a graph file in canonical form.
    Format { file: PathBuf },
    /// Run identity-checking suites (`all`, a suite name, or `group:<1-8>`).
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Hom,
    Emb,
    Edginj,
    Wedginj,
    Matchings,
    Colmatch,
    Perfmatch,
    OddEdgeSets,
    EcCycles,
    EcPaths,
    Cycles,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(clap::Args)]
struct CountArgs {
    #[arg(value_enum)]
    quantity: Quantity,
    /// Pattern file, or `builtin:<kind>,<params>`.
    #[arg(long)]
    pattern: Option<String>,
    /// Host graph file.
    #[arg(long)]
    host: PathBuf,
    #[arg(long)]
    k: Option<usize>,
    /// `oracle`, `poly`, or `pipeline:<name>`.
    #[arg(long, default_value = "oracle")]
    algo: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(clap::Args)]
struct VerifyArgs {
    target: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Run on these graph files instead of the builtin corpus.
    #[arg(long = "graph")]
    graphs: Vec<PathBuf>,
    /// Print failing instances and suite summaries only.
    #[arg(long)]
    quiet: bool,
}

enum Failure {
    Usage(String),
    Core(Error),
    Verification { cap_exceeded: bool },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification { cap_exceeded: true } => 3,
            Failure::Verification { .. } => 1,
            Failure::Core(Error::CapExceeded { .. }) => 3,
            Failure::Core(Error::DigitOverflow { .. } | Error::NotDivisible { .. } | Error::Inconsistent(_)) => 1,
            Failure::Usage(_) | Failure::Core(_) => 2,
        }
    }
}

enum Algo {
    Oracle,
    Poly,
    Pipeline(String),
}

impl Algo {
    fn parse(s: &str) -> Result<Algo, Failure> {
        match s {
            "oracle" => Ok(Algo::Oracle),
            "poly" => Ok(Algo::Poly),
            _ => match s.strip_prefix("pipeline:") {
                Some(name) if !name.is_empty() => Ok(Algo::Pipeline(name.to_string())),
                _ => Err(Failure::Usage(format!("unknown algorithm `{s}`"))),
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(args) => run_count(&args),
        Command::Gen { kind, params } => run_gen(&kind, &params),
        Command::Format { file } => read_graph(&file).map(|g| print!("{}", serialize_graph(&g))),
        Command::Verify(args) => run_verify(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Verification { cap_exceeded: true } => eprintln!("error: a verification instance exceeded a cap"),
                Failure::Verification { .. } => {}
            }
            ExitCode::from(f.exit_code())
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_graph(&text)?)
}

fn read_pattern(spec: &str) -> Result<Graph, Failure> {
    if spec.starts_with("builtin:") {
        Ok(parse_builtin(spec)?.graph)
    } else {
        read_graph(Path::new(spec))
    }
}

fn require_k(k: Option<usize>) -> Result<usize, Failure> {
    k.ok_or_else(|| Failure::Usage("this quantity needs --k".into()))
}

fn unsupported(q: &str, algo: &str) -> Failure {
    Failure::Usage(format!("`{algo}` is not available for {q}"))
}

fn run_count(args: &CountArgs) -> Result<(), Failure> {
    let host = read_graph(&args.host)?;
    let algo = Algo::parse(&args.algo)?;
    let caps = Caps::from_env();
    let pipeline_caps = Caps::pipeline().with_env();
    let name = args.quantity.to_possible_value().unwrap().get_name().to_string();
    let no = || unsupported(&name, &args.algo);
    let pattern = match args.quantity {
        Quantity::Hom | Quantity::Emb | Quantity::Edginj => Some(read_pattern(
            args.pattern.as_deref().ok_or_else(|| Failure::Usage("this quantity needs --pattern".into()))?,
        )?),
        _ => None,
    };
    let weighted = host.weights().is_some();
    if weighted && args.quantity != Quantity::Edginj {
        return Err(Failure::Usage("weighted hosts are only supported for edginj".into()));
    }

    let value = match (args.quantity, &algo) {
        (Quantity::Hom, Algo::Oracle) => count_hom(pattern.as_ref().unwrap(), &host, &caps)?,
        (Quantity::Emb, Algo::Oracle) => count_emb(pattern.as_ref().unwrap(), &host, &caps)?,
        (Quantity::Emb, Algo::Poly) => count_emb_small_vc(pattern.as_ref().unwrap(), &host, &caps)?,
        (Quantity::Edginj, Algo::Oracle) if weighted => count_edginj_weighted(pattern.as_ref().unwrap(), &host, &caps)?,
        (Quantity::Edginj, Algo::Oracle) => count_edginj(pattern.as_ref().unwrap(), &host, &caps)?,
        (Quantity::Edginj, Algo::Poly) if !weighted => count_edginj_poly(pattern.as_ref().unwrap(), &host, &caps)?,
        (Quantity::Wedginj, Algo::Oracle) => {
            let k = require_k(args.k)?;
            count_edginj(&pattern_graph(PatternKind::Wedges, &[k]), &host, &caps)?
        }
        (Quantity::Wedginj, Algo::Poly) => count_edginj_wedges(&host, require_k(args.k)?)?,
        (Quantity::Matchings, Algo::Oracle) => count_matchings(&host, require_k(args.k)?, false)?,
        (Quantity::Matchings, Algo::Pipeline(p)) => {
            let k = require_k(args.k)?;
            match p.as_str() {
                "wedges" => count_matchings_via_wedges(&BipartiteInstance::infer(host.clone())?, k)?,
                "apex" => count_matchings_via_apex(&host, k, &pipeline_caps)?,
                "star" => count_matchings_via_star(&BipartiteInstance::infer(host.clone())?, k, &pipeline_caps)?,
                _ => return Err(no()),
            }
        }
        (Quantity::Colmatch, _) => {
            let k = host.num_colors() as usize;
            if args.k.is_some_and(|x| x != k) {
                return Err(Failure::Usage(format!("colmatch counts {k}-matchings for a {k}-colored host")));
            }
            match &algo {
                Algo::Oracle => count_matchings(&host, k, true)?,
                Algo::Pipeline(p) => match p.as_str() {
                    "holant" => to_count(&col_holant(&build_match_holant(&host)?, &caps)?)
                        .ok_or_else(|| Error::Inconsistent("colorful Holant value is not a count".into()))?,
                    "subdivision" => colmatch_via_subdivision(&host)?,
                    "uncolored" => colmatch_via_uncolored(&host)?,
                    _ => return Err(no()),
                },
                Algo::Poly => return Err(no()),
            }
        }
        (Quantity::Perfmatch, Algo::Oracle) => count_perfect_matchings(&host, &caps)?,
        (Quantity::Perfmatch, Algo::Pipeline(p)) => match p.as_str() {
            "odd-sets" => count_perfmatch_3regular_line(&host, &caps)?,
            "collar" => perfmatch_via_line_reduction(&host, args.k.unwrap_or(2), &caps)?,
            _ => return Err(no()),
        },
        (Quantity::OddEdgeSets, Algo::Oracle) => count_odd_edge_sets_enum(&host, &caps)?,
        (Quantity::OddEdgeSets, Algo::Poly) => count_odd_edge_sets(&host),
        (Quantity::EcCycles, Algo::Oracle) => count_edge_disjoint(&host, require_k(args.k)?, WalkKind::Cycle, &caps)?,
        (Quantity::EcCycles, Algo::Pipeline(p)) if p == "paths" => ec_cycles_via_paths(&host, require_k(args.k)?, None, &caps)?,
        (Quantity::EcPaths, Algo::Oracle) => count_edge_disjoint(&host, require_k(args.k)?, WalkKind::Path, &caps)?,
        (Quantity::Cycles, Algo::Oracle) => count_simple_cycles(&host, require_k(args.k)?, &caps)?,
        (Quantity::Cycles, Algo::Pipeline(p)) if p == "gadget" => count_simple_cycles_via_gadget(&host, require_k(args.k)?, &pipeline_caps)?,
        _ => return Err(no()),
    };

    match args.format {
        OutputFormat::Text => println!("{value}"),
        OutputFormat::Json => {
            let out = json!({
                "quantity": name,
                "value": value.to_string(),
                "algo": args.algo,
                "params": {
                    "pattern": args.pattern,
                    "host": args.host.display().to_string(),
                    "k": args.k,
                },
            });
            println!("{out}");
        }
    }
    Ok(())
}

fn run_gen(kind: &str, params: &[usize]) -> Result<(), Failure> {
    let kind: PatternKind = kind.parse()?;
    let pattern = make_pattern(kind, params)?;
    print!("{}", serialize_graph(&pattern.graph));
    Ok(())
}

fn print_report(report: &SuiteReport, quiet: bool) {
    let mut checks: Vec<_> = report.checks.iter().collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    for c in checks {
        let line = match &c.outcome {
            Outcome::Pass if quiet => continue,
            Outcome::Pass => format!("PASS  {} {}", report.suite, c.id),
            Outcome::Fail(d) => format!("FAIL  {} {}: {d}", report.suite, c.id),
            Outcome::Error(e) => format!("ERROR {} {}: {e}", report.suite, c.id),
        };
        println!("{line}");
    }
    let passed = report.checks.iter().filter(|c| c.outcome == Outcome::Pass).count();
    println!(
        "suite {} [group {}]: {}/{} passed in {:.2?}",
        report.suite,
        report.suite.group(),
        passed,
        report.checks.len(),
        report.elapsed
    );
}

fn run_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let suites: Vec<Suite> = match args.target.as_str() {
        "all" => Suite::ALL.to_vec(),
        t => match t.strip_prefix("group:") {
            Some(g) => {
                let g: u8 = g.parse().map_err(|_| Failure::Usage(format!("bad group `{g}`")))?;
                let s = Suite::in_group(g);
                if s.is_empty() {
                    return Err(Failure::Usage(format!("no suites in group {g}")));
                }
                s
            }
            None => vec![t.parse()?],
        },
    };
    let supplied = args
        .graphs
        .iter()
        .map(|p| Ok((p.display().to_string(), read_graph(p)?)))
        .collect::<Result<Vec<_>, Failure>>()?;

    let mut all_pass = true;
    let mut cap_hit = false;
    for suite in suites {
        let report = if supplied.is_empty() {
            run_suite(suite, args.seed)
        } else if suite.takes_graphs() {
            run_suite_on(suite, &supplied)?
        } else if args.target == "all" {
            continue;
        } else {
            return Err(Failure::Usage(format!("suite `{suite}` does not take supplied graphs")));
        };
        print_report(&report, args.quiet);
        all_pass &= report.passed();
        cap_hit |= report.cap_exceeded();
    }
    if all_pass {
        println!("all checks passed");
        Ok(())
    } else {
        Err(Failure::Verification { cap_exceeded: cap_hit })
    }
}
