//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::process::Command;
use std::time::{Duration, Instant};

use edginj::graph::{parse_graph, serialize_graph};
use edginj::patterns::make_pattern;
use edginj::verify::{run_suite, Suite, SuiteReport, DEFAULT_SEED};
use edginj::PatternKind;

struct Criterion {
    id: u8,
    title: &'static str,
    suites: &'static [Suite],
    /// Minimum instance count per suite, where one is required.
    min_checks: &'static [(Suite, usize)],
    limit: Duration,
}

const CRITERIA: [Criterion; 8] = [
    Criterion {
        id: 1,
        title: "oracle sandwich and partition-sum cross-check",
        suites: &[Suite::Sandwich],
        min_checks: &[(Suite::Sandwich, 200)],
        limit: Duration::from_secs(60),
    },
    Criterion {
        id: 2,
        title: "polynomial-time edge-injective count vs oracle",
        suites: &[Suite::EihomPoly],
        min_checks: &[(Suite::EihomPoly, 200)],
        limit: Duration::from_secs(300),
    },
    Criterion {
        id: 3,
        title: "class sizes and representative quotients",
        suites: &[Suite::Classes],
        min_checks: &[],
        limit: Duration::from_secs(300),
    },
    Criterion {
        id: 4,
        title: "colorful Holant identities and colorful matching routes",
        suites: &[Suite::MatchHolant, Suite::CombinedSig, Suite::Gamma, Suite::Subdiv],
        min_checks: &[(Suite::Gamma, 5)],
        limit: Duration::from_secs(120),
    },
    Criterion {
        id: 5,
        title: "planted interpolation and sigma leading coefficients",
        suites: &[Suite::Interpolation, Suite::Sigma],
        min_checks: &[(Suite::Interpolation, 100)],
        limit: Duration::from_secs(30),
    },
    Criterion {
        id: 6,
        title: "matchings via wedge packings",
        suites: &[Suite::Wedge],
        min_checks: &[],
        limit: Duration::from_secs(180),
    },
    Criterion {
        id: 7,
        title: "odd edge sets, collars, perfect matchings of line graphs, digits",
        suites: &[Suite::OddGf2, Suite::Collar, Suite::LinePerfmatch, Suite::Digits],
        min_checks: &[(Suite::Collar, 4)],
        limit: Duration::from_secs(120),
    },
    Criterion {
        id: 8,
        title: "apex, star, cycle gadget, weight removal, cycles via paths",
        suites: &[Suite::Apex, Suite::Star, Suite::CycleGadget, Suite::Unweight, Suite::EcPaths],
        min_checks: &[],
        limit: Duration::from_secs(300),
    },
];

fn evaluate(c: &Criterion) -> (bool, String) {
    let start = Instant::now();
    let reports: Vec<SuiteReport> = c.suites.iter().map(|&s| run_suite(s, DEFAULT_SEED)).collect();
    let elapsed = start.elapsed();
    let mut problems = Vec::new();
    for r in &reports {
        for f in r.failures().take(3) {
            problems.push(format!("{} {}: {:?}", r.suite, f.id, f.outcome));
        }
        if r.checks.is_empty() {
            problems.push(format!("{} ran no checks", r.suite));
        }
    }
    for &(suite, min) in c.min_checks {
        let n = reports.iter().find(|r| r.suite == suite).map_or(0, |r| r.checks.len());
        if n < min {
            problems.push(format!("{suite} ran {n} instances, need {min}"));
        }
    }
    if elapsed > c.limit {
        problems.push(format!("took {elapsed:.2?}, limit {:?}", c.limit));
    }
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let summary = format!("{total} checks in {elapsed:.2?}");
    if problems.is_empty() {
        (true, summary)
    } else {
        (false, format!("{summary}; {}", problems.join("; ")))
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_edginj"))
}

fn cli_criterion() -> (bool, String) {
    let mut problems = Vec::new();
    let out = bin().args(["verify", "all", "--quiet"]).output().expect("binary runs");
    if !out.status.success() {
        problems.push(format!("verify all exited with {:?}", out.status.code()));
    }
    let dir = tempfile::tempdir().expect("temp dir");
    let mut files = 0;
    for kind in PatternKind::ALL {
        for params in sample_params(kind) {
            let Ok(pattern) = make_pattern(kind, &params) else { continue };
            let mut args = vec!["gen".to_string(), kind.name().to_string()];
            args.extend(params.iter().map(|p| p.to_string()));
            let gen = bin().args(&args).output().expect("binary runs");
            let text = String::from_utf8(gen.stdout).unwrap();
            if !gen.status.success() || text != serialize_graph(&pattern.graph) {
                problems.push(format!("gen {args:?} differs from the library pattern"));
                continue;
            }
            let path = dir.path().join(format!("{}-{files}.g", kind.name()));
            std::fs::write(&path, &text).unwrap();
            files += 1;
            let back = bin().arg("format").arg(&path).output().expect("binary runs");
            if back.stdout != text.as_bytes() {
                problems.push(format!("format of gen {args:?} is not byte-identical"));
            }
            if serialize_graph(&parse_graph(&text).unwrap()) != text {
                problems.push(format!("parse/serialize of gen {args:?} is not byte-identical"));
            }
            if pattern.graph.n() <= 6 && pattern.graph.colors().is_none() {
                let spec = format!("builtin:{},{}", kind.name(), params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","));
                let via_file = count_value(&["count", "edginj", "--pattern", path.to_str().unwrap(), "--host", path.to_str().unwrap()]);
                let via_builtin = count_value(&["count", "edginj", "--pattern", &spec, "--host", path.to_str().unwrap()]);
                if via_file.is_none() || via_file != via_builtin {
                    problems.push(format!("count on generated file {args:?}: {via_file:?} vs {via_builtin:?}"));
                }
            }
        }
    }
    let summary = format!("verify all + {files} generated files");
    if problems.is_empty() {
        (true, summary)
    } else {
        (false, format!("{summary}; {}", problems.join("; ")))
    }
}

fn sample_params(kind: PatternKind) -> Vec<Vec<usize>> {
    match kind {
        PatternKind::Biclique | PatternKind::GadgetTruncated => vec![vec![2, 1], vec![3, 2]],
        _ => vec![vec![1], vec![2], vec![3]],
    }
}

fn count_value(args: &[&str]) -> Option<String> {
    let out = bin().args(args).output().ok()?;
    out.status.success().then(|| String::from_utf8_lossy(&out.stdout).trim().to_string())
}

fn main() {
    let mut all = true;
    for c in &CRITERIA {
        let (ok, detail) = evaluate(c);
        all &= ok;
        println!("criterion {}: {} - {} ({detail})", c.id, if ok { "PASS" } else { "FAIL" }, c.title);
    }
    let (ok, detail) = cli_criterion();
    all &= ok;
    println!("criterion 9: {} - command line verify and file round trip ({detail})", if ok { "PASS" } else { "FAIL" });
    if !all {
        std::process::exit(1);
    }
}
