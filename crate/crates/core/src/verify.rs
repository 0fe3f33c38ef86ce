//! Identity-checking suites: every fast or indirect counter against an
//! independent route, over seeded random and fixed corpora.
//!
//! Instances are generated up front from the seed and then checked in
//! parallel; results keep generation order.

use std::fmt::{self, Display};
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eihom::{build_representative, class_of, class_size, count_edginj_poly, enumerate_classes, reduce_isolated};
use crate::error::{Error, Result};
use crate::graph::{line_graph, min_vertex_cover, quotient, subdivide, vertex_cover_number, CoverMode, Graph, Quotient};
use crate::holant::{
    build_gamma, build_match_holant, build_omega_bip, col_holant, col_sig, colmatch_via_subdivision, colmatch_via_uncolored,
    expand_combined, gamma_coefficients, matchgate_signature, Signature, SignatureGraph,
};
use crate::line_matchings::{collar_counts, count_odd_edge_sets, count_perfmatch_3regular_line, extract_digits_base_r, perfmatch_via_line_reduction};
use crate::numeric::{factorial, forward_samples, rat, recover_unknowns, sigma_expand, sigma_leading, Rational};
use crate::oracles::{
    count_edge_disjoint, count_edginj, count_edginj_via_partition_sum, count_emb, count_hom, count_matchings, count_odd_edge_sets_enum,
    count_perfect_matchings, count_simple_cycles, is_isomorphic, Caps, WalkKind,
};
use crate::partition::all_partitions;
use crate::patterns::{pattern_graph, PatternKind};
use crate::reductions::{
    apex_triangle_count, build_gr, build_star_host, count_edginj_wedges, count_matchings_via_apex, count_matchings_via_star,
    count_matchings_via_wedges, count_simple_cycles_via_gadget, ec_cycles_via_paths, unweight_cycles, unweight_graph,
    wedge_alpha_oracle, wedge_beta_from_alpha, BipartiteInstance,
};
use crate::{par, Count};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Sandwich,
    EihomPoly,
    Classes,
    MatchHolant,
    CombinedSig,
    Gamma,
    Subdiv,
    Interpolation,
    Sigma,
    Wedge,
    OddGf2,
    Collar,
    LinePerfmatch,
    Digits,
    Apex,
    Star,
    CycleGadget,
    Unweight,
    EcPaths,
}

impl Suite {
    pub const ALL: [Suite; 19] = [
        Suite::Sandwich,
        Suite::EihomPoly,
        Suite::Classes,
        Suite::MatchHolant,
        Suite::CombinedSig,
        Suite::Gamma,
        Suite::Subdiv,
        Suite::Interpolation,
        Suite::Sigma,
        Suite::Wedge,
        Suite::OddGf2,
        Suite::Collar,
        Suite::LinePerfmatch,
        Suite::Digits,
        Suite::Apex,
        Suite::Star,
        Suite::CycleGadget,
        Suite::Unweight,
        Suite::EcPaths,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sandwich => "sandwich",
            Suite::EihomPoly => "eihom-poly",
            Suite::Classes => "classes",
            Suite::MatchHolant => "match-holant",
            Suite::CombinedSig => "combined-sig",
            Suite::Gamma => "gamma",
            Suite::Subdiv => "subdiv",
            Suite::Interpolation => "interpolation",
            Suite::Sigma => "sigma",
            Suite::Wedge => "wedge",
            Suite::OddGf2 => "odd-gf2",
            Suite::Collar => "collar",
            Suite::LinePerfmatch => "line-perfmatch",
            Suite::Digits => "digits",
            Suite::Apex => "apex",
            Suite::Star => "star",
            Suite::CycleGadget => "cycle-gadget",
            Suite::Unweight => "unweight",
            Suite::EcPaths => "ec-paths",
        }
    }

    /// Acceptance group the suite belongs to (1..=8).
    pub fn group(self) -> u8 {
        match self {
            Suite::Sandwich => 1,
            Suite::EihomPoly => 2,
            Suite::Classes => 3,
            Suite::MatchHolant | Suite::CombinedSig | Suite::Gamma | Suite::Subdiv => 4,
            Suite::Interpolation | Suite::Sigma => 5,
            Suite::Wedge => 6,
            Suite::OddGf2 | Suite::Collar | Suite::LinePerfmatch | Suite::Digits => 7,
            Suite::Apex | Suite::Star | Suite::CycleGadget | Suite::Unweight | Suite::EcPaths => 8,
        }
    }

    pub fn in_group(group: u8) -> Vec<Suite> {
        Suite::ALL.into_iter().filter(|s| s.group() == group).collect()
    }

    /// Whether the suite can run on graphs supplied by the caller.
    pub fn takes_graphs(self) -> bool {
        matches!(
            self,
            Suite::Sandwich
                | Suite::EihomPoly
                | Suite::MatchHolant
                | Suite::Subdiv
                | Suite::Wedge
                | Suite::OddGf2
                | Suite::Apex
                | Suite::Star
                | Suite::CycleGadget
                | Suite::EcPaths
        )
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Error(Error),
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.outcome == Outcome::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome != Outcome::Pass)
    }

    pub fn cap_exceeded(&self) -> bool {
        self.checks
            .iter()
            .any(|c| matches!(&c.outcome, Outcome::Error(e) if e.is_cap()))
    }
}

/// Collects mismatches for one instance.
#[derive(Default)]
pub struct Probe {
    notes: Vec<String>,
}

impl Probe {
    pub fn eq<T: PartialEq + Display>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.notes.push(format!("{what}: got {got}, expected {want}"));
        }
    }

    pub fn holds(&mut self, what: &str, cond: bool) {
        if !cond {
            self.notes.push(format!("{what} does not hold"));
        }
    }
}

type Job = Box<dyn Fn(&mut Probe) -> Result<()> + Send + Sync>;

fn job<F>(f: F) -> Job
where
    F: Fn(&mut Probe) -> Result<()> + Send + Sync + 'static,
{
    Box::new(f)
}

fn run_jobs(suite: Suite, jobs: Vec<(String, Job)>) -> SuiteReport {
    let start = Instant::now();
    let checks = par::map(jobs, |(id, f)| {
        let mut probe = Probe::default();
        let outcome = match f(&mut probe) {
            Err(e) => Outcome::Error(e),
            Ok(()) if probe.notes.is_empty() => Outcome::Pass,
            Ok(()) => Outcome::Fail(probe.notes.join("; ")),
        };
        Check { id, outcome }
    });
    SuiteReport {
        suite,
        checks,
        elapsed: start.elapsed(),
    }
}

/// Graphs a suite runs on instead of its builtin corpus.
pub type SuppliedGraphs = [(String, Graph)];

/// Runs a suite on its builtin corpus.
pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (suite as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    run_jobs(suite, builtin_jobs(suite, &mut rng))
}

/// Runs a suite on caller-supplied graphs.
pub fn run_suite_on(suite: Suite, graphs: &SuppliedGraphs) -> Result<SuiteReport> {
    if !suite.takes_graphs() {
        return Err(Error::Precondition(format!("suite `{suite}` runs on its builtin corpus only")));
    }
    let jobs = graphs
        .iter()
        .map(|(id, g)| (id.clone(), graph_job(suite, g.clone())))
        .collect();
    Ok(run_jobs(suite, jobs))
}

pub fn run_group(group: u8, seed: u64) -> Vec<SuiteReport> {
    Suite::in_group(group).into_iter().map(|s| run_suite(s, seed)).collect()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: RangeInclusive<usize>, p: f64) -> Graph {
    let n = rng.gen_range(n);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("random graph is simple")
}

/// Random graph on a vertex count drawn from `n`, with 1 to `max_edges`
/// edges, colors `1..=k` and `k` declared colors.
pub fn random_colored(rng: &mut ChaCha8Rng, n: RangeInclusive<usize>, max_edges: usize, k: u32) -> Graph {
    let n = rng.gen_range(n);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(1..=max_edges.min(pairs.len()).max(1)).min(pairs.len());
    let edges: Vec<(usize, usize, u32)> = pairs[..m].iter().map(|&(u, v)| (u, v, rng.gen_range(1..=k))).collect();
    Graph::colored(n, &edges, Some(k)).expect("random colored graph is valid")
}

/// Random bipartite instance: left `0..l`, right `l..l+r` with sizes drawn
/// from the ranges, each right
/// vertex joined to one or two left vertices, no two sharing a pair.
pub fn random_bipartite(rng: &mut ChaCha8Rng, l: RangeInclusive<usize>, r: RangeInclusive<usize>) -> BipartiteInstance {
    let l = rng.gen_range(l);
    let r = rng.gen_range(r);
    loop {
        let mut edges = Vec::new();
        let mut pairs = std::collections::HashSet::new();
        let mut ok = true;
        for x in l..l + r {
            let mut nb: Vec<usize> = (0..l).collect();
            nb.shuffle(rng);
            let d = if l >= 2 && rng.gen_bool(0.6) { 2 } else { 1 };
            let mut nb = nb[..d].to_vec();
            nb.sort_unstable();
            if d == 2 && !pairs.insert((nb[0], nb[1])) {
                ok = false;
                break;
            }
            edges.extend(nb.iter().map(|&y| (y, x)));
        }
        if !ok {
            continue;
        }
        let g = Graph::new(l + r, &edges).expect("bipartite instance is simple");
        let left = (0..l + r).map(|v| v < l).collect();
        return BipartiteInstance::new(g, left).expect("generated instance satisfies the conditions");
    }
}

fn caps_with_pattern(v: usize) -> Caps {
    Caps {
        pattern_vertices: v,
        ..Caps::default()
    }
}

fn builtin_jobs(suite: Suite, rng: &mut ChaCha8Rng) -> Vec<(String, Job)> {
    match suite {
        Suite::Sandwich => (0..200)
            .map(|i| {
                let h = random_graph(rng, 1..=5, 0.5);
                let g = random_graph(rng, 1..=6, 0.5);
                (format!("pair-{i:03}"), sandwich_job(h, g))
            })
            .collect(),
        Suite::EihomPoly => {
            let mut out = Vec::new();
            while out.len() < 200 {
                let p = rng.gen_range(0.2..0.6);
                let h = random_graph(rng, 1..=6, p);
                if vertex_cover_number(&h, CoverMode::Weak, 24).map_or(true, |c| c > 3) {
                    continue;
                }
                let g = random_graph(rng, 1..=7, 0.5);
                out.push((format!("pair-{:03}", out.len()), poly_job(h, g)));
            }
            out
        }
        Suite::Classes => {
            let mut out: Vec<(String, Job)> = [
                pattern_graph(PatternKind::Path, &[4]),
                pattern_graph(PatternKind::Cycle, &[5]),
                pattern_graph(PatternKind::Biclique, &[2, 3]),
                pattern_graph(PatternKind::Wedges, &[2]),
                pattern_graph(PatternKind::SubdividedStar, &[2]),
            ]
            .into_iter()
            .enumerate()
            .map(|(i, h)| (format!("fixed-{i}"), classes_job(h)))
            .collect();
            while out.len() < 40 {
                let h = reduce_isolated(&random_graph(rng, 3..=6, 0.45)).core;
                if h.m() == 0 {
                    continue;
                }
                out.push((format!("random-{:02}", out.len()), classes_job(h)));
            }
            out
        }
        Suite::MatchHolant => (0..40)
            .map(|i| {
                let k = rng.gen_range(1..=3);
                let g = random_colored(rng, 2..=7, 8, k);
                (format!("colored-{i:02}"), graph_job(Suite::MatchHolant, g))
            })
            .collect(),
        Suite::CombinedSig => {
            let mut out = Vec::new();
            for i in 0..30 {
                let k = rng.gen_range(1..=3);
                let g = random_colored(rng, 2..=6, 7, k);
                let seed = rng.gen();
                out.push((format!("random-{i:02}"), random_decomposition_job(g, seed)));
            }
            for i in 0..10 {
                let k = rng.gen_range(1..=2);
                let g = random_colored(rng, 2..=6, 6, k);
                out.push((format!("gamma-{i:02}"), gamma_decomposition_job(g)));
            }
            out
        }
        Suite::Gamma => (1..=5usize).map(|m| (format!("m={m}"), gamma_job(m))).collect(),
        Suite::Subdiv => (0..40)
            .map(|i| {
                let k = rng.gen_range(1..=3);
                let g = random_colored(rng, 2..=7, 8, k);
                (format!("colored-{i:02}"), graph_job(Suite::Subdiv, g))
            })
            .collect(),
        Suite::Interpolation => (0..100)
            .map(|i| {
                let k = rng.gen_range(1..=4);
                let levels: Vec<Vec<u64>> = (0..=3 * k).map(|kk| (0..=kk).map(|_| rng.gen_range(0..=50)).collect()).collect();
                (format!("planted-{i:03}-k{k}"), interpolation_job(k, levels))
            })
            .collect(),
        Suite::Sigma => (0..=2usize)
            .flat_map(|k| (0..=4usize).map(move |d| (k, d)))
            .map(|(k, d)| (format!("r={} k={k}", k + d), sigma_job(k + d, k)))
            .collect(),
        Suite::Wedge => {
            let fixed = [
                pattern_graph(PatternKind::Cycle, &[6]),
                pattern_graph(PatternKind::Path, &[4]),
                pattern_graph(PatternKind::Biclique, &[1, 3]),
                pattern_graph(PatternKind::Matching, &[2]),
                Graph::new(8, &[(0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 6), (2, 7)]).unwrap(),
            ];
            let mut out: Vec<(String, Job)> = fixed
                .into_iter()
                .enumerate()
                .map(|(i, g)| (format!("fixed-{i}"), graph_job(Suite::Wedge, g)))
                .collect();
            for i in 0..8 {
                let inst = random_bipartite(rng, 2..=4, 2..=5);
                out.push((format!("random-{i}"), wedge_job(inst)));
            }
            out
        }
        Suite::OddGf2 => {
            let mut out = vec![("K4".to_string(), odd_job(pattern_graph(PatternKind::Clique, &[4]), Some(8)))];
            for i in 0..30 {
                let n = rng.gen_range(3..=8);
                let mut g = random_graph(rng, n..=n, 0.5);
                while g.m() > 20 {
                    g = random_graph(rng, n..=n, 0.4);
                }
                out.push((format!("random-{i:02}"), odd_job(g, None)));
            }
            out
        }
        Suite::Collar => (1..=4usize).map(|l| (format!("ell={l}"), collar_job(l))).collect(),
        Suite::LinePerfmatch => {
            let mut out: Vec<(String, Job)> = cubic_corpus()
                .into_iter()
                .map(|(name, g)| (format!("subdivided-{name}"), line_job(g, name == "K4")))
                .collect();
            out.push(("K4-ell2".into(), pipeline_job(pattern_graph(PatternKind::Clique, &[4]), 2, Some(3))));
            out.push(("K33-ell3".into(), pipeline_job(pattern_graph(PatternKind::Biclique, &[3, 3]), 3, None)));
            out
        }
        Suite::Digits => (0..30)
            .map(|i| {
                let r: u64 = rng.gen_range(2..=50);
                let d = rng.gen_range(1..=6);
                let digits: Vec<u64> = (0..d).map(|_| rng.gen_range(0..r)).collect();
                (format!("base{r}-{i:02}"), digits_job(r, digits))
            })
            .collect(),
        Suite::Apex => {
            let mut out: Vec<(String, Job)> = vec![("C4".into(), apex_c4_job())];
            for i in 0..12 {
                let inst = random_bipartite(rng, 1..=3, 1..=3);
                out.push((format!("random-{i:02}"), graph_job(Suite::Apex, inst.graph)));
            }
            out
        }
        Suite::Star => {
            let mut out: Vec<(String, Job)> = vec![(
                "one-edge".into(),
                job(|p| {
                    let inst = BipartiteInstance::infer(Graph::new(2, &[(0, 1)])?)?;
                    p.eq("1-matchings", count_matchings_via_star(&inst, 1, &Caps::default())?, Count::one());
                    Ok(())
                }),
            )];
            out.push(("C6".into(), graph_job(Suite::Star, pattern_graph(PatternKind::Cycle, &[6]))));
            for i in 0..10 {
                let inst = random_bipartite(rng, 2..=3, 2..=4);
                out.push((format!("random-{i:02}"), star_job(inst)));
            }
            out
        }
        Suite::CycleGadget => {
            let mut out: Vec<(String, Job)> = vec![
                ("K4".into(), literal_cycles_job(pattern_graph(PatternKind::Clique, &[4]), 4)),
                ("C5".into(), literal_cycles_job(pattern_graph(PatternKind::Cycle, &[5]), 0)),
            ];
            for i in 0..8 {
                let g = random_graph(rng, 3..=5, 0.6);
                out.push((format!("random-{i}"), graph_job(Suite::CycleGadget, g)));
            }
            out
        }
        Suite::Unweight => {
            let mut out: Vec<(String, Job)> = [
                ("K4", pattern_graph(PatternKind::Clique, &[4])),
                ("C4", pattern_graph(PatternKind::Cycle, &[4])),
                ("K23", pattern_graph(PatternKind::Biclique, &[2, 3])),
                ("diamond", Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()),
            ]
            .into_iter()
            .map(|(name, g)| {
                let ones = g.with_weights(vec![1; g.m()]).unwrap();
                (format!("{name}-W1"), unweight_job(ones))
            })
            .collect();
            let k4 = pattern_graph(PatternKind::Clique, &[4]);
            out.push(("K4-W2".into(), unweight_job(k4.with_weights(vec![1, 2, 1, 1, 2, 1]).unwrap())));
            out.push((
                "zero-weight".into(),
                job(|p| {
                    let g = pattern_graph(PatternKind::Cycle, &[4]).with_weights(vec![1, 0, 1, 1])?;
                    p.holds("zero weight rejected", unweight_graph(&g).is_err());
                    Ok(())
                }),
            ));
            out
        }
        Suite::EcPaths => {
            let mut out: Vec<(String, Job)> = vec![
                ("K4-k3".into(), literal_ec_job(pattern_graph(PatternKind::Clique, &[4]), 3, 4)),
                ("C5-k5".into(), literal_ec_job(pattern_graph(PatternKind::Cycle, &[5]), 5, 1)),
            ];
            for i in 0..10 {
                let g = random_graph(rng, 3..=6, 0.55);
                out.push((format!("random-{i:02}"), graph_job(Suite::EcPaths, g)));
            }
            out
        }
    }
}

fn graph_job(suite: Suite, g: Graph) -> Job {
    match suite {
        Suite::Sandwich => job(move |p| {
            for h in [
                pattern_graph(PatternKind::Path, &[2]),
                pattern_graph(PatternKind::Cycle, &[3]),
                pattern_graph(PatternKind::Matching, &[2]),
            ] {
                sandwich(p, &h, &g)?;
            }
            Ok(())
        }),
        Suite::EihomPoly => job(move |p| {
            for h in [
                pattern_graph(PatternKind::Wedges, &[2]),
                pattern_graph(PatternKind::Biclique, &[2, 3]),
                pattern_graph(PatternKind::Matching, &[3]),
            ] {
                poly(p, &h, &g)?;
            }
            Ok(())
        }),
        Suite::MatchHolant => job(move |p| {
            let k = g.num_colors() as usize;
            let direct = crate::numeric::rat_from_count(&count_matchings(&g, k, true)?);
            p.eq("ColHolant(match signature graph)", col_holant(&build_match_holant(&g)?, &Caps::default())?, direct.clone());
            p.eq("ColHolant(bipartite signature graph)", col_holant(&build_omega_bip(&g)?.omega, &Caps::default())?, direct);
            Ok(())
        }),
        Suite::Subdiv => job(move |p| {
            let direct = count_matchings(&g, g.num_colors() as usize, true)?;
            p.eq("via subdivision", colmatch_via_subdivision(&g)?, direct.clone());
            p.eq("via uncolored", colmatch_via_uncolored(&g)?, direct);
            Ok(())
        }),
        Suite::Wedge => match BipartiteInstance::infer(g) {
            Ok(inst) => wedge_job(inst),
            Err(e) => job(move |_| Err(e.clone())),
        },
        Suite::OddGf2 => odd_job(g, None),
        Suite::Apex => job(move |p| {
            let caps = Caps::default();
            p.eq("k=1", count_matchings_via_apex(&g, 1, &caps)?, Count::from(g.m()));
            for k in 0..=2 {
                p.eq(&format!("k={k}"), count_matchings_via_apex(&g, k, &caps)?, count_matchings(&g, k, false)?);
            }
            Ok(())
        }),
        Suite::Star => match BipartiteInstance::infer(g) {
            Ok(inst) => star_job(inst),
            Err(e) => job(move |_| Err(e.clone())),
        },
        Suite::CycleGadget => job(move |p| {
            p.eq(
                "simple triangles",
                count_simple_cycles_via_gadget(&g, 3, &Caps::pipeline())?,
                count_simple_cycles(&g, 3, &Caps::default())?,
            );
            Ok(())
        }),
        Suite::EcPaths => job(move |p| {
            let caps = Caps::default();
            for k in 3..=5 {
                p.eq(
                    &format!("k={k}"),
                    ec_cycles_via_paths(&g, k, None, &caps)?,
                    count_edge_disjoint(&g, k, WalkKind::Cycle, &caps)?,
                );
            }
            Ok(())
        }),
        other => unreachable!("suite {other} takes no graphs"),
    }
}

fn sandwich(p: &mut Probe, h: &Graph, g: &Graph) -> Result<()> {
    let caps = Caps::default();
    let emb = count_emb(h, g, &caps)?;
    let inj = count_edginj(h, g, &caps)?;
    let hom = count_hom(h, g, &caps)?;
    p.holds("Emb <= EdgInj", emb <= inj);
    p.holds("EdgInj <= Hom", inj <= hom);
    p.eq("partition sum", count_edginj_via_partition_sum(h, g, &caps)?, inj);
    Ok(())
}

fn sandwich_job(h: Graph, g: Graph) -> Job {
    job(move |p| sandwich(p, &h, &g))
}

fn poly(p: &mut Probe, h: &Graph, g: &Graph) -> Result<()> {
    let caps = Caps::default();
    p.eq("polynomial-time count", count_edginj_poly(h, g, &caps)?, count_edginj(h, g, &caps)?);
    Ok(())
}

fn poly_job(h: Graph, g: Graph) -> Job {
    job(move |p| poly(p, &h, &g))
}

fn classes_job(h: Graph) -> Job {
    job(move |p| {
        let caps = Caps::default();
        let cover = min_vertex_cover(&h, caps.cover_search_vertices)?;
        let classes = enumerate_classes(&h, &cover)?;
        let mut members: std::collections::BTreeMap<_, Vec<crate::Partition>> = std::collections::BTreeMap::new();
        let mut total_parts = 0usize;
        for rho in all_partitions(h.n(), caps.partition_ground)? {
            if !matches!(quotient(&h, &rho)?, Quotient::Simple { edge_injective: true, .. }) {
                continue;
            }
            total_parts += 1;
            match class_of(&h, &cover, &rho)? {
                Some(key) => members.entry(key).or_default().push(rho),
                None => p.holds("every edge-injective partition has a class", false),
            }
        }
        let sizes: Count = classes.iter().map(|(r, a)| class_size(r, a, &h)).sum();
        p.eq("Σ class sizes", sizes, Count::from(total_parts));
        p.eq("classes realized", members.len(), classes.len());
        for (rho_c, alloc) in &classes {
            let key = (rho_c.clone(), alloc.clone());
            let group = members.get(&key).map(Vec::as_slice).unwrap_or(&[]);
            p.eq("class size", class_size(rho_c, alloc, &h), Count::from(group.len()));
            let Some(rep) = build_representative(rho_c, alloc, &h) else {
                p.holds("representative exists", false);
                continue;
            };
            let Quotient::Simple { graph: rq, .. } = quotient(&h, &rep)? else {
                p.holds("representative quotient is simple", false);
                continue;
            };
            for rho in group {
                if let Quotient::Simple { graph, .. } = quotient(&h, rho)? {
                    p.holds("quotient isomorphic to representative's", is_isomorphic(&graph, &rq, &caps)?);
                }
            }
        }
        Ok(())
    })
}

/// Splits the signature at up to two vertices of the matching signature
/// graph into random rational combinations and checks the expansion.
fn random_decomposition_job(g: Graph, seed: u64) -> Job {
    job(move |p| {
        let caps = Caps::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let omega = build_match_holant(&g)?;
        let mut verts: Vec<usize> = (0..omega.n()).filter(|&v| (1..=5).contains(&omega.degree(v))).collect();
        verts.shuffle(&mut rng);
        verts.truncate(rng.gen_range(1..=2));
        let mut decomposition = Vec::new();
        for &v in &verts {
            let d = omega.degree(v);
            let target: Vec<Rational> = (0..1usize << d).map(|m| rat((m.count_ones() <= 1) as i64)).collect();
            let t = rng.gen_range(1..=3);
            let mut rest = target.clone();
            let mut terms = Vec::new();
            for _ in 0..t - 1 {
                let c = rat(*[-3i64, -2, -1, 1, 2, 3].choose(&mut rng).unwrap());
                let table: Vec<Rational> = (0..1usize << d).map(|_| rat(rng.gen_range(-3..=3))).collect();
                for (r, x) in rest.iter_mut().zip(&table) {
                    *r -= &c * x;
                }
                terms.push((c, Signature::Table(table)));
            }
            let c = rat(*[-2i64, -1, 1, 2].choose(&mut rng).unwrap());
            let last: Vec<Rational> = rest.iter().map(|r| r / &c).collect();
            terms.push((c, Signature::Table(last)));
            decomposition.push((v, terms));
        }
        expansion_matches(p, &omega, &decomposition, &caps)
    })
}

fn expansion_matches(p: &mut Probe, omega: &SignatureGraph, decomposition: &[(usize, Vec<(Rational, Signature)>)], caps: &Caps) -> Result<()> {
    let expanded = expand_combined(omega, decomposition, caps)?;
    let expected_terms: usize = decomposition.iter().map(|(_, t)| t.len()).product();
    p.eq("expansion size", expanded.len(), expected_terms);
    let mut total = Rational::zero();
    for (c, h) in &expanded {
        total += c * col_holant(h, caps)?;
    }
    p.eq("Σ coefficient · ColHolant", total, col_holant(omega, caps)?);
    Ok(())
}

fn gamma_decomposition_job(g: Graph) -> Job {
    job(move |p| {
        let caps = Caps::default();
        let bip = build_omega_bip(&g)?;
        let mut decomposition = Vec::new();
        for (idx, class) in bip.class_edges.iter().enumerate() {
            if class.is_empty() {
                continue;
            }
            let coefs = gamma_coefficients(class.len());
            let mut terms = Vec::new();
            for variant in 1..=2u8 {
                let gamma = build_gamma(variant, idx as u32 + 1, class)?;
                terms.push((coefs[variant as usize - 1].clone(), matchgate_signature(gamma)));
            }
            decomposition.push((bip.w[idx], terms));
        }
        if decomposition.is_empty() {
            p.eq("empty class count", col_holant(&bip.omega, &caps)?, Rational::zero());
            return Ok(());
        }
        expansion_matches(p, &bip.omega, &decomposition, &caps)
    })
}

fn gamma_job(m: usize) -> Job {
    job(move |p| {
        let caps = Caps::default();
        let ann: Vec<usize> = (0..m).collect();
        let one = build_gamma(1, 1, &ann)?;
        let two = build_gamma(2, 1, &ann)?;
        let [c1, c2] = gamma_coefficients(m);
        let mm = m as i64;
        for j1 in 1..=m {
            for j2 in 1..=m {
                let x = [2 * j1 - 1, 2 * j2];
                let v2 = col_sig(&two, &x, &caps)?;
                let want = if j1 == j2 { mm * mm - 3 * mm + 2 } else { mm * mm - 3 * mm + 3 };
                p.eq(&format!("ColSig(Γ2)({j1},{j2})"), v2.clone(), rat(want));
                let v1 = col_sig(&one, &x, &caps)?;
                p.eq(&format!("ColSig(Γ1)({j1},{j2})"), v1.clone(), rat(1));
                p.eq(
                    &format!("combination at ({j1},{j2})"),
                    &c1 * v1 + &c2 * v2,
                    rat((j1 == j2) as i64),
                );
            }
        }
        Ok(())
    })
}

fn interpolation_job(k: usize, levels: Vec<Vec<u64>>) -> Job {
    job(move |p| {
        let lv: Vec<Vec<Rational>> = levels
            .iter()
            .map(|l| l.iter().map(|&x| rat(x as i64)).collect())
            .collect();
        let samples = forward_samples(&lv, 3 * k)?;
        let got = recover_unknowns(k, &samples)?;
        for (t, (a, b)) in got.iter().zip(&lv[k]).enumerate() {
            p.eq(&format!("a_{{{t},{}}}", k - t), a.clone(), b.clone());
        }
        Ok(())
    })
}

fn sigma_job(r: usize, k: usize) -> Job {
    job(move |p| {
        for (i, poly) in sigma_expand(r, k)?.iter().enumerate() {
            p.eq(&format!("deg σ_{i}"), poly.degree().unwrap_or(0), i);
            p.eq(&format!("lead σ_{i}"), poly.coeff(i), sigma_leading(r, k, i));
        }
        Ok(())
    })
}

fn wedge_job(inst: BipartiteInstance) -> Job {
    job(move |p| {
        let caps = caps_with_pattern(9);
        let n = inst.left_vertices().len();
        let alpha = wedge_alpha_oracle(&inst, 3, &caps)?;
        for k in 0..=3usize {
            let m = count_matchings(&inst.graph, k, false)?;
            p.eq(&format!("α_{{{k},0}}"), alpha[&(k, 0)].clone(), &m * factorial(k as u64) << k);
            p.eq(&format!("pipeline k={k}"), count_matchings_via_wedges(&inst, k)?, m);
            for r in 0..=3 {
                let gr = build_gr(&inst, r)?;
                let brute = if k == 0 {
                    Count::one()
                } else {
                    count_edginj(&pattern_graph(PatternKind::Wedges, &[k]), &gr, &caps)?
                };
                p.eq(&format!("β identity k={k} r={r}"), wedge_beta_from_alpha(&alpha, k, n, r)?, brute.clone());
                p.eq(&format!("wedge counter k={k} r={r}"), count_edginj_wedges(&gr, k)?, brute);
            }
        }
        Ok(())
    })
}

fn odd_job(g: Graph, literal: Option<u64>) -> Job {
    job(move |p| {
        let fast = count_odd_edge_sets(&g);
        p.eq("GF(2) vs enumeration", fast.clone(), count_odd_edge_sets_enum(&g, &Caps::default())?);
        if let Some(x) = literal {
            p.eq("known value", fast, Count::from(x));
        }
        Ok(())
    })
}

fn collar_job(ell: usize) -> Job {
    job(move |p| {
        let counts = collar_counts(ell, &Caps::default())?;
        p.eq("neither end", counts[0].clone(), Count::one());
        p.eq("one end", counts[1].clone(), Count::zero());
        p.eq("both ends", counts[2].clone(), BigUint::from(3u32).pow(ell as u32));
        Ok(())
    })
}

fn cubic_corpus() -> Vec<(&'static str, Graph)> {
    let prism = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
    let cube_edges: Vec<(usize, usize)> = (0..8usize)
        .flat_map(|v| [1, 2, 4].into_iter().map(move |b| (v, v ^ b)))
        .filter(|&(u, v)| u < v)
        .collect();
    let petersen_edges: Vec<(usize, usize)> = (0..5)
        .flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)])
        .collect();
    vec![
        ("K4", pattern_graph(PatternKind::Clique, &[4])),
        ("K33", pattern_graph(PatternKind::Biclique, &[3, 3])),
        ("prism", prism),
        ("cube", Graph::new(8, &cube_edges).unwrap()),
        ("petersen", Graph::new(10, &petersen_edges).unwrap()),
    ]
}

fn line_job(cubic: Graph, is_k4: bool) -> Job {
    job(move |p| {
        let caps = Caps::default();
        let g = line_graph(&subdivide(&cubic, 1));
        p.holds("at most 30 vertices", g.n() <= 30);
        let fast = count_perfmatch_3regular_line(&g, &caps)?;
        p.eq("odd-set route vs perfect-matching oracle", fast.clone(), count_perfect_matchings(&g, &caps)?);
        if is_k4 {
            p.eq("known value", fast, Count::from(8u32));
        }
        Ok(())
    })
}

fn pipeline_job(cubic: Graph, ell: usize, literal: Option<u64>) -> Job {
    job(move |p| {
        let caps = Caps::default();
        let via = perfmatch_via_line_reduction(&cubic, ell, &caps)?;
        p.eq("reduction vs oracle", via.clone(), count_perfect_matchings(&cubic, &caps)?);
        if let Some(x) = literal {
            p.eq("known value", via, Count::from(x));
        }
        Ok(())
    })
}

fn digits_job(r: u64, digits: Vec<u64>) -> Job {
    job(move |p| {
        let base = Count::from(r);
        let total = digits
            .iter()
            .fold(Count::zero(), |acc, &d| acc * &base + Count::from(d));
        let back = extract_digits_base_r(&total, &base, digits.len() - 1)?;
        let want: Vec<Count> = digits.iter().map(|&d| Count::from(d)).collect();
        p.holds("digits round trip", back == want);
        Ok(())
    })
}

fn apex_c4_job() -> Job {
    job(|p| {
        let c4 = pattern_graph(PatternKind::Cycle, &[4]);
        let caps = Caps::default();
        let raw = apex_triangle_count(&c4, 2, &caps)?;
        let m2 = count_matchings(&c4, 2, false)?;
        p.eq("EdgInj(2·K3, C4+apex)", raw, &m2 * factorial(2) * BigUint::from(36u32));
        p.eq("2-matchings", count_matchings_via_apex(&c4, 2, &caps)?, m2.clone());
        p.eq("known value", m2, Count::from(2u32));
        Ok(())
    })
}

fn star_job(inst: BipartiteInstance) -> Job {
    job(move |p| {
        let caps = Caps::default();
        let host = build_star_host(&inst)?;
        p.eq("anchor degree", host.degree(2), 1);
        for k in 0..=2 {
            p.eq(&format!("k={k}"), count_matchings_via_star(&inst, k, &caps)?, count_matchings(&inst.graph, k, false)?);
        }
        Ok(())
    })
}

fn literal_cycles_job(g: Graph, literal: u64) -> Job {
    job(move |p| {
        let via = count_simple_cycles_via_gadget(&g, 3, &Caps::pipeline())?;
        p.eq("vs simple-cycle oracle", via.clone(), count_simple_cycles(&g, 3, &Caps::default())?);
        p.eq("known value", via, Count::from(literal));
        Ok(())
    })
}

fn unweight_job(g: Graph) -> Job {
    job(move |p| {
        let rep = unweight_cycles(&g, 4, &Caps::pipeline())?;
        match rep.holds() {
            Some(ok) => p.holds(&format!("EdgInj(C_{}, G') = (2W+1)·WEdgInj(C_4, G)", rep.cycle_len), ok),
            None => return Err(Error::cap("unweighted cycle length", Caps::pipeline().pattern_vertices, rep.cycle_len)),
        }
        Ok(())
    })
}

fn literal_ec_job(g: Graph, k: usize, literal: u64) -> Job {
    job(move |p| {
        let caps = Caps::default();
        let via = ec_cycles_via_paths(&g, k, None, &caps)?;
        p.eq("vs cycle oracle", via.clone(), count_edge_disjoint(&g, k, WalkKind::Cycle, &caps)?);
        p.eq("known value", via, Count::from(literal));
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert!((1..=8).contains(&s.group()));
        }
        assert!("nope".parse::<Suite>().is_err());
        for g in 1..=8 {
            assert!(!Suite::in_group(g).is_empty());
        }
    }

    #[test]
    fn generators_respect_conditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let inst = random_bipartite(&mut rng, 3..=3, 4..=4);
            assert!(BipartiteInstance::new(inst.graph.clone(), inst.left.clone()).is_ok());
            let g = random_colored(&mut rng, 5..=5, 6, 3);
            assert_eq!(g.num_colors(), 3);
            assert!(g.m() <= 6);
        }
    }

    #[test]
    fn quick_suites_pass() {
        for s in [Suite::Gamma, Suite::Collar, Suite::Sigma, Suite::Digits] {
            let rep = run_suite(s, DEFAULT_SEED);
            assert!(rep.passed(), "{s}: {:?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn supplied_graphs() {
        let graphs = vec![("k4".to_string(), pattern_graph(PatternKind::Clique, &[4]))];
        let rep = run_suite_on(Suite::EcPaths, &graphs).unwrap();
        assert!(rep.passed());
        assert!(run_suite_on(Suite::Collar, &graphs).is_err());
        let bad = run_suite_on(Suite::Wedge, &graphs).unwrap();
        assert!(matches!(bad.checks[0].outcome, Outcome::Error(_)));
    }
}
