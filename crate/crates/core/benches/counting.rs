use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use edginj::eihom::count_edginj_poly;
use edginj::oracles::count_edginj;
use edginj::par::{set_policy, Policy};
use edginj::patterns::pattern_graph;
use edginj::reductions::{count_matchings_via_wedges, count_simple_cycles_via_gadget, BipartiteInstance};
use edginj::verify::{random_bipartite, random_graph, run_suite, Suite, DEFAULT_SEED};
use edginj::{Caps, PatternKind};

const POLICIES: [(&str, Policy); 2] = [("sequential", Policy::Sequential), ("parallel", Policy::Parallel)];

fn policies(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let host = random_graph(&mut rng, 40..=40, 0.25);
    let small_host = random_graph(&mut rng, 9..=9, 0.5);
    let star = pattern_graph(PatternKind::Biclique, &[2, 4]);
    let inst: BipartiteInstance = random_bipartite(&mut rng, 4..=4, 6..=6);
    let k4 = pattern_graph(PatternKind::Clique, &[4]);
    let caps = Caps::default();

    let mut group = c.benchmark_group("policy");
    group.sample_size(10);
    for (name, policy) in POLICIES {
        set_policy(policy);
        group.bench_with_input(BenchmarkId::new("edginj_poly K2,4", name), &host, |b, g| {
            b.iter(|| count_edginj_poly(&star, g, &caps).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("edginj_oracle K2,4", name), &small_host, |b, g| {
            b.iter(|| count_edginj(&star, g, &caps).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("matchings_via_wedges k=3", name), &inst, |b, i| {
            b.iter(|| count_matchings_via_wedges(i, 3).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("cycle_gadget K4 k=3", name), &k4, |b, g| {
            b.iter(|| count_simple_cycles_via_gadget(g, 3, &Caps::pipeline()).unwrap())
        });
        group.bench_function(BenchmarkId::new("suite sandwich", name), |b| {
            b.iter(|| run_suite(Suite::Sandwich, DEFAULT_SEED))
        });
    }
    set_policy(Policy::Parallel);
    group.finish();
}

criterion_group!(benches, policies);
criterion_main!(benches);
