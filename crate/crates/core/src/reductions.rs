//! Reduction pipelines that turn one counting problem into queries for
//! another, each checkable end to end against brute force:
//!
//! * k-matchings in restricted bipartite graphs from wedge-packing counts on
//!   the hub graphs `G^r`, by interpolation in `r`;
//! * k-matchings from triangle packings in the apex graph and from
//!   subdivided stars in the hub graph with a pendant anchor path;
//! * simple k-cycles from weighted edge-disjoint `6k`-cycles in a gadget
//!   host, by interpolation in the gadget weight;
//! * weighted edge-disjoint cycles from unweighted ones via path gadgets;
//! * edge-disjoint cycles from edge-disjoint paths by inclusion–exclusion.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeSpec, Graph};
use crate::numeric::{binomial, factorial, interpolate, rat, rat_from_count, recover_unknowns, required_samples, to_count, Polynomial, Rational};
use crate::oracles::{count_edge_disjoint, count_edginj, exact_div, exact_div_big, fold_maps, Caps, MapKind, WalkKind};
use crate::patterns::{make_pattern, pattern_graph, PatternKind};
use crate::{par, Count};

/// A bipartite graph with a chosen left side, satisfying the conditions the
/// matching reductions need: right vertices have degree at most 2 and two
/// left vertices share at most one neighbour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteInstance {
    pub graph: Graph,
    pub left: Vec<bool>,
}

fn check_sides(g: &Graph, left: &[bool], verts: &[usize]) -> Result<()> {
    let mut pairs = std::collections::HashSet::new();
    for &v in verts {
        for &(w, _) in g.neighbors(v) {
            if left[v] == left[w] {
                return Err(Error::Precondition(format!("edge {v}-{w} lies within one side")));
            }
        }
        if left[v] {
            continue;
        }
        let nb: Vec<usize> = g.neighbors(v).iter().map(|&(w, _)| w).collect();
        if nb.len() > 2 {
            return Err(Error::Precondition(format!("right vertex {v} has degree {}", nb.len())));
        }
        if nb.len() == 2 && !pairs.insert((nb[0], nb[1])) {
            return Err(Error::Precondition(format!(
                "left vertices {} and {} share two neighbours",
                nb[0], nb[1]
            )));
        }
    }
    Ok(())
}

impl BipartiteInstance {
    pub fn new(graph: Graph, left: Vec<bool>) -> Result<Self> {
        if left.len() != graph.n() {
            return Err(Error::Precondition("side vector has the wrong length".into()));
        }
        let all: Vec<usize> = (0..graph.n()).collect();
        check_sides(&graph, &left, &all)?;
        Ok(BipartiteInstance { graph, left })
    }

    /// Picks, per component, a side assignment that satisfies the
    /// conditions, preferring the side of the smallest vertex as left.
    pub fn infer(graph: Graph) -> Result<Self> {
        let side = graph
            .bipartition()
            .ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
        let mut left: Vec<bool> = side.iter().map(|&s| !s).collect();
        for comp in graph.components() {
            if check_sides(&graph, &left, &comp).is_ok() {
                continue;
            }
            for &v in &comp {
                left[v] = !left[v];
            }
            check_sides(&graph, &left, &comp)?;
        }
        Ok(BipartiteInstance { graph, left })
    }

    pub fn left_vertices(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| self.left[v]).collect()
    }

    /// Right vertices of degree exactly 1.
    pub fn pendant_right(&self) -> Vec<usize> {
        (0..self.graph.n())
            .filter(|&v| !self.left[v] && self.graph.degree(v) == 1)
            .collect()
    }

    /// Hub graph with `extra` vertices after the hub: vertex 0 joined to
    /// every left vertex, degree-2 right vertices replaced by an edge on
    /// their neighbourhood, degree-0 right vertices dropped. Left vertices
    /// follow the extra block, then degree-1 right vertices. Returns the
    /// edge list and the vertex count.
    fn hub_edges(&self, extra: usize) -> (usize, Vec<(usize, usize)>) {
        let g = &self.graph;
        let mut id = vec![usize::MAX; g.n()];
        let mut next = 1 + extra;
        for v in self.left_vertices().into_iter().chain(self.pendant_right()) {
            id[v] = next;
            next += 1;
        }
        let mut edges = Vec::new();
        for v in self.left_vertices() {
            edges.push((0, id[v]));
        }
        for v in 0..g.n() {
            if self.left[v] {
                continue;
            }
            let nb: Vec<usize> = g.neighbors(v).iter().map(|&(w, _)| id[w]).collect();
            match nb.len() {
                1 => edges.push((nb[0], id[v])),
                2 => edges.push((nb[0], nb[1])),
                _ => {}
            }
        }
        (next, edges)
    }
}

/// `G^r`: the hub graph with `r` special leaves `1..=r` on the hub `0`.
pub fn build_gr(inst: &BipartiteInstance, r: usize) -> Result<Graph> {
    let (n, mut edges) = inst.hub_edges(r);
    edges.extend((1..=r).map(|s| (0, s)));
    Graph::new(n, &edges)
}

/// Counts of `k`-wedge packings in `G^0` split by wedge type, and of
/// `k`-wedge packings in `G^r` for chosen `r`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WedgeStats {
    /// `(good, bad)` → edge-injective maps from `(good+bad)·P_2` to `G^0`
    /// in which every wedge is good or bad as given, none test.
    pub alpha: BTreeMap<(usize, usize), Count>,
    /// `r` → `#EdgInj(k·P_2, G^r)`.
    pub beta: BTreeMap<usize, Count>,
}

/// Classifies every edge-injective map from `j·P_2` into `G^0`, for
/// `j <= k`, by how many of each wedge's two edges touch the hub: two is a
/// test wedge, one good, none bad. Maps with a test wedge are discarded.
pub fn wedge_alpha_oracle(inst: &BipartiteInstance, k: usize, caps: &Caps) -> Result<BTreeMap<(usize, usize), Count>> {
    let g0 = build_gr(inst, 0)?;
    let mut alpha = BTreeMap::new();
    alpha.insert((0, 0), Count::one());
    for j in 1..=k {
        let h = pattern_graph(PatternKind::Wedges, &[j]);
        let parts = fold_maps(
            &h,
            &g0,
            MapKind::EdgeInjective,
            caps,
            || vec![0u64; j + 1],
            |hist, _, img| {
                let mut good = 0;
                for w in 0..j {
                    let hub = (g0.edge(img[2 * w]).0 == 0) as usize + (g0.edge(img[2 * w + 1]).0 == 0) as usize;
                    match hub {
                        2 => return,
                        1 => good += 1,
                        _ => {}
                    }
                }
                hist[good] += 1;
            },
        )?;
        for good in 0..=j {
            let total: Count = parts.iter().map(|p| Count::from(p[good])).sum();
            alpha.insert((good, j - good), total);
        }
    }
    Ok(alpha)
}

/// Right-hand side of the wedge identity:
/// `Σ_{t+g+b=k} α_{g,b} · C(k, g+b) · (n+r-g)_{2t}` with `n = |L|`.
pub fn wedge_beta_from_alpha(alpha: &BTreeMap<(usize, usize), Count>, k: usize, n: usize, r: usize) -> Result<Count> {
    let mut total = Count::zero();
    for t in 0..=k {
        for good in 0..=k - t {
            let bad = k - t - good;
            let a = alpha
                .get(&(good, bad))
                .ok_or_else(|| Error::Precondition(format!("missing α_{{{good},{bad}}}")))?;
            let leaves = (n + r) as i64 - good as i64;
            let mut ff = BigInt::one();
            for i in 0..2 * t as i64 {
                ff *= leaves - i;
            }
            if ff.sign() == num_bigint::Sign::Minus {
                return Err(Error::Inconsistent("negative falling factorial".into()));
            }
            total += a * binomial(k as u64, (k - t) as u64) * ff.to_biguint().unwrap_or_default();
        }
    }
    Ok(total)
}

/// `WedgeStats` with α from [`wedge_alpha_oracle`] and β by brute force on
/// `G^r` for each requested `r`.
pub fn wedge_stats(inst: &BipartiteInstance, k: usize, rs: &[usize], caps: &Caps) -> Result<WedgeStats> {
    let alpha = wedge_alpha_oracle(inst, k, caps)?;
    let h = pattern_graph(PatternKind::Wedges, &[k.max(1)]);
    let mut beta = BTreeMap::new();
    for &r in rs {
        let value = if k == 0 { Count::one() } else { count_edginj(&h, &build_gr(inst, r)?, caps)? };
        beta.insert(r, value);
    }
    Ok(WedgeStats { alpha, beta })
}

const MAX_FRONTIER_EDGES: usize = 128;
const MAX_OUT_DEGREE: usize = 20;

/// Number of sets of `j` pairwise disjoint pairs of adjacent edges, for
/// `j = 0..=kmax`. Multiplied by `2^j · j!` this is `#EdgInj(j·P_2, g)`.
///
/// Vertices are processed by increasing degree; every pair is charged to
/// its shared vertex. The state records which edges crossing the processed
/// frontier are still free.
pub fn count_wedge_packings(g: &Graph, kmax: usize) -> Result<Vec<Count>> {
    if g.m() > MAX_FRONTIER_EDGES {
        return Err(Error::cap("wedge packing edges", MAX_FRONTIER_EDGES, g.m()));
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut done = vec![false; g.n()];
    // pairings[s] = perfect matchings of s items
    let pairings: Vec<Count> = (0..=g.m())
        .map(|s| {
            if s % 2 == 1 {
                Count::zero()
            } else {
                factorial(s as u64) / (factorial(s as u64 / 2) << (s / 2))
            }
        })
        .collect();
    let mut states: HashMap<u128, Vec<Count>> = HashMap::new();
    let mut unit = vec![Count::zero(); kmax + 1];
    unit[0] = Count::one();
    states.insert(0, unit);
    for &v in &order {
        let mut incoming = 0u128;
        let mut outgoing = Vec::new();
        for &(w, e) in g.neighbors(v) {
            if done[w] {
                incoming |= 1 << e;
            } else {
                outgoing.push(e);
            }
        }
        if outgoing.len() > MAX_OUT_DEGREE {
            return Err(Error::cap("wedge packing out-degree", MAX_OUT_DEGREE, outgoing.len()));
        }
        let mut next: HashMap<u128, Vec<Count>> = HashMap::new();
        for (mask, poly) in states {
            let free_in = (mask & incoming).count_ones() as usize;
            let rest = mask & !incoming;
            for t in 0u32..(1 << outgoing.len()) {
                let taken = t.count_ones() as usize;
                let mut new_mask = rest;
                for (bit, &e) in outgoing.iter().enumerate() {
                    if t >> bit & 1 == 0 {
                        new_mask |= 1 << e;
                    }
                }
                for i in 0..=free_in {
                    let s = i + taken;
                    if s % 2 == 1 || s / 2 > kmax {
                        continue;
                    }
                    let ways = binomial(free_in as u64, i as u64) * &pairings[s];
                    let slot = next.entry(new_mask).or_insert_with(|| vec![Count::zero(); kmax + 1]);
                    for (j, c) in poly.iter().enumerate() {
                        if j + s / 2 > kmax || c.is_zero() {
                            continue;
                        }
                        slot[j + s / 2] += c * &ways;
                    }
                }
            }
        }
        states = next;
        done[v] = true;
    }
    let mut out = vec![Count::zero(); kmax + 1];
    for poly in states.into_values() {
        for (j, c) in poly.into_iter().enumerate() {
            out[j] += c;
        }
    }
    Ok(out)
}

/// `#EdgInj(k·P_2, g)` through [`count_wedge_packings`].
pub fn count_edginj_wedges(g: &Graph, k: usize) -> Result<Count> {
    let w = count_wedge_packings(g, k)?;
    Ok(&w[k] * factorial(k as u64) << k)
}

/// An oracle for `#EdgInj(k·P_2, G)`.
pub type WedgeOracle<'a> = &'a (dyn Fn(usize, &Graph) -> Result<Count> + Sync);

/// `P_j(y)` for `j = 0..=jmax`: `#EdgInj(j·P_2, G^r)` as a polynomial in
/// `y = |L| + r`, interpolated from `r = 0..=2j`.
pub fn wedge_polynomials(inst: &BipartiteInstance, jmax: usize, oracle: WedgeOracle) -> Result<Vec<Polynomial>> {
    let n = inst.left_vertices().len();
    let jobs: Vec<(usize, usize)> = (0..=jmax).flat_map(|j| (0..=2 * j).map(move |r| (j, r))).collect();
    let values = par::try_map(jobs.clone(), |(j, r)| oracle(j, &build_gr(inst, r)?))?;
    let mut by_j: Vec<Vec<(Rational, Rational)>> = vec![Vec::new(); jmax + 1];
    for ((j, r), v) in jobs.into_iter().zip(values) {
        by_j[j].push((rat(r as i64), rat_from_count(&v)));
    }
    by_j.into_iter()
        .map(|pts| Ok(interpolate(&pts)?.shift(&rat(-(n as i64)))))
        .collect()
}

/// k-matchings of `inst` from wedge-packing counts: recovers `α_{k,0}` from
/// `P_0 ..= P_{3k}` and divides by `2^k · k!`.
pub fn count_matchings_via_wedges_with(inst: &BipartiteInstance, k: usize, oracle: WedgeOracle) -> Result<Count> {
    if k == 0 {
        return Ok(Count::one());
    }
    let polys = wedge_polynomials(inst, required_samples(k) - 1, oracle)?;
    let level = recover_unknowns(k, &polys)?;
    let alpha = level.last().expect("level k has k+1 entries");
    let alpha = to_count(alpha).ok_or_else(|| Error::Inconsistent(format!("α_{{{k},0}} = {alpha} is not a count")))?;
    let div = factorial(k as u64) << k;
    exact_div_big(&alpha, &div, "wedge packings per matching")
}

pub fn count_matchings_via_wedges(inst: &BipartiteInstance, k: usize) -> Result<Count> {
    count_matchings_via_wedges_with(inst, k, &|j, g| count_edginj_wedges(g, j))
}

/// `g` plus an apex joined to every vertex; the apex is vertex `g.n()`.
pub fn apex_graph(g: &Graph) -> Graph {
    let mut edges = g.edges().to_vec();
    edges.extend((0..g.n()).map(|v| (v, g.n())));
    Graph::new(g.n() + 1, &edges).expect("apex graph is simple")
}

/// `#EdgInj(k·K_3, g + apex)` for bipartite `g`.
pub fn apex_triangle_count(g: &Graph, k: usize, caps: &Caps) -> Result<Count> {
    if g.bipartition().is_none() {
        return Err(Error::Precondition("apex reduction needs a bipartite graph".into()));
    }
    if k == 0 {
        return Ok(Count::one());
    }
    count_edginj(&pattern_graph(PatternKind::Triangles, &[k]), &apex_graph(g), caps)
}

/// k-matchings of bipartite `g` as `#EdgInj(k·K_3, g + apex) / (6^k · k!)`.
pub fn count_matchings_via_apex(g: &Graph, k: usize, caps: &Caps) -> Result<Count> {
    let total = apex_triangle_count(g, k, caps)?;
    let div = factorial(k as u64) * BigUint::from(6u32).pow(k as u32);
    exact_div_big(&total, &div, "triangle packings per matching")
}

/// Hub graph with the anchor path `0–1–2`; left vertices start at 3.
pub fn build_star_host(inst: &BipartiteInstance) -> Result<Graph> {
    let (n, mut edges) = inst.hub_edges(2);
    edges.push((0, 1));
    edges.push((1, 2));
    Graph::new(n, &edges)
}

/// k-matchings as `(s(G') - s(G' - {2})) / (k+1)!` where `s` counts
/// edge-injective maps from the subdivided star with `k+1` rays. For
/// `k = 0` the star is a path whose centre is a leaf, so the identity needs
/// `k >= 1` and the empty matching is returned directly.
pub fn count_matchings_via_star(inst: &BipartiteInstance, k: usize, caps: &Caps) -> Result<Count> {
    if k == 0 {
        return Ok(Count::one());
    }
    let host = build_star_host(inst)?;
    let star = pattern_graph(PatternKind::SubdividedStar, &[k + 1]);
    let with = count_edginj(&star, &host, caps)?;
    let without = count_edginj(&star, &host.remove_vertices(&[2]), caps)?;
    if without > with {
        return Err(Error::Inconsistent("deleting a vertex increased the count".into()));
    }
    exact_div_big(&(with - without), &factorial(k as u64 + 1), "star maps per matching")
}

/// Vertex ids of the gadget for one host vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexGadget {
    /// The path `p1–p2–p3–p4`; `p2p3` carries the variable weight.
    pub path: [usize; 4],
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

/// Layout of the cycle gadget host, independent of the weight.
pub fn cycle_gadget_layout(g: &Graph) -> Vec<VertexGadget> {
    let mut next = 0;
    (0..g.n())
        .map(|v| {
            let d = g.degree(v);
            let path = [next, next + 1, next + 2, next + 3];
            let s = (next + 4..next + 4 + d).collect();
            let t = (next + 4 + d..next + 4 + 2 * d).collect();
            next += 4 + 2 * d;
            VertexGadget { path, s, t }
        })
        .collect()
}

/// Host `G_b`: every vertex `v` becomes the path `p1–p2–p3–p4` with `p2p3`
/// of weight `b`, ports `s^i_v` on `p1` and `t^i_v` on `p4` for each of its
/// `deg(v)` edges. The edge `{u,v}`, the `i`-th edge of `v` and the `j`-th of
/// `u` (incident edges in id order), is wired as `{s^i_v, t^j_u}` and
/// `{s^j_u, t^i_v}`. All other weights are 1.
pub fn build_cycle_gadget(g: &Graph, b: u64) -> Graph {
    let layout = cycle_gadget_layout(g);
    let mut specs = Vec::new();
    for gad in &layout {
        let [p1, p2, p3, p4] = gad.path;
        specs.push(EdgeSpec::weighted(p1, p2, 1));
        specs.push(EdgeSpec::weighted(p2, p3, b));
        specs.push(EdgeSpec::weighted(p3, p4, 1));
        for &s in &gad.s {
            specs.push(EdgeSpec::weighted(s, p1, 1));
        }
        for &t in &gad.t {
            specs.push(EdgeSpec::weighted(t, p4, 1));
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let i = g.incident_edges(v).iter().position(|&x| x == e).unwrap();
        let j = g.incident_edges(u).iter().position(|&x| x == e).unwrap();
        specs.push(EdgeSpec::weighted(layout[v].s[i], layout[u].t[j], 1));
        specs.push(EdgeSpec::weighted(layout[u].s[j], layout[v].t[i], 1));
    }
    let n = layout.last().map_or(0, |l| l.t.last().copied().unwrap_or(l.path[3]) + 1);
    Graph::from_specs(n, &specs, None).expect("gadget host is simple")
}

/// `Σ_{φ ∈ EdgInj(C_len, g)} Π w(φ(e))`, or the plain count when `g` has
/// no weights. Closed trails are enumerated once from their smallest edge
/// in both directions, pruned by distance back to the start, and multiplied
/// by `len` for the rotations.
pub fn count_closed_trails(g: &Graph, len: usize, caps: &Caps) -> Result<Count> {
    if len < 3 {
        return Err(Error::Precondition("closed trails need length >= 3".into()));
    }
    if len > caps.pattern_vertices {
        return Err(Error::cap("pattern vertices", caps.pattern_vertices, len));
    }
    let weight = |e: usize| g.weight(e).unwrap_or(1) as u128;
    let starts: Vec<(usize, bool)> = (0..g.m()).flat_map(|e| [(e, false), (e, true)]).collect();
    let total = par::try_sum(starts, |(first, flip)| -> Result<Count> {
        if weight(first) == 0 {
            return Ok(Count::zero());
        }
        let (mut from, mut to) = g.edge(first);
        if flip {
            std::mem::swap(&mut from, &mut to);
        }
        let dist = distances_above(g, from, first);
        let mut used = vec![false; g.m()];
        used[first] = true;
        let mut acc = Count::zero();
        trail_rec(g, to, from, len - 1, first, &dist, &mut used, weight(first), &weight, &mut acc)?;
        Ok(acc)
    })?;
    Ok(total * BigUint::from(len))
}

/// BFS distances from `src` using only edges with id above `floor`.
fn distances_above(g: &Graph, src: usize, floor: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[src] = 0;
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.neighbors(v) {
            if e > floor && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

#[allow(clippy::too_many_arguments)]
fn trail_rec(
    g: &Graph,
    at: usize,
    home: usize,
    left: usize,
    floor: usize,
    dist: &[usize],
    used: &mut [bool],
    prod: u128,
    weight: &dyn Fn(usize) -> u128,
    acc: &mut Count,
) -> Result<()> {
    if left == 0 {
        if at == home {
            *acc += prod;
        }
        return Ok(());
    }
    if dist[at] > left {
        return Ok(());
    }
    for &(w, e) in g.neighbors(at) {
        if e <= floor || used[e] {
            continue;
        }
        let we = weight(e);
        if we == 0 {
            continue;
        }
        let p = prod.checked_mul(we).ok_or(Error::Overflow("closed trail weight"))?;
        used[e] = true;
        trail_rec(g, w, home, left - 1, floor, dist, used, p, weight, acc)?;
        used[e] = false;
    }
    Ok(())
}

/// `p(b) = #WEdgInj(C_{6k}, G_b) / 12k`.
pub fn cycle_gadget_value(g: &Graph, k: usize, b: u64, caps: &Caps) -> Result<Count> {
    let host = build_cycle_gadget(g, b);
    exact_div(count_closed_trails(&host, 6 * k, caps)?, 12 * k as u64, "weighted gadget cycles")
}

/// Simple `k`-cycles of `g` as half the leading coefficient of `p`, which
/// is interpolated from `p(0), .., p(k)`.
pub fn count_simple_cycles_via_gadget(g: &Graph, k: usize, caps: &Caps) -> Result<Count> {
    if k < 3 {
        return Ok(Count::zero());
    }
    let values = par::try_map((0..=k as u64).collect(), |b| cycle_gadget_value(g, k, b, caps))?;
    let pts: Vec<(Rational, Rational)> = values
        .iter()
        .enumerate()
        .map(|(b, v)| (rat(b as i64), rat_from_count(v)))
        .collect();
    let p = interpolate(&pts)?;
    let lead = to_count(&p.coeff(k)).ok_or_else(|| Error::Inconsistent(format!("coefficient of x^{k} is {}", p.coeff(k))))?;
    exact_div(lead, 2, "leading gadget coefficient")
}

/// Result of the weight-removal construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnweightReport {
    pub graph: Graph,
    pub max_weight: u64,
    /// `2Wk + k`.
    pub cycle_len: usize,
    /// `#EdgInj(C_{2Wk+k}, G')`.
    pub unweighted: Option<Count>,
    /// `(2W+1) · #WEdgInj(C_k, G, w)`.
    pub scaled_weighted: Option<Count>,
}

impl UnweightReport {
    pub fn holds(&self) -> Option<bool> {
        Some(self.unweighted.as_ref()? == self.scaled_weighted.as_ref()?)
    }
}

/// Replaces every edge `{a,b}` of weight `w` by the gadget `H_w` (the
/// `W`-level path gadget keeping its first `w` marked edges) joined to `a`
/// and `b` through its two ends. Gadget vertices follow the host vertices,
/// one gadget per edge in id order.
pub fn unweight_graph(g: &Graph) -> Result<(Graph, u64)> {
    let weights = g
        .weights()
        .ok_or_else(|| Error::Precondition("weight removal needs a weighted graph".into()))?;
    if let Some(e) = weights.iter().position(|&w| w == 0) {
        return Err(Error::Precondition(format!("edge {e} has weight 0")));
    }
    let wmax = weights.iter().copied().max().unwrap_or(1);
    let mut edges = Vec::new();
    let mut n = g.n();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let gadget = make_pattern(PatternKind::GadgetTruncated, &[wmax as usize, weights[e] as usize])?;
        edges.extend(gadget.graph.edges().iter().map(|&(x, y)| (x + n, y + n)));
        edges.push((a, gadget.anchor("a") + n));
        edges.push((b, gadget.anchor("b") + n));
        n += gadget.graph.n();
    }
    Ok((Graph::new(n, &edges)?, wmax))
}

/// Builds the unweighted host and, when both sides fit the caps, evaluates
/// `#EdgInj(C_{2Wk+k}, G')` and `(2W+1) · #WEdgInj(C_k, G, w)`.
pub fn unweight_cycles(g: &Graph, k: usize, caps: &Caps) -> Result<UnweightReport> {
    if k < 4 {
        return Err(Error::Precondition("weight removal is stated for k >= 4".into()));
    }
    let (graph, wmax) = unweight_graph(g)?;
    if wmax as usize > k {
        return Err(Error::Precondition(format!("max weight {wmax} exceeds k = {k}")));
    }
    let cycle_len = (2 * wmax as usize + 1) * k;
    let settle = |r: Result<Count>| match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_cap() => Ok(None),
        Err(e) => Err(e),
    };
    let unweighted = settle(count_closed_trails(&graph, cycle_len, caps))?;
    let scaled_weighted = settle(count_closed_trails(g, k, caps).map(|c| c * (2 * wmax + 1)))?;
    Ok(UnweightReport {
        graph,
        max_weight: wmax,
        cycle_len,
        unweighted,
        scaled_weighted,
    })
}

/// `#WEdgInj(C_k, G, w)` from one unweighted count on the gadget host.
pub fn weighted_cycles_via_unweighting(g: &Graph, k: usize, caps: &Caps) -> Result<Count> {
    let (graph, wmax) = unweight_graph(g)?;
    let total = count_closed_trails(&graph, (2 * wmax as usize + 1) * k, caps)?;
    exact_div(total, 2 * wmax + 1, "unweighted gadget cycles")
}

/// Edge-disjoint `k`-cycles (closed trails, unrooted and unoriented).
/// Each cycle is charged to its largest vertex `v_i`: in `G_i` (vertices
/// `0..=i`) with pendants `s`, `t` on `v_i`, the trails of `path_len` edges
/// that use both pendants are counted by inclusion–exclusion over deleting
/// `s` and `t`. Each cycle through `v_i` yields two such trails, one per
/// direction, so the sum is halved.
///
/// With the default `path_len = k + 2` this matches the cycle count as long
/// as no closed `k`-trail revisits a vertex, which holds in simple graphs
/// for `k <= 5`.
pub fn ec_cycles_via_paths(g: &Graph, k: usize, path_len: Option<usize>, caps: &Caps) -> Result<Count> {
    let len = path_len.unwrap_or(k + 2);
    let terms = par::try_map((0..g.n()).collect(), |i| -> Result<BigInt> {
        let keep: Vec<usize> = (0..=i).collect();
        let gi = g.induced(&keep);
        let mut edges = gi.edges().to_vec();
        let (s, t) = (i + 1, i + 2);
        edges.push((i, s));
        edges.push((i, t));
        let gp = Graph::new(i + 3, &edges)?;
        let count = |drop: &[usize]| -> Result<BigInt> {
            Ok(BigInt::from(count_edge_disjoint(&gp.remove_vertices(drop), len, WalkKind::Path, caps)?))
        };
        Ok(count(&[])? - count(&[s])? - count(&[t])? + count(&[s, t])?)
    })?;
    let total: BigInt = terms.into_iter().sum();
    let total = total
        .to_biguint()
        .ok_or_else(|| Error::Inconsistent("inclusion–exclusion went negative".into()))?;
    exact_div(total, 2, "pendant trails per cycle")
}

/// Enumerates all trails from `a` to `b` as sorted edge-id lists.
pub fn trails_between(g: &Graph, a: usize, b: usize, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    if g.m() > caps.subset_edges * 2 {
        return Err(Error::cap("trail enumeration edges", caps.subset_edges * 2, g.m()));
    }
    fn rec(g: &Graph, at: usize, b: usize, used: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == b && !used.is_empty() {
            let mut t = used.clone();
            t.sort_unstable();
            out.push(t);
        }
        for &(w, e) in g.neighbors(at) {
            if !used.contains(&e) {
                used.push(e);
                rec(g, w, b, used, out);
                used.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, a, b, &mut Vec::new(), &mut out);
    Ok(out)
}
