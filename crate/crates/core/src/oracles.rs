//! Brute-force reference counters.
//!
//! Everything here is exponential and guarded by [`Caps`]; exceeding a cap
//! is reported as [`Error::CapExceeded`], never silently truncated. Edge
//! colors on patterns and hosts are ignored by the map counters.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{quotient, Graph, Quotient};
use crate::partition::all_partitions;
use crate::patterns::{pattern_graph, PatternKind};
use crate::{par, Count};

/// Enumeration limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Pattern vertices for hom/emb/edge-injective enumeration.
    pub pattern_vertices: usize,
    /// Host edges for `2^m` subset enumeration.
    pub subset_edges: usize,
    /// Ground-set size for partition enumeration.
    pub partition_ground: usize,
    /// Vertices for isomorphism testing.
    pub iso_vertices: usize,
    /// Vertices for perfect-matching counting.
    pub perfmatch_vertices: usize,
    /// Colorful assignments enumerated by Holant evaluation.
    pub holant_assignments: u128,
    /// Largest vertex cover handled by the small-cover algorithms.
    pub cover_bound: usize,
    /// Vertices for exhaustive vertex-cover search.
    pub cover_search_vertices: usize,
}

pub const ENV_MAX_PATTERN_VERTICES: &str = "EDGINJ_MAX_PATTERN_VERTICES";
pub const ENV_MAX_SUBSET_EDGES: &str = "EDGINJ_MAX_SUBSET_EDGES";

impl Default for Caps {
    fn default() -> Self {
        Caps {
            pattern_vertices: 8,
            subset_edges: 24,
            partition_ground: 8,
            iso_vertices: 16,
            perfmatch_vertices: 128,
            holant_assignments: 10_000_000,
            cover_bound: 4,
            cover_search_vertices: 24,
        }
    }
}

impl Caps {
    /// Defaults, overridden by `EDGINJ_MAX_PATTERN_VERTICES` and
    /// `EDGINJ_MAX_SUBSET_EDGES` when set to integers.
    pub fn from_env() -> Caps {
        Caps::default().with_env()
    }

    /// `self` with the environment overrides of [`Caps::from_env`] applied.
    pub fn with_env(mut self) -> Caps {
        let read = |name: &str| std::env::var(name).ok().and_then(|v| v.trim().parse::<usize>().ok());
        if let Some(v) = read(ENV_MAX_PATTERN_VERTICES) {
            self.pattern_vertices = v;
        }
        if let Some(v) = read(ENV_MAX_SUBSET_EDGES) {
            self.subset_edges = v;
        }
        self
    }

    /// Limits used internally by reduction pipelines, whose patterns (long
    /// cycles, wedge packings) are larger than the defaults allow.
    pub fn pipeline() -> Caps {
        Caps {
            pattern_vertices: 64,
            ..Caps::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Hom,
    Emb,
    EdgeInjective,
}

struct Plan {
    order: Vec<usize>,
    /// For the vertex at each position: `(earlier position, pattern edge id)`.
    back: Vec<Vec<(usize, usize)>>,
}

/// Greedy connected order: next is the vertex with most placed neighbours,
/// ties by degree then id.
fn plan(h: &Graph) -> Plan {
    let n = h.n();
    let mut placed = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut back = Vec::with_capacity(n);
    for pos in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if placed[v] != usize::MAX {
                continue;
            }
            let links = h.neighbors(v).iter().filter(|&&(w, _)| placed[w] != usize::MAX).count();
            let key = (links, h.degree(v), usize::MAX - v);
            if best.map_or(true, |b| key > b) {
                best = Some(key);
            }
        }
        let v = usize::MAX - best.unwrap().2;
        placed[v] = pos;
        let b: Vec<(usize, usize)> = h
            .neighbors(v)
            .iter()
            .filter(|&&(w, _)| placed[w] != usize::MAX && w != v)
            .map(|&(w, e)| (placed[w], e))
            .collect();
        order.push(v);
        back.push(b);
    }
    Plan { order, back }
}

struct Search<'a> {
    g: &'a Graph,
    kind: MapKind,
    plan: &'a Plan,
    phi: Vec<usize>,
    img: Vec<usize>,
    vused: Vec<bool>,
    eused: Vec<bool>,
}

impl Search<'_> {
    fn rec<A, V: Fn(&mut A, &[usize], &[usize])>(&mut self, pos: usize, acc: &mut A, visit: &V) {
        let plan = self.plan;
        if pos == plan.order.len() {
            visit(acc, &self.phi, &self.img);
            return;
        }
        let v = plan.order[pos];
        let back = &plan.back[pos];
        let g = self.g;
        let cands: Box<dyn Iterator<Item = usize>> = match back.first() {
            Some(&(q, _)) => Box::new(g.neighbors(self.phi[plan.order[q]]).iter().map(|&(w, _)| w)),
            None => Box::new(0..g.n()),
        };
        for c in cands {
            if self.kind == MapKind::Emb && self.vused[c] {
                continue;
            }
            let mut ok = true;
            let mut marked = 0;
            for (i, &(q, eid)) in back.iter().enumerate() {
                let x = self.phi[plan.order[q]];
                match g.edge_id(x, c) {
                    None => {
                        ok = false;
                        break;
                    }
                    Some(he) => {
                        if self.kind == MapKind::EdgeInjective {
                            if self.eused[he] {
                                ok = false;
                                break;
                            }
                            self.eused[he] = true;
                            marked = i + 1;
                        }
                        self.img[eid] = he;
                    }
                }
            }
            if ok {
                self.phi[v] = c;
                self.vused[c] = true;
                self.rec(pos + 1, acc, visit);
                self.vused[c] = false;
            }
            for &(_, eid) in &back[..marked] {
                self.eused[self.img[eid]] = false;
            }
        }
    }
}

/// Enumerates every map of the given kind from `h` to `g`, folding each into
/// an accumulator. The work is split by the image of the first vertex in the
/// search order; one accumulator per split is returned, in order.
///
/// `visit` receives the vertex map (indexed by pattern vertex) and the host
/// edge id of every pattern edge.
pub fn fold_maps<A, I, V>(h: &Graph, g: &Graph, kind: MapKind, caps: &Caps, init: I, visit: V) -> Result<Vec<A>>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[usize], &[usize]) + Sync + Send,
{
    if h.n() > caps.pattern_vertices {
        return Err(Error::cap("pattern vertices", caps.pattern_vertices, h.n()));
    }
    let plan = plan(h);
    let fresh = || Search {
        g,
        kind,
        plan: &plan,
        phi: vec![0; h.n()],
        img: vec![0; h.m()],
        vused: vec![false; g.n()],
        eused: vec![false; g.m()],
    };
    if h.n() == 0 {
        let mut acc = init();
        fresh().rec(0, &mut acc, &visit);
        return Ok(vec![acc]);
    }
    let first = plan.order[0];
    Ok(par::map((0..g.n()).collect(), |x| {
        let mut acc = init();
        let mut s = fresh();
        s.phi[first] = x;
        s.vused[x] = true;
        s.rec(1, &mut acc, &visit);
        acc
    }))
}

fn count_maps(h: &Graph, g: &Graph, kind: MapKind, caps: &Caps) -> Result<Count> {
    let parts = fold_maps(h, g, kind, caps, || 0u64, |c, _, _| *c += 1)?;
    Ok(parts.into_iter().map(BigUint::from).sum())
}

pub fn count_hom(h: &Graph, g: &Graph, caps: &Caps) -> Result<Count> {
    count_maps(h, g, MapKind::Hom, caps)
}

pub fn count_emb(h: &Graph, g: &Graph, caps: &Caps) -> Result<Count> {
    count_maps(h, g, MapKind::Emb, caps)
}

pub fn count_edginj(h: &Graph, g: &Graph, caps: &Caps) -> Result<Count> {
    count_maps(h, g, MapKind::EdgeInjective, caps)
}

/// Sum over edge-injective maps of the product of image-edge weights.
pub fn count_edginj_weighted(h: &Graph, g: &Graph, caps: &Caps) -> Result<Count> {
    let weights = g
        .weights()
        .ok_or_else(|| Error::Precondition("host graph has no edge weights".into()))?;
    let parts = fold_maps(
        h,
        g,
        MapKind::EdgeInjective,
        caps,
        BigUint::zero,
        |acc, _, img| {
            let mut prod = BigUint::one();
            for &e in img {
                prod *= weights[e];
            }
            *acc += prod;
        },
    )?;
    Ok(parts.into_iter().sum())
}

/// Number of `k`-edge matchings. With `colorful`, `g` must carry exactly `k`
/// colors and each matching takes one edge of every color.
pub fn count_matchings(g: &Graph, k: usize, colorful: bool) -> Result<Count> {
    if colorful {
        let colors = g
            .colors()
            .ok_or_else(|| Error::Precondition("colorful matchings need a colored graph".into()))?;
        if g.num_colors() as usize != k {
            return Err(Error::Precondition(format!(
                "graph has {} colors, colorful {k}-matching requested",
                g.num_colors()
            )));
        }
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (e, &c) in colors.iter().enumerate() {
            classes[c as usize - 1].push(e);
        }
        classes.sort_by_key(|c| c.len());
        let mut used = vec![false; g.n()];
        Ok(BigUint::from(colorful_rec(g, &classes, 0, &mut used)))
    } else {
        let mut used = vec![false; g.n()];
        Ok(BigUint::from(matching_rec(g, 0, k, &mut used)))
    }
}

fn matching_rec(g: &Graph, start: usize, left: usize, used: &mut [bool]) -> u128 {
    if left == 0 {
        return 1;
    }
    let mut total = 0;
    for e in start..g.m() {
        if g.m() - e < left {
            break;
        }
        let (u, v) = g.edge(e);
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        total += matching_rec(g, e + 1, left - 1, used);
        used[u] = false;
        used[v] = false;
    }
    total
}

fn colorful_rec(g: &Graph, classes: &[Vec<usize>], i: usize, used: &mut [bool]) -> u128 {
    if i == classes.len() {
        return 1;
    }
    let mut total = 0;
    for &e in &classes[i] {
        let (u, v) = g.edge(e);
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        total += colorful_rec(g, classes, i + 1, used);
        used[u] = false;
        used[v] = false;
    }
    total
}

/// Number of perfect matchings, by memoised branching on a vertex of
/// minimum remaining degree.
pub fn count_perfect_matchings(g: &Graph, caps: &Caps) -> Result<Count> {
    let limit = caps.perfmatch_vertices.min(128);
    if g.n() > limit {
        return Err(Error::cap("perfect-matching vertices", limit, g.n()));
    }
    if g.n() % 2 == 1 {
        return Ok(Count::zero());
    }
    let adj: Vec<u128> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &(w, _)| m | (1u128 << w)))
        .collect();
    let all = if g.n() == 128 { u128::MAX } else { (1u128 << g.n()) - 1 };
    let mut memo = HashMap::new();
    Ok(perfect_rec(all, &adj, &mut memo))
}

fn perfect_rec(rem: u128, adj: &[u128], memo: &mut HashMap<u128, BigUint>) -> BigUint {
    if rem == 0 {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&rem) {
        return v.clone();
    }
    let mut best = (u32::MAX, 0usize);
    let mut bits = rem;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (adj[v] & rem).count_ones();
        if d < best.0 {
            best = (d, v);
        }
    }
    let mut total = BigUint::zero();
    if best.0 > 0 {
        let v = best.1;
        let mut nb = adj[v] & rem;
        let without_v = rem & !(1u128 << v);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            total += perfect_rec(without_v & !(1u128 << u), adj, memo);
        }
    }
    memo.insert(rem, total.clone());
    total
}

/// Perfect matchings counted by how many `marked` edges they use (index =
/// number of marked edges).
pub fn count_perfect_matchings_by_marked(g: &Graph, marked: &[usize], caps: &Caps) -> Result<Vec<Count>> {
    let limit = caps.perfmatch_vertices.min(128);
    if g.n() > limit {
        return Err(Error::cap("perfect-matching vertices", limit, g.n()));
    }
    let mut is_marked = vec![false; g.m()];
    for &e in marked {
        if e >= g.m() {
            return Err(Error::Precondition(format!("no edge {e}")));
        }
        is_marked[e] = true;
    }
    let mut out = vec![Count::zero(); marked.len() + 1];
    if g.n() % 2 == 1 {
        return Ok(out);
    }
    let all = if g.n() == 128 { u128::MAX } else { (1u128 << g.n()) - 1 };
    let mut memo = HashMap::new();
    for (t, c) in by_marked_rec(g, all, &is_marked, &mut memo).into_iter().enumerate() {
        out[t] = c;
    }
    Ok(out)
}

fn by_marked_rec(g: &Graph, rem: u128, marked: &[bool], memo: &mut HashMap<u128, Vec<Count>>) -> Vec<Count> {
    if rem == 0 {
        return vec![Count::one()];
    }
    if let Some(v) = memo.get(&rem) {
        return v.clone();
    }
    let v = rem.trailing_zeros() as usize;
    let mut total: Vec<Count> = Vec::new();
    for &(u, e) in g.neighbors(v) {
        if rem & (1u128 << u) == 0 {
            continue;
        }
        let sub = by_marked_rec(g, rem & !(1u128 << v) & !(1u128 << u), marked, memo);
        let shift = usize::from(marked[e]);
        if total.len() < sub.len() + shift {
            total.resize(sub.len() + shift, Count::zero());
        }
        for (t, c) in sub.into_iter().enumerate() {
            total[t + shift] += c;
        }
    }
    memo.insert(rem, total.clone());
    total
}

/// Edge subsets in which every vertex has odd degree, counted per subset
/// size (index = number of edges).
pub fn count_odd_edge_sets_by_size(g: &Graph, caps: &Caps) -> Result<Vec<Count>> {
    if g.m() > caps.subset_edges {
        return Err(Error::cap("subset enumeration edges", caps.subset_edges, g.m()));
    }
    if g.n() > 128 {
        return Err(Error::cap("odd edge-set vertices", 128, g.n()));
    }
    let mut by_size = vec![0u64; g.m() + 1];
    let target = if g.n() == 128 { u128::MAX } else { (1u128 << g.n()) - 1 };
    let masks: Vec<u128> = g.edges().iter().map(|&(u, v)| (1u128 << u) | (1u128 << v)).collect();
    let mut parity = 0u128;
    let mut size = 0usize;
    let mut in_set = vec![false; g.m()];
    if parity == target {
        by_size[0] += 1;
    }
    // reflected Gray code: step i flips bit trailing_zeros(i)
    for i in 1u64..(1u64 << g.m()) {
        let e = i.trailing_zeros() as usize;
        parity ^= masks[e];
        in_set[e] = !in_set[e];
        if in_set[e] {
            size += 1;
        } else {
            size -= 1;
        }
        if parity == target {
            by_size[size] += 1;
        }
    }
    Ok(by_size.into_iter().map(BigUint::from).collect())
}

pub fn count_odd_edge_sets_enum(g: &Graph, caps: &Caps) -> Result<Count> {
    Ok(count_odd_edge_sets_by_size(g, caps)?.into_iter().sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkKind {
    Cycle,
    Path,
}

/// Edge-disjoint closed (resp. open) walks of length `k`, unrooted and
/// unoriented: `EdgInj(C_k, g) / 2k` resp. `EdgInj(P_k, g) / 2`, where `P_k`
/// has `k` edges.
pub fn count_edge_disjoint(g: &Graph, k: usize, kind: WalkKind, caps: &Caps) -> Result<Count> {
    let (pattern, div) = match kind {
        WalkKind::Cycle => {
            if k < 3 {
                return Err(Error::Precondition("cycles need k >= 3".into()));
            }
            (pattern_graph(PatternKind::Cycle, &[k]), 2 * k)
        }
        WalkKind::Path => {
            if k < 1 {
                return Err(Error::Precondition("paths need k >= 1".into()));
            }
            (pattern_graph(PatternKind::Path, &[k]), 2)
        }
    };
    exact_div(count_edginj(&pattern, g, caps)?, div as u64, "edge-disjoint walk count")
}

/// Simple `k`-cycles: `Emb(C_k, g) / 2k`.
pub fn count_simple_cycles(g: &Graph, k: usize, caps: &Caps) -> Result<Count> {
    if k < 3 {
        return Ok(Count::zero());
    }
    let c = pattern_graph(PatternKind::Cycle, &[k]);
    exact_div(count_emb(&c, g, caps)?, 2 * k as u64, "simple cycle count")
}

pub(crate) fn exact_div(value: Count, divisor: u64, what: &'static str) -> Result<Count> {
    let d = BigUint::from(divisor);
    if divisor == 0 || !(&value % &d).is_zero() {
        return Err(Error::NotDivisible {
            what,
            value: value.to_string(),
            divisor: divisor.to_string(),
        });
    }
    Ok(value / d)
}

pub(crate) fn exact_div_big(value: &Count, divisor: &Count, what: &'static str) -> Result<Count> {
    if divisor.is_zero() || !(value % divisor).is_zero() {
        return Err(Error::NotDivisible {
            what,
            value: value.to_string(),
            divisor: divisor.to_string(),
        });
    }
    Ok(value / divisor)
}

/// `EdgInj(h, g)` as a sum of embedding counts of the quotients `h/ρ` over
/// all partitions `ρ` with no loop and at most one edge between any two
/// blocks.
pub fn count_edginj_via_partition_sum(h: &Graph, g: &Graph, caps: &Caps) -> Result<Count> {
    let parts = all_partitions(h.n(), caps.partition_ground)?;
    par::try_sum(parts, |rho| match quotient(h, &rho)? {
        Quotient::Simple {
            graph,
            edge_injective: true,
        } => count_emb(&graph, g, caps),
        _ => Ok(Count::zero()),
    })
}

/// Isomorphism test by backtracking over degree-compatible vertex images.
pub fn is_isomorphic(a: &Graph, b: &Graph, caps: &Caps) -> Result<bool> {
    if a.n() > caps.iso_vertices || b.n() > caps.iso_vertices {
        return Err(Error::cap("isomorphism vertices", caps.iso_vertices, a.n().max(b.n())));
    }
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    let order = plan(a).order;
    let mut phi = vec![usize::MAX; a.n()];
    let mut used = vec![false; b.n()];
    Ok(iso_rec(a, b, &order, 0, &mut phi, &mut used))
}

fn iso_rec(a: &Graph, b: &Graph, order: &[usize], pos: usize, phi: &mut [usize], used: &mut [bool]) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    for c in 0..b.n() {
        if used[c] || a.degree(v) != b.degree(c) {
            continue;
        }
        let consistent = order[..pos]
            .iter()
            .all(|&w| a.has_edge(v, w) == b.has_edge(c, phi[w]));
        if !consistent {
            continue;
        }
        phi[v] = c;
        used[c] = true;
        if iso_rec(a, b, order, pos + 1, phi, used) {
            return true;
        }
        used[c] = false;
    }
    phi[v] = usize::MAX;
    false
}

/// Lengths of all trails (walks without repeated edges) from `a` to `b`,
/// as a histogram indexed by length. A trail may pass through `b` before it
/// ends there.
pub fn trail_lengths(g: &Graph, a: usize, b: usize, caps: &Caps) -> Result<Vec<u64>> {
    if g.m() > caps.subset_edges * 2 {
        return Err(Error::cap("trail enumeration edges", caps.subset_edges * 2, g.m()));
    }
    let mut hist = vec![0u64; g.m() + 1];
    let mut used = vec![false; g.m()];
    trail_rec(g, a, b, 0, &mut used, &mut |len| {
        if len > 0 {
            hist[len] += 1
        }
    });
    Ok(hist)
}

fn trail_rec(g: &Graph, at: usize, target: usize, len: usize, used: &mut [bool], hit: &mut dyn FnMut(usize)) {
    if at == target {
        hit(len);
    }
    for &(w, e) in g.neighbors(at) {
        if !used[e] {
            used[e] = true;
            trail_rec(g, w, target, len + 1, used, hit);
            used[e] = false;
        }
    }
}

/// Length of the longest closed trail, or 0 if there is none.
pub fn longest_closed_trail(g: &Graph, caps: &Caps) -> Result<usize> {
    let mut best = 0;
    for s in 0..g.n() {
        let hist = trail_lengths(g, s, s, caps)?;
        if let Some(len) = hist.iter().rposition(|&c| c > 0) {
            best = best.max(len);
        }
    }
    Ok(best)
}

/// Converts a small count to `u64`, for tests and summaries.
pub fn small(c: &Count) -> u64 {
    c.to_u64().expect("count fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::pattern_graph as pg;
    use PatternKind::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn k(n: usize) -> Graph {
        pg(Clique, &[n])
    }

    #[test]
    fn documented_values() {
        let c = caps();
        let k3 = k(3);
        let k4 = k(4);
        assert_eq!(small(&count_hom(&pg(Path, &[2]), &k3, &c).unwrap()), 12);
        assert_eq!(small(&count_hom(&k(1), &k4, &c).unwrap()), 4);
        assert_eq!(small(&count_emb(&k3, &k3, &c).unwrap()), 6);
        assert_eq!(small(&count_emb(&pg(Biclique, &[1, 3]), &k4, &c).unwrap()), 24);
        assert_eq!(small(&count_edginj(&pg(Path, &[2]), &k3, &c).unwrap()), 6);
        assert_eq!(small(&count_edginj(&pg(Edgeless, &[0]), &k3, &c).unwrap()), 1);
        assert_eq!(small(&count_edginj(&pg(Path, &[1]), &k4, &c).unwrap()), 12);
    }

    #[test]
    fn weighted_counts() {
        let c = caps();
        let k2 = Graph::weighted(2, &[(0, 1, 5)]).unwrap();
        assert_eq!(small(&count_edginj_weighted(&pg(Path, &[1]), &k2, &c).unwrap()), 10);
        let k4 = k(4);
        let mut w = vec![1u64; 6];
        w[0] = 2;
        let g = k4.with_weights(w).unwrap();
        // two of the four triangles use the heavy edge: 6 * (2 * 1 + 2 * 2)
        assert_eq!(small(&count_edginj_weighted(&pg(Cycle, &[3]), &g, &c).unwrap()), 36);
        let ones = k4.with_weights(vec![1; 6]).unwrap();
        assert_eq!(
            count_edginj_weighted(&pg(Cycle, &[4]), &ones, &c).unwrap(),
            count_edginj(&pg(Cycle, &[4]), &k4, &c).unwrap()
        );
        assert!(count_edginj_weighted(&k(2), &k4, &c).is_err());
    }

    #[test]
    fn matchings() {
        let c4 = pg(Cycle, &[4]);
        assert_eq!(small(&count_matchings(&c4, 2, false).unwrap()), 2);
        assert_eq!(small(&count_matchings(&c4, 0, false).unwrap()), 1);
        let colored = Graph::colored(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)], None).unwrap();
        // both perfect matchings of C_4 are monochromatic
        assert_eq!(small(&count_matchings(&colored, 2, true).unwrap()), 0);
        let rainbow = Graph::colored(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 2), (0, 3, 2)], None).unwrap();
        assert_eq!(small(&count_matchings(&rainbow, 2, true).unwrap()), 2);
        assert!(count_matchings(&c4, 2, true).is_err());
    }

    #[test]
    fn perfect_matchings() {
        let c = caps();
        assert_eq!(small(&count_perfect_matchings(&k(4), &c).unwrap()), 3);
        assert_eq!(small(&count_perfect_matchings(&k(3), &c).unwrap()), 0);
        assert_eq!(small(&count_perfect_matchings(&k(6), &c).unwrap()), 15);
        assert_eq!(small(&count_perfect_matchings(&pg(Edgeless, &[0]), &c).unwrap()), 1);
        let collar = crate::patterns::make_pattern(Collar, &[2]).unwrap();
        assert_eq!(small(&count_perfect_matchings(&collar.graph, &c).unwrap()), 1);
        let inner = collar.graph.remove_vertices(&[collar.anchor("u"), collar.anchor("v")]);
        assert_eq!(small(&count_perfect_matchings(&inner, &c).unwrap()), 9);
    }

    #[test]
    fn odd_edge_sets() {
        let c = caps();
        assert_eq!(small(&count_odd_edge_sets_enum(&k(4), &c).unwrap()), 8);
        assert_eq!(small(&count_odd_edge_sets_enum(&k(2), &c).unwrap()), 1);
        assert_eq!(small(&count_odd_edge_sets_enum(&k(3), &c).unwrap()), 0);
        let by = count_odd_edge_sets_by_size(&k(4), &c).unwrap();
        let by: Vec<u64> = by.iter().map(small).collect();
        assert_eq!(by, vec![0, 0, 3, 4, 0, 0, 1]);
    }

    #[test]
    fn edge_disjoint_walks() {
        let c = caps();
        assert_eq!(small(&count_edge_disjoint(&k(4), 3, WalkKind::Cycle, &c).unwrap()), 4);
        assert_eq!(small(&count_edge_disjoint(&k(3), 2, WalkKind::Path, &c).unwrap()), 3);
        assert_eq!(small(&count_edge_disjoint(&k(3), 4, WalkKind::Cycle, &c).unwrap()), 0);
    }

    #[test]
    fn partition_sum_small() {
        let c = caps();
        let k3 = k(3);
        assert_eq!(small(&count_edginj_via_partition_sum(&pg(Path, &[2]), &k3, &c).unwrap()), 6);
        assert_eq!(small(&count_edginj_via_partition_sum(&k(2), &k(4), &c).unwrap()), 12);
    }

    #[test]
    fn isomorphism() {
        let c = caps();
        assert!(is_isomorphic(&pg(Cycle, &[4]), &pg(Biclique, &[2, 2]), &c).unwrap());
        assert!(!is_isomorphic(&k(3), &pg(Path, &[2]), &c).unwrap());
        assert!(!is_isomorphic(&pg(Cycle, &[6]), &crate::graph::disjoint_union(&k(3), &k(3)), &c).unwrap());
    }

    #[test]
    fn caps_are_enforced() {
        let c = caps();
        assert!(count_hom(&pg(Path, &[9]), &k(3), &c).unwrap_err().is_cap());
        assert!(count_odd_edge_sets_enum(&k(8), &c).unwrap_err().is_cap());
    }

    #[test]
    fn trails_in_small_graphs() {
        let c = caps();
        let k4 = k(4);
        assert_eq!(longest_closed_trail(&k4, &c).unwrap(), 4);
        assert_eq!(longest_closed_trail(&pg(Path, &[3]), &c).unwrap(), 0);
        let hist = trail_lengths(&pg(Path, &[3]), 0, 3, &c).unwrap();
        assert_eq!(hist, vec![0, 0, 0, 1]);
    }
}
