//! Polynomial-time counting of edge-injective homomorphisms from patterns of
//! bounded weak vertex-cover number.
//!
//! After removing isolated vertices and isolated edges, the edge-injective
//! partitions of the pattern are grouped into classes that share the blocks
//! meeting a fixed vertex cover `C` (the cover sub-partition) and the color
//! allocation of the remaining blocks. Every class contributes its size times
//! the embedding count of one representative quotient.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{min_vertex_cover, quotient, Graph, Quotient};
use crate::numeric::{factorial, multinomial};
use crate::oracles::Caps;
use crate::partition::{partitions_of, Partition};
use crate::{par, Count};

/// Bitmask over the blocks of a cover sub-partition: bit `i` is block `i`.
pub type ColorSet = u32;

/// Pattern with isolated vertices and isolated edges removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedPattern {
    pub core: Graph,
    pub iso_vertices: usize,
    pub removed_edges: usize,
    pub original_edge_count: usize,
}

impl ReducedPattern {
    /// Factor relating edge-injective counts of the core and of the original
    /// pattern into `g`.
    pub fn multiplier(&self, g: &Graph) -> Count {
        let mut acc = BigUint::from(g.n()).pow(self.iso_vertices as u32);
        for j in 0..self.removed_edges {
            let remaining = (self.original_edge_count - j) as i64;
            let choices = g.m() as i64 - remaining + 1;
            if choices <= 0 {
                return Count::zero();
            }
            acc *= BigUint::from(2 * choices as u64);
        }
        acc
    }
}

pub fn reduce_isolated(h: &Graph) -> ReducedPattern {
    let mut drop = Vec::new();
    let (mut iso_vertices, mut removed_edges) = (0, 0);
    for comp in h.components() {
        match comp.len() {
            1 => iso_vertices += 1,
            2 => removed_edges += 1,
            _ => continue,
        }
        drop.extend(comp);
    }
    ReducedPattern {
        core: h.remove_vertices(&drop),
        iso_vertices,
        removed_edges,
        original_edge_count: h.m(),
    }
}

/// The blocks of a partition that meet the cover, in increasing order of
/// their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverSubPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl CoverSubPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> CoverSubPartition {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable();
        CoverSubPartition { blocks }
    }

    /// Union of the blocks.
    pub fn support(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        d.sort_unstable();
        d
    }

    fn block_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = Some(i);
            }
        }
        out
    }
}

/// Multiset of color partitions `β` with multiplicities, sorted by `β`.
/// Each `β` is a sorted list of pairwise disjoint colors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorAllocation {
    pub entries: Vec<(Vec<ColorSet>, usize)>,
}

impl ColorAllocation {
    pub fn multiplicity(&self, beta: &[ColorSet]) -> usize {
        self.entries
            .iter()
            .find(|(b, _)| b.as_slice() == beta)
            .map_or(0, |(_, m)| *m)
    }
}

/// Blocks of `rho_c` adjacent to `v`, as a [`ColorSet`].
pub fn color_of(v: usize, rho_c: &CoverSubPartition, h: &Graph) -> Result<ColorSet> {
    if rho_c.blocks.iter().any(|b| b.contains(&v)) {
        return Err(Error::Precondition(format!("vertex {v} lies in the cover sub-partition")));
    }
    let block_of = rho_c.block_of(h.n());
    Ok(h.neighbors(v)
        .iter()
        .filter_map(|&(w, _)| block_of[w])
        .fold(0, |m, b| m | (1 << b)))
}

/// Number of vertices outside the sub-partition per color.
fn color_counts(rho_c: &CoverSubPartition, h: &Graph) -> BTreeMap<ColorSet, usize> {
    let block_of = rho_c.block_of(h.n());
    let mut counts = BTreeMap::new();
    for v in (0..h.n()).filter(|&v| block_of[v].is_none()) {
        let k = color_of(v, rho_c, h).expect("v outside the sub-partition");
        *counts.entry(k).or_insert(0) += 1;
    }
    counts
}

/// True if `rho_c` can be the cover sub-partition of an edge-injective
/// partition without loops: no block spans an edge, at most one edge joins
/// two blocks, and no outside vertex has two neighbours in one block.
fn sub_partition_valid(rho_c: &CoverSubPartition, h: &Graph) -> bool {
    let block_of = rho_c.block_of(h.n());
    let mut between: HashMap<(usize, usize), usize> = HashMap::new();
    for &(u, v) in h.edges() {
        match (block_of[u], block_of[v]) {
            (Some(a), Some(b)) if a == b => return false,
            (Some(a), Some(b)) => {
                let c = between.entry((a.min(b), a.max(b))).or_insert(0);
                *c += 1;
                if *c > 1 {
                    return false;
                }
            }
            _ => {}
        }
    }
    for v in (0..h.n()).filter(|&v| block_of[v].is_none()) {
        let mut seen = 0u32;
        for &(w, _) in h.neighbors(v) {
            if let Some(b) = block_of[w] {
                if seen & (1 << b) != 0 {
                    return false;
                }
                seen |= 1 << b;
            }
        }
    }
    true
}

/// Sets of pairwise disjoint colors drawn from `colors`, each sorted.
fn disjoint_families(colors: &[ColorSet]) -> Vec<Vec<ColorSet>> {
    fn rec(colors: &[ColorSet], i: usize, used: ColorSet, cur: &mut Vec<ColorSet>, out: &mut Vec<Vec<ColorSet>>) {
        if i == colors.len() {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        rec(colors, i + 1, used, cur, out);
        if colors[i] & used == 0 {
            cur.push(colors[i]);
            rec(colors, i + 1, used | colors[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(colors, 0, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Color allocations whose per-color totals match `counts`.
fn allocations(counts: &BTreeMap<ColorSet, usize>) -> Vec<ColorAllocation> {
    let colors: Vec<ColorSet> = counts.keys().copied().collect();
    let betas = disjoint_families(&colors);
    let index: HashMap<ColorSet, usize> = colors.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    // last_use[c] = last beta index containing color c
    let mut last_use = vec![0usize; colors.len()];
    for (j, beta) in betas.iter().enumerate() {
        for c in beta {
            last_use[index[c]] = j;
        }
    }
    let mut remaining: Vec<usize> = colors.iter().map(|c| counts[c]).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        j: usize,
        betas: &[Vec<ColorSet>],
        index: &HashMap<ColorSet, usize>,
        last_use: &[usize],
        remaining: &mut Vec<usize>,
        chosen: &mut Vec<(Vec<ColorSet>, usize)>,
        out: &mut Vec<ColorAllocation>,
    ) {
        if remaining.iter().all(|&r| r == 0) {
            out.push(ColorAllocation {
                entries: chosen.clone(),
            });
            return;
        }
        if j == betas.len() {
            return;
        }
        let beta = &betas[j];
        let idx: Vec<usize> = beta.iter().map(|c| index[c]).collect();
        let cap = idx.iter().map(|&i| remaining[i]).min().unwrap();
        for mult in (0..=cap).rev() {
            for &i in &idx {
                remaining[i] -= mult;
            }
            // a color whose last chance is this beta must be used up now
            let dead = idx.iter().any(|&i| last_use[i] == j && remaining[i] > 0);
            if !dead {
                if mult > 0 {
                    chosen.push((beta.clone(), mult));
                }
                rec(j + 1, betas, index, last_use, remaining, chosen, out);
                if mult > 0 {
                    chosen.pop();
                }
            }
            for &i in &idx {
                remaining[i] += mult;
            }
        }
    }
    if colors.is_empty() {
        return vec![ColorAllocation::default()];
    }
    rec(0, &betas, &index, &last_use, &mut remaining, &mut chosen, &mut out);
    out.sort();
    out
}

/// All classes `(ρ_C, 𝒦)` of edge-injective partitions of `h` for the
/// vertex cover `cover`, in canonical order. Only candidates that are
/// realised by at least one partition are returned.
pub fn enumerate_classes(h: &Graph, cover: &[usize]) -> Result<Vec<(CoverSubPartition, ColorAllocation)>> {
    if !crate::graph::covers(h, cover) {
        return Err(Error::Precondition("the given set is not a vertex cover".into()));
    }
    if (0..h.n()).any(|v| h.degree(v) == 0) || h.components().iter().any(|c| c.len() == 2) {
        return Err(Error::Precondition("pattern has isolated vertices or isolated edges".into()));
    }
    let c = cover.len();
    if c >= 8 {
        return Err(Error::cap("vertex cover size", 7, c));
    }
    let others: Vec<usize> = (0..h.n()).filter(|v| !cover.contains(v)).collect();
    let extra_max = (c * c).saturating_sub(c).min(others.len());
    let cover_parts = partitions_of(cover);
    let mut out = Vec::new();
    for size in 0..=extra_max {
        for extra in subsets(&others, size) {
            for cp in &cover_parts {
                let nb = cp.len();
                let mut assign = vec![0usize; extra.len()];
                loop {
                    let mut blocks = cp.clone();
                    for (&v, &b) in extra.iter().zip(&assign) {
                        blocks[b].push(v);
                    }
                    let rho_c = CoverSubPartition::new(blocks);
                    if sub_partition_valid(&rho_c, h) {
                        for alloc in allocations(&color_counts(&rho_c, h)) {
                            out.push((rho_c.clone(), alloc));
                        }
                    }
                    if !next_assignment(&mut assign, nb) {
                        break;
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], start: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, i + 1, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, 0, size, &mut Vec::new(), &mut out);
    out
}

fn next_assignment(assign: &mut [usize], base: usize) -> bool {
    for a in assign.iter_mut().rev() {
        *a += 1;
        if *a < base {
            return true;
        }
        *a = 0;
    }
    false
}

/// Number of partitions in the class `(rho_c, alloc)`; 0 if the pair is not
/// consistent with the color counts of `h`.
pub fn class_size(rho_c: &CoverSubPartition, alloc: &ColorAllocation, h: &Graph) -> Count {
    let counts = color_counts(rho_c, h);
    for (beta, _) in &alloc.entries {
        let mut union = 0;
        for &k in beta {
            if k & union != 0 || !counts.contains_key(&k) {
                return Count::zero();
            }
            union |= k;
        }
    }
    let mut total = Count::one();
    for (&k, &k_count) in &counts {
        let parts: Vec<u64> = alloc
            .entries
            .iter()
            .filter(|(beta, _)| beta.contains(&k))
            .map(|(_, m)| *m as u64)
            .collect();
        if parts.iter().sum::<u64>() != k_count as u64 {
            return Count::zero();
        }
        total *= multinomial(&parts);
    }
    for (beta, m) in &alloc.entries {
        total *= factorial(*m as u64).pow(beta.len() as u32 - 1);
    }
    total
}

/// A partition in the class `(rho_c, alloc)`, built greedily, or `None` if
/// the class is empty.
pub fn build_representative(rho_c: &CoverSubPartition, alloc: &ColorAllocation, h: &Graph) -> Option<Partition> {
    let block_of = rho_c.block_of(h.n());
    let mut pools: BTreeMap<ColorSet, Vec<usize>> = BTreeMap::new();
    for v in (0..h.n()).rev().filter(|&v| block_of[v].is_none()) {
        pools.entry(color_of(v, rho_c, h).ok()?).or_default().push(v);
    }
    let mut blocks = rho_c.blocks.clone();
    for (beta, m) in &alloc.entries {
        for _ in 0..*m {
            let mut block = Vec::with_capacity(beta.len());
            for k in beta {
                block.push(pools.get_mut(k)?.pop()?);
            }
            blocks.push(block);
        }
    }
    if pools.values().any(|p| !p.is_empty()) {
        return None;
    }
    let rho = Partition::from_blocks(h.n(), blocks).ok()?;
    match quotient(h, &rho).ok()? {
        Quotient::Simple { edge_injective: true, .. } => Some(rho),
        _ => None,
    }
}

/// The class of an edge-injective, loop-free partition `rho`; `None` for
/// other partitions.
pub fn class_of(h: &Graph, cover: &[usize], rho: &Partition) -> Result<Option<(CoverSubPartition, ColorAllocation)>> {
    match quotient(h, rho)? {
        Quotient::Simple { edge_injective: true, .. } => {}
        _ => return Ok(None),
    }
    let (meets, rest): (Vec<&Vec<usize>>, Vec<&Vec<usize>>) =
        rho.blocks().iter().partition(|b| b.iter().any(|v| cover.contains(v)));
    let rho_c = CoverSubPartition::new(meets.into_iter().cloned().collect());
    let mut tally: BTreeMap<Vec<ColorSet>, usize> = BTreeMap::new();
    for b in rest {
        let mut beta: Vec<ColorSet> = b.iter().map(|&v| color_of(v, &rho_c, h)).collect::<Result<_>>()?;
        beta.sort_unstable();
        *tally.entry(beta).or_insert(0) += 1;
    }
    Ok(Some((
        rho_c,
        ColorAllocation {
            entries: tally.into_iter().collect(),
        },
    )))
}

/// Injective homomorphisms from `f` to `g`, given a vertex cover of `f`.
///
/// Cover vertices are mapped exhaustively. The remaining vertices form an
/// independent set and are grouped by their neighbourhood `K` in the cover;
/// unused host vertices are grouped into atoms by the set of cover images
/// they are adjacent to. Placements are counted as a sum over atom loads of
/// multinomials times falling factorials.
pub fn count_emb_with_cover(f: &Graph, g: &Graph, cover: &[usize]) -> Result<Count> {
    if !crate::graph::covers(f, cover) {
        return Err(Error::Precondition("the given set is not a vertex cover".into()));
    }
    if cover.len() >= 16 {
        return Err(Error::cap("vertex cover size", 15, cover.len()));
    }
    if f.n() > g.n() {
        return Ok(Count::zero());
    }
    let pos: HashMap<usize, usize> = cover.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut class_sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for v in (0..f.n()).filter(|v| !pos.contains_key(v)) {
        let k = f.neighbors(v).iter().fold(0u32, |m, &(w, _)| m | (1 << pos[&w]));
        *class_sizes.entry(k).or_insert(0) += 1;
    }
    let classes: Vec<(u32, usize)> = class_sizes.into_iter().collect();
    if cover.is_empty() {
        return Ok(place(&classes, &[(0, g.n())]));
    }
    let firsts: Vec<usize> = (0..g.n()).collect();
    par::try_sum(firsts, |x| {
        let mut phi = vec![x];
        let mut cache: HashMap<Vec<(u32, usize)>, Count> = HashMap::new();
        let mut total = Count::zero();
        extend_cover(f, g, cover, &mut phi, &mut |phi| {
            let mut used = vec![false; g.n()];
            for &y in phi {
                used[y] = true;
            }
            let mut atoms: BTreeMap<u32, usize> = BTreeMap::new();
            for u in (0..g.n()).filter(|&u| !used[u]) {
                let s = phi
                    .iter()
                    .enumerate()
                    .filter(|&(_, &y)| g.has_edge(u, y))
                    .fold(0u32, |m, (i, _)| m | (1 << i));
                *atoms.entry(s).or_insert(0) += 1;
            }
            let key: Vec<(u32, usize)> = atoms.into_iter().collect();
            let val = cache.entry(key.clone()).or_insert_with(|| place(&classes, &key));
            total += &*val;
        });
        Ok::<_, Error>(total)
    })
}

fn extend_cover(f: &Graph, g: &Graph, cover: &[usize], phi: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    let i = phi.len();
    // edges among already mapped cover vertices must be preserved
    let ok = (0..i - 1).all(|j| !f.has_edge(cover[i - 1], cover[j]) || g.has_edge(phi[i - 1], phi[j]));
    if !ok {
        return;
    }
    if i == cover.len() {
        visit(phi);
        return;
    }
    for y in 0..g.n() {
        if phi.contains(&y) {
            continue;
        }
        phi.push(y);
        extend_cover(f, g, cover, phi, visit);
        phi.pop();
    }
}

/// Injective placements of independent vertices, `classes` giving
/// `(required neighbourhood, count)` and `atoms` giving
/// `(available neighbourhood, size)`.
fn place(classes: &[(u32, usize)], atoms: &[(u32, usize)]) -> Count {
    fn rec(classes: &[(u32, usize)], atoms: &[(u32, usize)], load: &mut Vec<usize>, i: usize) -> Count {
        if i == classes.len() {
            let mut prod = Count::one();
            for (&(_, size), &l) in atoms.iter().zip(load.iter()) {
                if l > size {
                    return Count::zero();
                }
                for t in 0..l {
                    prod *= BigUint::from(size - t);
                }
            }
            return prod;
        }
        let (k, m) = classes[i];
        let fit: Vec<usize> = (0..atoms.len()).filter(|&a| atoms[a].0 & k == k).collect();
        let mut total = Count::zero();
        distribute(&fit, m, load, &mut Vec::new(), &mut |load, parts| {
            total += multinomial(parts) * rec(classes, atoms, load, i + 1);
        }, atoms);
        total
    }
    let mut load = vec![0; atoms.len()];
    rec(classes, atoms, &mut load, 0)
}

/// Splits `m` over the atoms in `fit` without exceeding atom sizes.
fn distribute(
    fit: &[usize],
    m: usize,
    load: &mut Vec<usize>,
    parts: &mut Vec<u64>,
    visit: &mut dyn FnMut(&mut Vec<usize>, &[u64]),
    atoms: &[(u32, usize)],
) {
    if fit.is_empty() {
        if m == 0 {
            visit(load, parts);
        }
        return;
    }
    let a = fit[0];
    let room = atoms[a].1 - load[a];
    if fit.len() == 1 {
        if m <= room {
            load[a] += m;
            parts.push(m as u64);
            visit(load, parts);
            parts.pop();
            load[a] -= m;
        }
        return;
    }
    for x in 0..=m.min(room) {
        load[a] += x;
        parts.push(x as u64);
        distribute(&fit[1..], m - x, load, parts, visit, atoms);
        parts.pop();
        load[a] -= x;
    }
}

/// Embeddings of `f` into `g` using a minimum vertex cover of `f`, which may
/// have at most `caps.cover_bound` vertices.
pub fn count_emb_small_vc(f: &Graph, g: &Graph, caps: &Caps) -> Result<Count> {
    let cover = min_vertex_cover(f, caps.cover_search_vertices)?;
    if cover.len() > caps.cover_bound {
        return Err(Error::cap("vertex cover size", caps.cover_bound, cover.len()));
    }
    count_emb_with_cover(f, g, &cover)
}

/// Edge-injective homomorphisms from `h` to `g` for patterns whose weak
/// vertex-cover number is at most `caps.cover_bound`.
pub fn count_edginj_poly(h: &Graph, g: &Graph, caps: &Caps) -> Result<Count> {
    let reduced = reduce_isolated(h);
    let multiplier = reduced.multiplier(g);
    let core = &reduced.core;
    if core.n() == 0 || multiplier.is_zero() {
        return Ok(multiplier);
    }
    let cover = min_vertex_cover(core, caps.cover_search_vertices)?;
    if cover.len() > caps.cover_bound {
        return Err(Error::cap("weak vertex cover", caps.cover_bound, cover.len()));
    }
    let classes = enumerate_classes(core, &cover)?;
    let sum = par::try_sum(classes, |(rho_c, alloc)| {
        let size = class_size(&rho_c, &alloc, core);
        if size.is_zero() {
            return Ok(Count::zero());
        }
        let rep = build_representative(&rho_c, &alloc, core)
            .ok_or_else(|| Error::Inconsistent("nonempty class without representative".into()))?;
        let Quotient::Simple { graph, .. } = quotient(core, &rep)? else {
            return Err(Error::Inconsistent("representative has a loop".into()));
        };
        let block_index = rep.block_index();
        let mut image: Vec<usize> = rho_c.blocks.iter().map(|b| block_index[b[0]]).collect();
        image.sort_unstable();
        Ok::<_, Error>(size * count_emb_with_cover(&graph, g, &image)?)
    })?;
    Ok(sum * multiplier)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{count_edginj, count_emb};
    use crate::partition::all_partitions;
    use crate::patterns::{pattern_graph, PatternKind};

    fn caps() -> Caps {
        Caps::default()
    }

    /// Vertices x, w, v, u, f, e, d, c, b, a are 0..=9.
    fn running_example() -> Graph {
        let (x, w, v, u, f, e, d, c, b, a) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9);
        Graph::new(
            10,
            &[(x, w), (v, u), (x, f), (v, b), (w, e), (w, d), (v, c), (u, b), (u, a)],
        )
        .unwrap()
    }

    #[test]
    fn running_example_colors() {
        let h = running_example();
        let (x, w, v, u) = (0, 1, 2, 3);
        let rho_c = CoverSubPartition::new(vec![vec![u], vec![v, x], vec![w]]);
        let block = |set: &[usize]| rho_c.blocks.iter().position(|b| b == set).unwrap();
        let (bu, bvx) = (block(&[u]), block(&[x, v]));
        assert_eq!(color_of(9, &rho_c, &h).unwrap(), 1 << bu);
        assert_eq!(color_of(8, &rho_c, &h).unwrap(), (1 << bu) | (1 << bvx));
        assert!(color_of(u, &rho_c, &h).is_err());
    }

    #[test]
    fn running_example_equivalences() {
        let h = running_example();
        let cover = [0, 1, 2, 3];
        let (x, w, v, u, f, e, d, c, b, a) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9);
        let base = vec![vec![u], vec![v, x], vec![w]];
        let with = |rest: Vec<Vec<usize>>| {
            let mut blocks = base.clone();
            blocks.extend(rest);
            Partition::from_blocks(10, blocks).unwrap()
        };
        let rho1 = with(vec![vec![b], vec![a, c, d], vec![e, f]]);
        let rho2 = with(vec![vec![b], vec![a, e, f], vec![c, d]]);
        let rho3 = with(vec![vec![a, c], vec![b, d], vec![e, f]]);
        let k1 = class_of(&h, &cover, &rho1).unwrap().unwrap();
        let k2 = class_of(&h, &cover, &rho2).unwrap().unwrap();
        let k3 = class_of(&h, &cover, &rho3).unwrap().unwrap();
        assert_eq!(k1, k2);
        assert_ne!(k1, k3);
        let q = |rho: &Partition| match quotient(&h, rho).unwrap() {
            Quotient::Simple { graph, .. } => graph,
            Quotient::Loop => panic!("loop"),
        };
        let big = Caps {
            iso_vertices: 16,
            ..caps()
        };
        assert!(crate::oracles::is_isomorphic(&q(&rho1), &q(&rho3), &big).unwrap());
    }

    #[test]
    fn isolated_parts() {
        let k1 = reduce_isolated(&Graph::empty(1));
        assert_eq!((k1.core.n(), k1.iso_vertices), (0, 1));
        let g = pattern_graph(PatternKind::Clique, &[4]);
        assert_eq!(k1.multiplier(&g), BigUint::from(4u32));
        let k2 = reduce_isolated(&pattern_graph(PatternKind::Path, &[1]));
        assert_eq!(k2.removed_edges, 1);
        assert_eq!(k2.multiplier(&g), BigUint::from(12u32));
        let two = pattern_graph(PatternKind::Matching, &[2]);
        let r = reduce_isolated(&two);
        for hosts in [pattern_graph(PatternKind::Clique, &[4]), pattern_graph(PatternKind::Cycle, &[5])] {
            assert_eq!(r.multiplier(&hosts), count_edginj(&two, &hosts, &caps()).unwrap());
        }
    }

    #[test]
    fn class_size_formula() {
        let rho_c = CoverSubPartition::new(vec![vec![0]]);
        // star with two leaves: both leaves have color {block 0}
        let h = pattern_graph(PatternKind::Biclique, &[1, 2]);
        let alloc = ColorAllocation {
            entries: vec![(vec![1], 2)],
        };
        assert_eq!(class_size(&rho_c, &alloc, &h), BigUint::one());
        // K_{2,2} with cover {0,1}; leaves 2,3 adjacent to both blocks
        let h = Graph::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let rho_c = CoverSubPartition::new(vec![vec![0], vec![1]]);
        let alloc = ColorAllocation {
            entries: vec![(vec![3], 2)],
        };
        assert_eq!(class_size(&rho_c, &alloc, &h), BigUint::one());
        // path 2-0-3-1-4 style: colors {0} x2 and {1} x2 paired twice
        let h = Graph::new(6, &[(0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let rho_c = CoverSubPartition::new(vec![vec![0], vec![1]]);
        let alloc = ColorAllocation {
            entries: vec![(vec![1, 2], 2)],
        };
        assert_eq!(class_size(&rho_c, &alloc, &h), BigUint::from(2u32));
        let absent = ColorAllocation {
            entries: vec![(vec![4], 1)],
        };
        assert!(class_size(&rho_c, &absent, &h).is_zero());
        assert!(build_representative(&rho_c, &absent, &h).is_none());
    }

    fn edge_injective_partitions(h: &Graph) -> Vec<Partition> {
        all_partitions(h.n(), 8)
            .unwrap()
            .into_iter()
            .filter(|rho| matches!(quotient(h, rho).unwrap(), Quotient::Simple { edge_injective: true, .. }))
            .collect()
    }

    #[test]
    fn classes_match_partition_enumeration() {
        let patterns = [
            pattern_graph(PatternKind::Biclique, &[1, 2]),
            pattern_graph(PatternKind::Path, &[2]),
            pattern_graph(PatternKind::Path, &[4]),
            pattern_graph(PatternKind::Cycle, &[4]),
            pattern_graph(PatternKind::Biclique, &[1, 4]),
            pattern_graph(PatternKind::Wedges, &[2]),
            Graph::new(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (0, 5)]).unwrap(),
        ];
        for h in &patterns {
            let cover = min_vertex_cover(h, 24).unwrap();
            let classes = enumerate_classes(h, &cover).unwrap();
            let total: Count = classes.iter().map(|(r, k)| class_size(r, k, h)).sum();
            let parts = edge_injective_partitions(h);
            assert_eq!(total, BigUint::from(parts.len()));
            let mut seen = std::collections::BTreeSet::new();
            for rho in &parts {
                seen.insert(class_of(h, &cover, rho).unwrap().unwrap());
            }
            assert_eq!(seen.len(), classes.len());
            for (rho_c, _) in &classes {
                assert!(rho_c.blocks.len() <= cover.len());
                assert!(rho_c.support().len() <= cover.len() * cover.len());
            }
        }
    }

    #[test]
    fn small_cover_embeddings() {
        let k4 = pattern_graph(PatternKind::Clique, &[4]);
        let claw = pattern_graph(PatternKind::Biclique, &[1, 3]);
        assert_eq!(count_emb_small_vc(&claw, &k4, &caps()).unwrap(), BigUint::from(24u32));
        assert_eq!(count_emb_small_vc(&Graph::empty(1), &k4, &caps()).unwrap(), BigUint::from(4u32));
        let c5 = pattern_graph(PatternKind::Cycle, &[5]);
        for f in [pattern_graph(PatternKind::Path, &[3]), pattern_graph(PatternKind::Cycle, &[4])] {
            for g in [&k4, &c5] {
                assert_eq!(count_emb_small_vc(&f, g, &caps()).unwrap(), count_emb(&f, g, &caps()).unwrap());
            }
        }
    }

    #[test]
    fn poly_algorithm_small_cases() {
        let k3 = pattern_graph(PatternKind::Clique, &[3]);
        let p2 = pattern_graph(PatternKind::Path, &[2]);
        assert_eq!(count_edginj_poly(&p2, &k3, &caps()).unwrap(), BigUint::from(6u32));
        let k2 = pattern_graph(PatternKind::Path, &[1]);
        let g = pattern_graph(PatternKind::Cycle, &[6]);
        assert_eq!(count_edginj_poly(&k2, &g, &caps()).unwrap(), BigUint::from(12u32));
        for k in 1..=3 {
            let h = pattern_graph(PatternKind::Wedges, &[k]);
            for g in [pattern_graph(PatternKind::Clique, &[5]), pattern_graph(PatternKind::Cycle, &[7])] {
                let big = Caps { pattern_vertices: 9, ..caps() };
                assert_eq!(count_edginj_poly(&h, &g, &caps()).unwrap(), count_edginj(&h, &g, &big).unwrap());
            }
        }
    }
}
