//! Simple undirected graphs with optional edge colors and weights.
//!
//! Vertices are the dense ids `0..n`. Edges are unordered pairs stored as
//! `(u, v)` with `u < v`, kept sorted lexicographically; the position of an
//! edge in that order is its edge id. Colors and weights, when present, are
//! indexed by edge id.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    colors: Option<Vec<u32>>,
    num_colors: u32,
    weights: Option<Vec<u64>>,
    adj: Vec<Vec<(usize, usize)>>,
}

/// An edge together with its optional attributes, used when building graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeSpec {
    pub u: usize,
    pub v: usize,
    pub color: Option<u32>,
    pub weight: Option<u64>,
}

impl EdgeSpec {
    pub fn plain(u: usize, v: usize) -> Self {
        EdgeSpec {
            u,
            v,
            color: None,
            weight: None,
        }
    }

    pub fn colored(u: usize, v: usize, color: u32) -> Self {
        EdgeSpec {
            u,
            v,
            color: Some(color),
            weight: None,
        }
    }

    pub fn weighted(u: usize, v: usize, weight: u64) -> Self {
        EdgeSpec {
            u,
            v,
            color: None,
            weight: Some(weight),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverMode {
    Exact,
    /// Cover of the graph after deleting every connected component that is a
    /// single edge.
    Weak,
}

/// Result of contracting the blocks of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quotient {
    /// Some block contains two adjacent vertices; the quotient would carry a
    /// self-loop.
    Loop,
    Simple {
        graph: Graph,
        /// At most one pattern edge runs between any two blocks.
        edge_injective: bool,
    },
}

impl Graph {
    /// Plain graph on `n` vertices.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let specs: Vec<EdgeSpec> = edges.iter().map(|&(u, v)| EdgeSpec::plain(u, v)).collect();
        Graph::from_specs(n, &specs, None)
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, &[]).expect("edgeless graph is valid")
    }

    /// Edge-colored graph; `num_colors` defaults to the largest color used.
    pub fn colored(n: usize, edges: &[(usize, usize, u32)], num_colors: Option<u32>) -> Result<Graph> {
        let specs: Vec<EdgeSpec> = edges
            .iter()
            .map(|&(u, v, c)| EdgeSpec::colored(u, v, c))
            .collect();
        Graph::from_specs(n, &specs, num_colors)
    }

    pub fn weighted(n: usize, edges: &[(usize, usize, u64)]) -> Result<Graph> {
        let specs: Vec<EdgeSpec> = edges
            .iter()
            .map(|&(u, v, w)| EdgeSpec::weighted(u, v, w))
            .collect();
        Graph::from_specs(n, &specs, None)
    }

    /// General constructor. Colors and weights must be given on all edges or
    /// on none.
    pub fn from_specs(n: usize, specs: &[EdgeSpec], num_colors: Option<u32>) -> Result<Graph> {
        let mut items = Vec::with_capacity(specs.len());
        for s in specs {
            if s.u >= n || s.v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {}-{} out of range for {} vertices",
                    s.u, s.v, n
                )));
            }
            if s.u == s.v {
                return Err(Error::InvalidGraph(format!("self-loop at {}", s.u)));
            }
            let (a, b) = if s.u < s.v { (s.u, s.v) } else { (s.v, s.u) };
            items.push(((a, b), s.color, s.weight));
        }
        items.sort_by_key(|it| it.0);
        for w in items.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {}-{}",
                    w[0].0 .0, w[0].0 .1
                )));
            }
        }
        let any_color = items.iter().any(|it| it.1.is_some());
        let any_weight = items.iter().any(|it| it.2.is_some());
        if any_color && items.iter().any(|it| it.1.is_none()) {
            return Err(Error::InvalidGraph("colors must be given on every edge".into()));
        }
        if any_weight && items.iter().any(|it| it.2.is_none()) {
            return Err(Error::InvalidGraph("weights must be given on every edge".into()));
        }
        // An edgeless graph with declared colors is still a colored graph.
        let colored = any_color || (items.is_empty() && matches!(num_colors, Some(k) if k > 0));
        let colors: Option<Vec<u32>> = colored.then(|| items.iter().map(|it| it.1.unwrap()).collect());
        let max_color = colors.as_ref().and_then(|c| c.iter().copied().max()).unwrap_or(0);
        if let Some(cs) = &colors {
            if cs.iter().any(|&c| c == 0) {
                return Err(Error::InvalidGraph("colors are 1-based".into()));
            }
        }
        let num_colors = match num_colors {
            Some(k) if k < max_color => {
                return Err(Error::InvalidGraph(format!(
                    "color {max_color} exceeds declared color count {k}"
                )))
            }
            Some(k) => k,
            None => max_color,
        };
        let weights = any_weight.then(|| items.iter().map(|it| it.2.unwrap()).collect());
        let edges: Vec<(usize, usize)> = items.iter().map(|it| it.0).collect();
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            colors,
            num_colors,
            weights,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn colors(&self) -> Option<&[u32]> {
        self.colors.as_deref()
    }

    pub fn color(&self, id: usize) -> Option<u32> {
        self.colors.as_ref().map(|c| c[id])
    }

    /// Declared number of colors `k`; zero for uncolored graphs.
    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn weights(&self) -> Option<&[u64]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, id: usize) -> Option<u64> {
        self.weights.as_ref().map(|w| w[id])
    }

    /// `(neighbor, edge id)` pairs sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Incident edge ids of `v` in increasing edge order.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self.adj[v].iter().map(|&(_, e)| e).collect();
        ids.sort_unstable();
        ids
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn specs(&self) -> Vec<EdgeSpec> {
        self.edges
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| EdgeSpec {
                u,
                v,
                color: self.color(id),
                weight: self.weight(id),
            })
            .collect()
    }

    /// Same graph with every color removed.
    pub fn uncolored(&self) -> Graph {
        let mut g = self.clone();
        g.colors = None;
        g.num_colors = 0;
        g
    }

    pub fn with_weights(&self, weights: Vec<u64>) -> Result<Graph> {
        if weights.len() != self.m() {
            return Err(Error::InvalidGraph("one weight per edge required".into()));
        }
        let mut g = self.clone();
        g.weights = Some(weights);
        Ok(g)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `keep`, renumbered in increasing order of `keep`.
    /// Attributes are carried over.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut map = vec![usize::MAX; self.n];
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (i, &v) in sorted.iter().enumerate() {
            map[v] = i;
        }
        let specs: Vec<EdgeSpec> = self
            .specs()
            .into_iter()
            .filter(|s| map[s.u] != usize::MAX && map[s.v] != usize::MAX)
            .map(|s| EdgeSpec {
                u: map[s.u],
                v: map[s.v],
                ..s
            })
            .collect();
        Graph::from_specs(sorted.len(), &specs, Some(self.num_colors)).expect("induced subgraph is valid")
    }

    /// Deletes the given vertices and renumbers the rest in order.
    pub fn remove_vertices(&self, drop: &[usize]) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|v| !drop.contains(v)).collect();
        self.induced(&keep)
    }

    /// Spanning subgraph on the chosen edge ids.
    pub fn edge_subgraph(&self, ids: &[usize]) -> Graph {
        let specs: Vec<EdgeSpec> = ids.iter().map(|&id| self.specs()[id]).collect();
        Graph::from_specs(self.n, &specs, Some(self.num_colors)).expect("edge subgraph is valid")
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    /// Two-coloring if the graph is bipartite: `side[v]` is `false` for the
    /// side containing the smallest vertex of each component.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for &(w, _) in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }
}

/// Line graph. Vertex `i` of the result is edge `i` of `g` (sorted edge
/// order); two vertices are adjacent iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    for v in 0..g.n() {
        let inc = g.incident_edges(v);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                edges.push((inc[i], inc[j]));
            }
        }
    }
    Graph::new(g.m(), &edges).expect("line graph of a simple graph is simple")
}

/// Position of an edge segment created by [`subdivide_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub edge: usize,
    /// `0..=t`, counted from the smaller endpoint.
    pub index: usize,
    pub original_color: Option<u32>,
}

/// `t`-subdivision keeping colors: every segment inherits its edge's color.
pub fn subdivide(g: &Graph, t: usize) -> Graph {
    if g.colors().is_some() {
        subdivide_with(g, t, &|s: Segment| s.original_color.unwrap(), g.num_colors())
    } else {
        subdivide_plain(g, t)
    }
}

fn subdivide_plain(g: &Graph, t: usize) -> Graph {
    let (n, edges) = subdivision_layout(g, t);
    Graph::new(n, &edges.iter().map(|&(u, v, _)| (u, v)).collect::<Vec<_>>()).expect("subdivision is simple")
}

/// `t`-subdivision with a caller-chosen color per segment.
///
/// Original vertices keep their ids; the inner vertices of edge `e` are
/// `n + t*e .. n + t*e + t`, ordered from the smaller endpoint.
pub fn subdivide_with(g: &Graph, t: usize, color: &dyn Fn(Segment) -> u32, num_colors: u32) -> Graph {
    let (n, edges) = subdivision_layout(g, t);
    let specs: Vec<EdgeSpec> = edges
        .iter()
        .map(|&(u, v, seg)| EdgeSpec::colored(u, v, color(seg)))
        .collect();
    Graph::from_specs(n, &specs, Some(num_colors)).expect("subdivision is simple")
}

fn subdivision_layout(g: &Graph, t: usize) -> (usize, Vec<(usize, usize, Segment)>) {
    let n = g.n() + t * g.m();
    let mut out = Vec::with_capacity((t + 1) * g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut path = vec![u];
        path.extend((0..t).map(|j| g.n() + t * e + j));
        path.push(v);
        for (index, w) in path.windows(2).enumerate() {
            out.push((
                w[0],
                w[1],
                Segment {
                    edge: e,
                    index,
                    original_color: g.color(e),
                },
            ));
        }
    }
    (n, out)
}

/// Contracts every block of `rho` to a single vertex (block `i` becomes
/// vertex `i`).
pub fn quotient(h: &Graph, rho: &Partition) -> Result<Quotient> {
    if rho.ground_size() != h.n() {
        return Err(Error::Precondition(format!(
            "partition of {} elements used on a graph with {} vertices",
            rho.ground_size(),
            h.n()
        )));
    }
    let block_of = rho.block_index();
    let mut between: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(u, v) in h.edges() {
        let (a, b) = (block_of[u], block_of[v]);
        if a == b {
            return Ok(Quotient::Loop);
        }
        *between.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    let edge_injective = between.values().all(|&c| c <= 1);
    let edges: Vec<(usize, usize)> = between.keys().copied().collect();
    let graph = Graph::new(rho.len(), &edges)?;
    Ok(Quotient::Simple {
        graph,
        edge_injective,
    })
}

/// Minimum vertex cover by exhaustive search over subsets in increasing size.
/// Returns the lexicographically first cover of minimum size.
pub fn min_vertex_cover(g: &Graph, max_vertices: usize) -> Result<Vec<usize>> {
    let active: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    if active.len() > max_vertices {
        return Err(Error::cap("vertex cover search", max_vertices, active.len()));
    }
    for size in 0..=active.len() {
        let mut found = None;
        for_each_subset(&active, size, &mut |s| {
            if found.is_none() && covers(g, s) {
                found = Some(s.to_vec());
            }
        });
        if let Some(c) = found {
            return Ok(c);
        }
    }
    unreachable!("the full vertex set is a cover")
}

pub fn covers(g: &Graph, set: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| set.contains(&u) || set.contains(&v))
}

fn for_each_subset(items: &[usize], size: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &[usize], start: usize, size: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        let need = size - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            rec(items, i + 1, size, cur, f);
            cur.pop();
        }
    }
    rec(items, 0, size, &mut Vec::new(), f);
}

/// Removes every connected component that is exactly one edge.
pub fn drop_isolated_edges(g: &Graph) -> Graph {
    let drop: Vec<usize> = g
        .components()
        .into_iter()
        .filter(|c| c.len() == 2 && g.has_edge(c[0], c[1]))
        .flatten()
        .collect();
    g.remove_vertices(&drop)
}

pub fn vertex_cover_number(g: &Graph, mode: CoverMode, max_vertices: usize) -> Result<usize> {
    let target = match mode {
        CoverMode::Exact => g.clone(),
        CoverMode::Weak => drop_isolated_edges(g),
    };
    Ok(min_vertex_cover(&target, max_vertices)?.len())
}

/// Parses the line-oriented graph format:
///
/// ```text
/// # comment
/// v <n>
/// k <colors>          (optional; declared color count)
/// e <u> <v> [c=<int>] [w=<int>]
/// ```
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut k: Option<u32> = None;
    let mut specs = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: &str| Error::Parse {
            line: line_no,
            msg: msg.to_string(),
        };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("v") => {
                if n.is_some() {
                    return Err(err("repeated v header"));
                }
                let val = parts.next().ok_or_else(|| err("missing vertex count"))?;
                n = Some(val.parse().map_err(|_| err("bad vertex count"))?);
                if parts.next().is_some() {
                    return Err(err("trailing tokens"));
                }
            }
            Some("k") => {
                let val = parts.next().ok_or_else(|| err("missing color count"))?;
                k = Some(val.parse().map_err(|_| err("bad color count"))?);
            }
            Some("e") => {
                let nv = n.ok_or_else(|| err("edge before v header"))?;
                let u: usize = parts
                    .next()
                    .ok_or_else(|| err("missing endpoint"))?
                    .parse()
                    .map_err(|_| err("bad endpoint"))?;
                let v: usize = parts
                    .next()
                    .ok_or_else(|| err("missing endpoint"))?
                    .parse()
                    .map_err(|_| err("bad endpoint"))?;
                if u >= nv || v >= nv {
                    return Err(err("vertex out of range"));
                }
                if u == v {
                    return Err(err("self-loop"));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err("duplicate edge"));
                }
                let mut spec = EdgeSpec::plain(u, v);
                for attr in parts {
                    if let Some(c) = attr.strip_prefix("c=") {
                        spec.color = Some(c.parse().map_err(|_| err("bad color"))?);
                    } else if let Some(w) = attr.strip_prefix("w=") {
                        spec.weight = Some(w.parse().map_err(|_| err("bad weight"))?);
                    } else {
                        return Err(err("unknown edge attribute"));
                    }
                }
                specs.push(spec);
            }
            Some(_) => return Err(err("unknown line type")),
            None => unreachable!(),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing v header".into(),
    })?;
    Graph::from_specs(n, &specs, k).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })
}

/// Serializes in the format read by [`parse_graph`], edges in sorted order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "v {}", g.n()).unwrap();
    let max_used = g.colors().and_then(|c| c.iter().copied().max()).unwrap_or(0);
    if g.num_colors() > max_used {
        writeln!(out, "k {}", g.num_colors()).unwrap();
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        write!(out, "e {u} {v}").unwrap();
        if let Some(c) = g.color(id) {
            write!(out, " c={c}").unwrap();
        }
        if let Some(w) = g.weight(id) {
            write!(out, " w={w}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Disjoint union; vertices of `b` are shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut specs = a.specs();
    specs.extend(b.specs().into_iter().map(|s| EdgeSpec {
        u: s.u + a.n(),
        v: s.v + a.n(),
        ..s
    }));
    Graph::from_specs(a.n() + b.n(), &specs, Some(a.num_colors().max(b.num_colors()))).expect("union is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(k: usize) -> Graph {
        Graph::new(k + 1, &(0..k).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(k: usize) -> Graph {
        Graph::new(k, &(0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::new(2, &[(0, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn line_graph_small_cases() {
        let l = line_graph(&path(2));
        assert_eq!((l.n(), l.m()), (2, 1));
        let l = line_graph(&cycle(4));
        assert_eq!((l.n(), l.m()), (4, 4));
        assert!(l.is_regular(2));
    }

    #[test]
    fn subdivision_counts() {
        let s = subdivide(&path(1), 3);
        assert_eq!((s.n(), s.m()), (5, 4));
        let s = subdivide(&cycle(3), 3);
        assert_eq!((s.n(), s.m()), (12, 12));
        assert!(s.is_regular(2));
        assert_eq!(s.components().len(), 1);
    }

    #[test]
    fn quotient_cases() {
        let p2 = path(2);
        let q = quotient(&p2, &Partition::discrete(3)).unwrap();
        assert_eq!(
            q,
            Quotient::Simple {
                graph: p2.clone(),
                edge_injective: true
            }
        );
        // a-c-b with a, b merged: two parallel edges collapse
        let g = Graph::new(3, &[(0, 2), (1, 2)]).unwrap();
        let rho = Partition::from_blocks(3, vec![vec![0, 1], vec![2]]).unwrap();
        match quotient(&g, &rho).unwrap() {
            Quotient::Simple {
                graph,
                edge_injective,
            } => {
                assert_eq!(graph.m(), 1);
                assert!(!edge_injective);
            }
            Quotient::Loop => panic!("no loop expected"),
        }
        let k2 = path(1);
        let one = Partition::from_blocks(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(quotient(&k2, &one).unwrap(), Quotient::Loop);
    }

    #[test]
    fn cover_numbers() {
        let k3 = cycle(3);
        assert_eq!(vertex_cover_number(&k3, CoverMode::Exact, 16).unwrap(), 2);
        let matching = Graph::new(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(vertex_cover_number(&matching, CoverMode::Weak, 16).unwrap(), 0);
        assert_eq!(vertex_cover_number(&matching, CoverMode::Exact, 16).unwrap(), 3);
        let wedges = Graph::new(9, &[(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8)]).unwrap();
        assert_eq!(vertex_cover_number(&wedges, CoverMode::Weak, 16).unwrap(), 3);
        assert!(vertex_cover_number(&cycle(20), CoverMode::Exact, 10).unwrap_err().is_cap());
    }

    #[test]
    fn parse_examples() {
        let k2 = parse_graph("v 2\ne 0 1").unwrap();
        assert_eq!(k2, path(1));
        let cp = parse_graph("v 3\ne 0 1 c=1\ne 1 2 c=2").unwrap();
        assert_eq!(cp.colors(), Some(&[1, 2][..]));
        assert_eq!(cp.num_colors(), 2);
        assert!(matches!(parse_graph("v 3\ne 0 1\ne 1 0"), Err(Error::Parse { line: 3, .. })));
        assert!(parse_graph("v 2\ne 0 5").is_err());
        assert!(parse_graph("e 0 1").is_err());
        assert!(parse_graph("v 2\nq 0 1").is_err());
    }

    #[test]
    fn serialize_sorts_edges() {
        let g = Graph::weighted(3, &[(2, 1, 4), (0, 1, 7)]).unwrap();
        assert_eq!(serialize_graph(&g), "v 3\ne 0 1 w=7\ne 1 2 w=4\n");
        let declared = Graph::colored(2, &[(0, 1, 1)], Some(3)).unwrap();
        let text = serialize_graph(&declared);
        assert_eq!(text, "v 2\nk 3\ne 0 1 c=1\n");
        assert_eq!(parse_graph(&text).unwrap(), declared);
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(cycle(6).bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
    }
}
