//! Named pattern graphs with a fixed vertex numbering.
//!
//! | kind           | params  | numbering                                                        |
//! |----------------|---------|------------------------------------------------------------------|
//! | `P`            | k       | path `0-1-..-k` (k edges)                                        |
//! | `C`            | k ≥ 3   | cycle `0-1-..-(k-1)-0`                                           |
//! | `K`            | k       | complete graph on `0..k`                                         |
//! | `Kab`          | a, b    | left side `0..a`, right side `a..a+b`                            |
//! | `M`            | k       | k disjoint edges `2j-(2j+1)`                                     |
//! | `T`            | k       | k disjoint triangles on `3j, 3j+1, 3j+2`                         |
//! | `WP`           | k       | k disjoint wedges `3j-(3j+1)-(3j+2)`, centre `3j+1`              |
//! | `W`            | k       | windmill: centre 0, matching `(2j-1)-(2j)`, centre to all        |
//! | `SS`           | k       | subdivided star: centre 0, matching `(2j-1)-(2j)`, centre–`2j-1` |
//! | `collar`       | ℓ       | `u = 0`, blocks `a_i, b_i, c_i, d_i`, `v = 4ℓ+1`                  |
//! | `barbed`       | ℓ       | spine `0..=2ℓ+2`, two leaves on each of spine `2, 4, .., 2ℓ`      |
//! | `gadget`       | i       | cycle weight gadget with ends `a_i`, `b_i`                       |
//! | `gadget-trunc` | W, i    | `gadget W` without marked edges `e_W .. e_(i+1)`                 |
//! | `E`            | n ≥ 0   | `n` isolated vertices                                            |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Path,
    Cycle,
    Clique,
    Biclique,
    Matching,
    Triangles,
    Wedges,
    Windmill,
    SubdividedStar,
    Collar,
    BarbedWire,
    Gadget,
    GadgetTruncated,
    Edgeless,
}

impl PatternKind {
    pub const ALL: [PatternKind; 14] = [
        PatternKind::Path,
        PatternKind::Cycle,
        PatternKind::Clique,
        PatternKind::Biclique,
        PatternKind::Matching,
        PatternKind::Triangles,
        PatternKind::Wedges,
        PatternKind::Windmill,
        PatternKind::SubdividedStar,
        PatternKind::Collar,
        PatternKind::BarbedWire,
        PatternKind::Gadget,
        PatternKind::GadgetTruncated,
        PatternKind::Edgeless,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Path => "P",
            PatternKind::Cycle => "C",
            PatternKind::Clique => "K",
            PatternKind::Biclique => "Kab",
            PatternKind::Matching => "M",
            PatternKind::Triangles => "T",
            PatternKind::Wedges => "WP",
            PatternKind::Windmill => "W",
            PatternKind::SubdividedStar => "SS",
            PatternKind::Collar => "collar",
            PatternKind::BarbedWire => "barbed",
            PatternKind::Gadget => "gadget",
            PatternKind::GadgetTruncated => "gadget-trunc",
            PatternKind::Edgeless => "E",
        }
    }

    fn arity(self) -> usize {
        match self {
            PatternKind::Biclique | PatternKind::GadgetTruncated => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "path" => "P",
            "cycle" => "C",
            "clique" => "K",
            "biclique" => "Kab",
            "matching" => "M",
            "triangles" => "T",
            "wedges" => "WP",
            "windmill" => "W",
            "star" | "subdivided-star" => "SS",
            "barbed-wire" => "barbed",
            "edgeless" => "E",
            other => other,
        };
        PatternKind::ALL
            .into_iter()
            .find(|k| k.name() == alias)
            .ok_or_else(|| Error::InvalidPattern(format!("unknown pattern kind `{s}`")))
    }
}

/// A constructed pattern with its named anchor vertices and marked edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub kind: PatternKind,
    pub params: Vec<usize>,
    pub graph: Graph,
    pub anchors: BTreeMap<String, usize>,
    /// Marked edges by name, as edge ids of `graph`.
    pub marked: BTreeMap<String, usize>,
}

impl Pattern {
    pub fn anchor(&self, name: &str) -> usize {
        self.anchors[name]
    }
}

pub fn make_pattern(kind: PatternKind, params: &[usize]) -> Result<Pattern> {
    if params.len() != kind.arity() {
        return Err(Error::InvalidPattern(format!(
            "{kind} takes {} parameter(s), got {}",
            kind.arity(),
            params.len()
        )));
    }
    let p = params[0];
    let min = match kind {
        PatternKind::Cycle => 3,
        PatternKind::Edgeless => 0,
        _ => 1,
    };
    if params.iter().any(|&x| x < min) {
        return Err(Error::InvalidPattern(format!("{kind} needs parameters >= {min}")));
    }
    let mut anchors = BTreeMap::new();
    let mut marked_pairs: Vec<(String, (usize, usize))> = Vec::new();
    let (n, edges): (usize, Vec<(usize, usize)>) = match kind {
        PatternKind::Path => (p + 1, (0..p).map(|i| (i, i + 1)).collect()),
        PatternKind::Cycle => (p, (0..p).map(|i| (i, (i + 1) % p)).collect()),
        PatternKind::Clique => (p, (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j))).collect()),
        PatternKind::Biclique => {
            let (a, b) = (params[0], params[1]);
            (a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect())
        }
        PatternKind::Matching => (2 * p, (0..p).map(|j| (2 * j, 2 * j + 1)).collect()),
        PatternKind::Triangles => (
            3 * p,
            (0..p)
                .flat_map(|j| [(3 * j, 3 * j + 1), (3 * j + 1, 3 * j + 2), (3 * j, 3 * j + 2)])
                .collect(),
        ),
        PatternKind::Wedges => (
            3 * p,
            (0..p).flat_map(|j| [(3 * j, 3 * j + 1), (3 * j + 1, 3 * j + 2)]).collect(),
        ),
        PatternKind::Windmill => (
            2 * p + 1,
            (1..=p)
                .flat_map(|j| [(2 * j - 1, 2 * j), (0, 2 * j - 1), (0, 2 * j)])
                .collect(),
        ),
        PatternKind::SubdividedStar => (
            2 * p + 1,
            (1..=p).flat_map(|j| [(2 * j - 1, 2 * j), (0, 2 * j - 1)]).collect(),
        ),
        PatternKind::Collar => {
            let mut edges = Vec::new();
            let v = 4 * p + 1;
            for i in 0..p {
                let base = 1 + 4 * i;
                for x in 0..4 {
                    for y in x + 1..4 {
                        edges.push((base + x, base + y));
                    }
                }
                anchors.insert(format!("a{}", i + 1), base);
                anchors.insert(format!("b{}", i + 1), base + 1);
                if i + 1 < p {
                    edges.push((base + 1, base + 4));
                }
            }
            edges.push((0, 1));
            edges.push((4 * p - 2, v));
            anchors.insert("u".into(), 0);
            anchors.insert("v".into(), v);
            (4 * p + 2, edges)
        }
        PatternKind::BarbedWire => {
            let spine = 2 * p + 3;
            let mut edges: Vec<(usize, usize)> = (0..spine - 1).map(|i| (i, i + 1)).collect();
            let mut next = spine;
            for j in 1..=p {
                edges.push((2 * j, next));
                edges.push((2 * j, next + 1));
                next += 2;
            }
            anchors.insert("u".into(), 0);
            anchors.insert("v".into(), spine - 1);
            (next, edges)
        }
        PatternKind::Gadget | PatternKind::GadgetTruncated => {
            let w = p;
            let keep = if kind == PatternKind::Gadget { w } else { params[1] };
            if keep > w {
                return Err(Error::InvalidPattern(format!(
                    "gadget-trunc needs i <= W, got W={w}, i={keep}"
                )));
            }
            let (n, edges, marks) = cycle_gadget_layout(w, &mut anchors);
            let dropped: Vec<(usize, usize)> = marks[keep..].to_vec();
            for (i, &e) in marks.iter().enumerate().take(keep) {
                marked_pairs.push((format!("e{}", i + 1), e));
            }
            anchors.insert("a".into(), anchors[&format!("a{w}")]);
            anchors.insert("b".into(), anchors[&format!("b{w}")]);
            (n, edges.into_iter().filter(|e| !dropped.contains(e)).collect())
        }
        PatternKind::Edgeless => (p, Vec::new()),
    };
    let graph = Graph::new(n, &edges)?;
    let marked = marked_pairs
        .into_iter()
        .map(|(name, (u, v))| (name, graph.edge_id(u, v).expect("marked edge exists")))
        .collect();
    Ok(Pattern {
        kind,
        params: params.to_vec(),
        graph,
        anchors,
        marked,
    })
}

/// Builds the gadget recursively. Returns vertex count, edges, and the marked
/// edges `e_1..e_w` in order.
fn cycle_gadget_layout(
    w: usize,
    anchors: &mut BTreeMap<String, usize>,
) -> (usize, Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let mut edges = vec![(0, 1)];
    let mut marks = vec![(0, 1)];
    anchors.insert("a1".into(), 0);
    anchors.insert("b1".into(), 1);
    let (mut a, mut b, mut n) = (0, 1, 2);
    for i in 1..w {
        let (na, nb) = (n, n + 1);
        n += 2;
        edges.push((na, a));
        edges.push((nb, b));
        // path of 2i+1 edges from na to nb; its (i+1)-th edge is marked
        let mut path = vec![na];
        path.extend(n..n + 2 * i);
        path.push(nb);
        n += 2 * i;
        for (pos, pair) in path.windows(2).enumerate() {
            edges.push((pair[0], pair[1]));
            if pos == i {
                marks.push((pair[0].min(pair[1]), pair[0].max(pair[1])));
            }
        }
        anchors.insert(format!("a{}", i + 1), na);
        anchors.insert(format!("b{}", i + 1), nb);
        a = na;
        b = nb;
    }
    (n, edges, marks)
}

/// Parses `builtin:<kind>,<p1>[,<p2>]` (the `builtin:` prefix is optional).
pub fn parse_builtin(spec: &str) -> Result<Pattern> {
    let body = spec.strip_prefix("builtin:").unwrap_or(spec);
    let mut parts = body.split(',');
    let kind: PatternKind = parts.next().unwrap_or("").trim().parse()?;
    let params = parts
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidPattern(format!("bad parameter `{p}` in `{spec}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    make_pattern(kind, &params)
}

/// Shorthand for the graph of a pattern that is known to be valid.
pub fn pattern_graph(kind: PatternKind, params: &[usize]) -> Graph {
    make_pattern(kind, params)
        .unwrap_or_else(|e| panic!("pattern {kind} {params:?}: {e}"))
        .graph
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(kind: PatternKind, params: &[usize]) -> (usize, usize) {
        let g = pattern_graph(kind, params);
        (g.n(), g.m())
    }

    #[test]
    fn documented_sizes() {
        assert_eq!(size(PatternKind::Windmill, &[3]), (7, 9));
        assert_eq!(size(PatternKind::SubdividedStar, &[2]), (5, 4));
        assert_eq!(size(PatternKind::Collar, &[2]), (10, 15));
        assert_eq!(size(PatternKind::Collar, &[1]), (6, 8));
        assert_eq!(size(PatternKind::BarbedWire, &[3]), (15, 14));
        assert_eq!(size(PatternKind::Wedges, &[3]), (9, 6));
        assert_eq!(size(PatternKind::Biclique, &[2, 3]), (5, 6));
        assert_eq!(size(PatternKind::Edgeless, &[0]), (0, 0));
    }

    #[test]
    fn gadget_structure() {
        assert_eq!(size(PatternKind::Gadget, &[1]), (2, 1));
        assert_eq!(size(PatternKind::Gadget, &[2]), (6, 6));
        for w in 1..=5 {
            let p = make_pattern(PatternKind::Gadget, &[w]).unwrap();
            assert_eq!(p.graph.n(), w * w + w);
            assert_eq!(p.marked.len(), w);
            assert_eq!(p.anchor("a"), p.anchor(&format!("a{w}")));
        }
        let g3 = make_pattern(PatternKind::Gadget, &[3]).unwrap();
        let h1 = make_pattern(PatternKind::GadgetTruncated, &[3, 1]).unwrap();
        assert_eq!(h1.graph.m(), g3.graph.m() - 2);
        assert_eq!(h1.marked.len(), 1);
        assert!(make_pattern(PatternKind::GadgetTruncated, &[2, 3]).is_err());
    }

    #[test]
    fn collar_anchors() {
        let c = make_pattern(PatternKind::Collar, &[3]).unwrap();
        let g = &c.graph;
        assert_eq!(g.degree(c.anchor("u")), 1);
        assert_eq!(g.degree(c.anchor("v")), 1);
        assert!(g.has_edge(c.anchor("u"), c.anchor("a1")));
        assert!(g.has_edge(c.anchor("b1"), c.anchor("a2")));
        assert!(g.has_edge(c.anchor("b3"), c.anchor("v")));
    }

    #[test]
    fn builtin_grammar() {
        assert_eq!(parse_builtin("builtin:P,2").unwrap().graph.m(), 2);
        assert_eq!(parse_builtin("Kab,1,3").unwrap().graph.m(), 3);
        assert!(parse_builtin("builtin:C,2").is_err());
        assert!(parse_builtin("builtin:Q,2").is_err());
        assert!(parse_builtin("builtin:P").is_err());
        assert!(parse_builtin("builtin:P,x").is_err());
        assert_eq!("windmill".parse::<PatternKind>().unwrap(), PatternKind::Windmill);
    }
}
