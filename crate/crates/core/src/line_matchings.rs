//! Perfect matchings in 3-regular line graphs through odd edge-sets of the
//! triangle contraction, and the reverse construction that encodes perfect
//! matchings of a cubic graph in a max-degree-4 line graph via collars.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::{gf2_solution_count, Gf2System};
use crate::oracles::{count_perfect_matchings, count_perfect_matchings_by_marked, Caps};
use crate::patterns::{pattern_graph, PatternKind};
use crate::Count;

/// Split of a 3-regular line graph into a perfect matching and a perfect
/// triangle packing, with the contraction of the triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineDecomposition {
    /// Edge ids of the perfect matching.
    pub matching: Vec<usize>,
    /// Triangles in the order found; triangle `i` becomes vertex `i`.
    pub triangles: Vec<[usize; 3]>,
    /// Edges of the contraction, one per matching edge (may repeat a pair).
    pub down_edges: Vec<(usize, usize)>,
}

impl LineDecomposition {
    /// The contraction as a simple graph; fails if two matching edges join
    /// the same pair of triangles.
    pub fn down_graph(&self) -> Result<Graph> {
        Graph::new(self.triangles.len(), &self.down_edges)
    }
}

fn require_cubic(g: &Graph) -> Result<()> {
    if g.is_regular(3) {
        Ok(())
    } else {
        Err(Error::Precondition("graph is not 3-regular".into()))
    }
}

/// Greedy triangle removal, lowest vertex first.
pub fn decompose_3regular_line(g: &Graph) -> Result<LineDecomposition> {
    require_cubic(g)?;
    if g.n() < 5 {
        return Err(Error::Precondition("decomposition needs at least 5 vertices".into()));
    }
    let mut tri_of = vec![usize::MAX; g.n()];
    let mut triangles = Vec::new();
    for v in 0..g.n() {
        if tri_of[v] != usize::MAX {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbors(v).iter().map(|&(w, _)| w).filter(|&w| tri_of[w] == usize::MAX).collect();
        let pair = nbrs
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| nbrs[i + 1..].iter().map(move |&b| (a, b)))
            .find(|&(a, b)| g.has_edge(a, b))
            .ok_or_else(|| Error::InvalidGraph(format!("vertex {v} lies on no free triangle; not a 3-regular line graph")))?;
        let t = triangles.len();
        for x in [v, pair.0, pair.1] {
            tri_of[x] = t;
        }
        triangles.push([v, pair.0, pair.1]);
    }
    let mut matching = Vec::new();
    let mut down_edges = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if tri_of[u] != tri_of[v] {
            matching.push(e);
            down_edges.push((tri_of[u], tri_of[v]));
        }
    }
    // every triangle of g must be one of the packed triangles
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if tri_of[u] == tri_of[v] {
            continue;
        }
        for &(w, _) in g.neighbors(u) {
            if w != v && g.has_edge(w, v) {
                return Err(Error::InvalidGraph(format!(
                    "matching edge {e} lies on a triangle; decomposition is not unique"
                )));
            }
        }
    }
    Ok(LineDecomposition {
        matching,
        triangles,
        down_edges,
    })
}

fn odd_sets_of(n: usize, edges: &[(usize, usize)]) -> Count {
    let mut sys = Gf2System::new(edges.len());
    let mut incident = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }
    for inc in &incident {
        sys.push_row(inc, true);
    }
    gf2_solution_count(&sys)
}

/// Edge subsets in which every vertex has odd degree, by solving
/// `B x = 1` over GF(2) for the vertex-edge incidence matrix `B`.
pub fn count_odd_edge_sets(g: &Graph) -> Count {
    odd_sets_of(g.n(), g.edges())
}

/// Perfect matchings of a 3-regular line graph.
pub fn count_perfmatch_3regular_line(g: &Graph, caps: &Caps) -> Result<Count> {
    require_cubic(g)?;
    if g.n() < 5 {
        return count_perfect_matchings(g, caps);
    }
    let d = decompose_3regular_line(g)?;
    Ok(odd_sets_of(d.triangles.len(), &d.down_edges))
}

/// Replaces every vertex `v` of a 3-regular graph by the triangle
/// `3v, 3v+1, 3v+2`; the `i`-th incident edge of `v` in edge order attaches
/// to `3v + i`. Returns the graph and the ids of the original edges.
pub fn triangle_expand_with_matching(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    require_cubic(g)?;
    let mut edges = Vec::with_capacity(3 * g.n() + g.m());
    let mut port = vec![[0usize; 2]; g.m()];
    for v in 0..g.n() {
        for (i, e) in g.incident_edges(v).into_iter().enumerate() {
            let (a, _) = g.edge(e);
            port[e][usize::from(a != v)] = 3 * v + i;
        }
        edges.extend([(3 * v, 3 * v + 1), (3 * v + 1, 3 * v + 2), (3 * v, 3 * v + 2)]);
    }
    let originals: Vec<(usize, usize)> = port.iter().map(|p| (p[0], p[1])).collect();
    edges.extend(&originals);
    let out = Graph::new(3 * g.n(), &edges)?;
    let ids = originals.iter().map(|&(a, b)| out.edge_id(a, b).unwrap()).collect();
    Ok((out, ids))
}

pub fn triangle_expand(g: &Graph) -> Result<Graph> {
    Ok(triangle_expand_with_matching(g)?.0)
}

/// Replaces every edge `uv` of the matching by a fresh collar of length
/// `ell` with ends `u` and `v`. Collar `j` (in the order of `matching`)
/// occupies vertices `n + 4·ell·j ..`.
pub fn replace_matching_with_collars(gp: &Graph, matching: &[usize], ell: usize) -> Result<Graph> {
    if ell == 0 {
        return Err(Error::Precondition("collar length must be at least 1".into()));
    }
    let mut covered = vec![false; gp.n()];
    for &e in matching {
        if e >= gp.m() {
            return Err(Error::Precondition(format!("no edge {e}")));
        }
        let (u, v) = gp.edge(e);
        if covered[u] || covered[v] {
            return Err(Error::Precondition("edge set is not a matching".into()));
        }
        covered[u] = true;
        covered[v] = true;
    }
    let collar = pattern_graph(PatternKind::Collar, &[ell]);
    let inner = 4 * ell;
    let mut edges: Vec<(usize, usize)> = gp
        .edges()
        .iter()
        .enumerate()
        .filter(|(e, _)| !matching.contains(e))
        .map(|(_, &p)| p)
        .collect();
    for (j, &e) in matching.iter().enumerate() {
        let (u, v) = gp.edge(e);
        let base = gp.n() + inner * j;
        let map = |x: usize| match x {
            0 => u,
            x if x == inner + 1 => v,
            x => base + x - 1,
        };
        edges.extend(collar.edges().iter().map(|&(a, b)| (map(a), map(b))));
    }
    Graph::new(gp.n() + inner * matching.len(), &edges)
}

/// Base-`r` digits of `total`; entry `t` is the coefficient of `r^(d - t)`.
pub fn extract_digits_base_r(total: &Count, r: &Count, d: usize) -> Result<Vec<Count>> {
    if *r < BigUint::from(2u32) {
        return Err(Error::Precondition("digit base must be at least 2".into()));
    }
    if *total >= r.pow(d as u32 + 1) {
        return Err(Error::DigitOverflow {
            index: 0,
            value: total.to_string(),
            base: r.to_string(),
        });
    }
    let mut digits = vec![Count::zero(); d + 1];
    let mut rest = total.clone();
    for t in (0..=d).rev() {
        digits[t] = &rest % r;
        rest /= r;
    }
    Ok(digits)
}

/// Perfect matchings of the 3-regular graph `g`, read off as one base-`3^ell`
/// digit of the perfect-matching count of the collar graph.
///
/// The digits `m_t` are checked against an enumeration of the perfect
/// matchings of the triangle expansion by number of original edges; a digit
/// of at least `3^ell` is reported as [`Error::DigitOverflow`].
pub fn perfmatch_via_line_reduction(g: &Graph, ell: usize, caps: &Caps) -> Result<Count> {
    require_cubic(g)?;
    let (gp, matching) = triangle_expand_with_matching(g)?;
    let b = replace_matching_with_collars(&gp, &matching, ell)?;
    let r = BigUint::from(3u32).pow(ell as u32);
    let expected = count_perfect_matchings_by_marked(&gp, &matching, caps)?;
    for (t, m_t) in expected.iter().enumerate() {
        if *m_t >= r {
            return Err(Error::DigitOverflow {
                index: t,
                value: m_t.to_string(),
                base: r.to_string(),
            });
        }
    }
    let total = count_perfect_matchings(&b, caps)?;
    let digits = extract_digits_base_r(&total, &r, matching.len())?;
    if digits != expected {
        return Err(Error::Inconsistent("collar digits disagree with enumeration".into()));
    }
    Ok(digits[g.n() / 2].clone())
}

/// Perfect matchings of `collar(ell)`, of it minus `u`, and minus both ends.
pub fn collar_counts(ell: usize, caps: &Caps) -> Result<[Count; 3]> {
    let c = pattern_graph(PatternKind::Collar, &[ell]);
    let v = 4 * ell + 1;
    Ok([
        count_perfect_matchings(&c, caps)?,
        count_perfect_matchings(&c.remove_vertices(&[0]), caps)?,
        count_perfect_matchings(&c.remove_vertices(&[0, v]), caps)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::graph::{line_graph, subdivide};
    use crate::oracles::{count_odd_edge_sets_by_size, count_odd_edge_sets_enum, is_isomorphic};

    fn caps() -> Caps {
        Caps::default()
    }

    fn k4() -> Graph {
        pattern_graph(PatternKind::Clique, &[4])
    }

    #[test]
    fn subdivided_k4_line_graph() {
        let g = line_graph(&subdivide(&k4(), 1));
        assert_eq!(g.n(), 12);
        let d = decompose_3regular_line(&g).unwrap();
        assert_eq!(d.triangles.len(), 4);
        assert_eq!(d.matching.len(), 6);
        assert!(is_isomorphic(&d.down_graph().unwrap(), &k4(), &caps()).unwrap());
        assert_eq!(count_perfmatch_3regular_line(&g, &caps()).unwrap(), BigUint::from(8u32));
        assert_eq!(count_perfect_matchings(&g, &caps()).unwrap(), BigUint::from(8u32));
        // per-size odd sets against perfect matchings by matching edges
        let by_size = count_odd_edge_sets_by_size(&d.down_graph().unwrap(), &caps()).unwrap();
        let by_marked = count_perfect_matchings_by_marked(&g, &d.matching, &caps()).unwrap();
        assert_eq!(by_size, by_marked);
    }

    #[test]
    fn preconditions() {
        assert!(decompose_3regular_line(&k4()).is_err());
        assert!(decompose_3regular_line(&pattern_graph(PatternKind::Cycle, &[6])).is_err());
        assert!(triangle_expand(&pattern_graph(PatternKind::Cycle, &[6])).is_err());
        // K_{3,3} is cubic and triangle-free
        assert!(matches!(
            decompose_3regular_line(&pattern_graph(PatternKind::Biclique, &[3, 3])),
            Err(Error::InvalidGraph(_))
        ));
        assert_eq!(count_perfmatch_3regular_line(&k4(), &caps()).unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn odd_sets() {
        assert_eq!(count_odd_edge_sets(&k4()), BigUint::from(8u32));
        assert_eq!(count_odd_edge_sets(&pattern_graph(PatternKind::Path, &[1])), BigUint::one());
        assert!(count_odd_edge_sets(&Graph::empty(1)).is_zero());
        let k33 = pattern_graph(PatternKind::Biclique, &[3, 3]);
        assert_eq!(count_odd_edge_sets(&k33), count_odd_edge_sets_enum(&k33, &caps()).unwrap());
    }

    #[test]
    fn expansion_round_trip() {
        for g in [k4(), pattern_graph(PatternKind::Biclique, &[3, 3])] {
            let (gp, m) = triangle_expand_with_matching(&g).unwrap();
            assert_eq!((gp.n(), gp.m()), (3 * g.n(), 3 * g.n() + g.m()));
            let d = decompose_3regular_line(&gp).unwrap();
            assert_eq!(d.matching, {
                let mut s = m.clone();
                s.sort_unstable();
                s
            });
            assert!(is_isomorphic(&d.down_graph().unwrap(), &g, &caps()).unwrap());
            let per_t = count_perfect_matchings_by_marked(&gp, &m, &caps()).unwrap();
            assert_eq!(per_t[g.n() / 2], count_perfect_matchings(&g, &caps()).unwrap());
        }
    }

    #[test]
    fn collars() {
        for ell in 1..=4 {
            let [full, one, both] = collar_counts(ell, &caps()).unwrap();
            assert_eq!(full, BigUint::one());
            assert!(one.is_zero());
            assert_eq!(both, BigUint::from(3u32).pow(ell as u32));
        }
        let (gp, m) = triangle_expand_with_matching(&k4()).unwrap();
        let b = replace_matching_with_collars(&gp, &m, 1).unwrap();
        assert!((0..b.n()).all(|v| b.degree(v) <= 4));
        let single = replace_matching_with_collars(&pattern_graph(PatternKind::Path, &[1]), &[0], 1).unwrap();
        assert_eq!(single.n(), 6);
        assert!(replace_matching_with_collars(&pattern_graph(PatternKind::Path, &[2]), &[0, 1], 1).is_err());
    }

    #[test]
    fn barbed_wire_line_graph_is_collar() {
        let big = Caps {
            iso_vertices: 16,
            ..caps()
        };
        for ell in 1..=3 {
            let wire = pattern_graph(PatternKind::BarbedWire, &[ell]);
            let collar = pattern_graph(PatternKind::Collar, &[ell]);
            assert!(is_isomorphic(&line_graph(&wire), &collar, &big).unwrap());
        }
    }

    #[test]
    fn digits() {
        let d = extract_digits_base_r(&BigUint::from(23u32), &BigUint::from(9u32), 1).unwrap();
        assert_eq!(d, vec![BigUint::from(2u32), BigUint::from(5u32)]);
        assert!(extract_digits_base_r(&BigUint::zero(), &BigUint::from(9u32), 3)
            .unwrap()
            .iter()
            .all(|x| x.is_zero()));
        assert!(extract_digits_base_r(&BigUint::from(81u32), &BigUint::from(9u32), 1).is_err());
    }

    #[test]
    fn reduction_pipeline() {
        assert_eq!(perfmatch_via_line_reduction(&k4(), 2, &caps()).unwrap(), BigUint::from(3u32));
        assert!(matches!(
            perfmatch_via_line_reduction(&k4(), 1, &caps()),
            Err(Error::DigitOverflow { .. })
        ));
        let k33 = pattern_graph(PatternKind::Biclique, &[3, 3]);
        assert_eq!(perfmatch_via_line_reduction(&k33, 3, &caps()).unwrap(), BigUint::from(6u32));
    }
}
