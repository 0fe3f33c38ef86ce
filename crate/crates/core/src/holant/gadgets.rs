use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::eval::insert_matchgate;
use super::{pair_color, Color, Signature, SignatureGraph};
use crate::error::{Error, Result};
use crate::graph::{subdivide, Graph};
use crate::numeric::{rat, rat_from_count, to_count, Rational};
use crate::oracles::count_matchings;
use crate::{par, Count};

fn colored_input(g: &Graph) -> Result<&[u32]> {
    g.colors()
        .ok_or_else(|| Error::Precondition("an edge-colored graph is required".into()))
}

/// Signature graph on `g` with `HwLeq1` at every vertex; its colorful Holant
/// is the number of colorful matchings of `g`.
pub fn build_match_holant(g: &Graph) -> Result<SignatureGraph> {
    let colors = colored_input(g)?;
    let mut s = SignatureGraph::new();
    for _ in 0..g.n() {
        s.add_vertex(Signature::HwLeq1);
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        s.add_edge(u, v, colors[e], None)?;
    }
    for c in 1..=g.num_colors() {
        s.declare_color(c);
    }
    Ok(s)
}

/// Drops the signatures of an all-`HwLeq1` signature graph without dangling
/// edges. Vertex ids are kept; colors are renumbered `1..` in increasing
/// order.
pub fn strip_signatures(omega: &SignatureGraph) -> Result<Graph> {
    if !omega.all_hw_leq1() {
        return Err(Error::Precondition("only HW<=1 signatures can be stripped".into()));
    }
    if omega.edges.iter().any(|e| e.is_dangling()) {
        return Err(Error::Precondition("cannot strip a graph with dangling edges".into()));
    }
    let compact: BTreeMap<Color, u32> = omega
        .internal_colors()
        .into_iter()
        .enumerate()
        .map(|(i, c)| (c, i as u32 + 1))
        .collect();
    let edges: Vec<(usize, usize, u32)> = omega
        .edges
        .iter()
        .map(|e| (e.u, e.v.unwrap(), compact[&e.color]))
        .collect();
    Graph::colored(omega.n(), &edges, Some(compact.len() as u32))
}

/// Bipartite signature graph whose colorful Holant counts the colorful
/// matchings of `g`.
#[derive(Clone, Debug)]
pub struct OmegaBip {
    pub omega: SignatureGraph,
    /// `w[i - 1]` is the vertex collecting color `i`.
    pub w: Vec<usize>,
    /// `class_edges[i - 1]` lists the edges of color `i` in `g` in edge order.
    pub class_edges: Vec<Vec<usize>>,
}

/// Every edge `e = uv` (`u < v`) of color `i` becomes `u w_i` of color
/// `(i,1)` and `w_i v` of color `(i,2)`, both annotated `e`. The original
/// vertices keep their ids and `HwLeq1`; `w_i` gets id `n + i - 1` and
/// `AnnotationEq`.
pub fn build_omega_bip(g: &Graph) -> Result<OmegaBip> {
    let colors = colored_input(g)?;
    let k = g.num_colors();
    let mut omega = SignatureGraph::new();
    for _ in 0..g.n() {
        omega.add_vertex(Signature::HwLeq1);
    }
    let w: Vec<usize> = (0..k).map(|_| omega.add_vertex(Signature::AnnotationEq)).collect();
    let mut class_edges = vec![Vec::new(); k as usize];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let i = colors[e];
        let wi = w[i as usize - 1];
        omega.add_edge(u, wi, pair_color(i, 1), Some(e))?;
        omega.add_edge(wi, v, pair_color(i, 2), Some(e))?;
        class_edges[i as usize - 1].push(e);
    }
    for i in 1..=k {
        omega.declare_color(pair_color(i, 1));
        omega.declare_color(pair_color(i, 2));
    }
    Ok(OmegaBip { omega, w, class_edges })
}

/// Matchgate replacing `w_i` for a class with the given edge annotations
/// (`m = annotations.len() >= 1`).
///
/// Vertices: `a_j = j - 1`, `b_j = m + j - 1`, and for variant 2 also
/// `c_j = 2m + j - 1` with edges `a_j c_j` of color `(i,3)` and `c_j b_j`
/// of color `(i,4)`. Dangling edge `2j - 1` sits at `a_j` with color
/// `(i,1)`, dangling edge `2j` at `b_j` with color `(i,2)`.
pub fn build_gamma(variant: u8, i: u32, annotations: &[usize]) -> Result<SignatureGraph> {
    if !(1..=2).contains(&variant) {
        return Err(Error::Precondition(format!("gadget variant must be 1 or 2, got {variant}")));
    }
    if i == 0 || annotations.is_empty() {
        return Err(Error::Precondition("gadget needs a color >= 1 and at least one edge".into()));
    }
    let m = annotations.len();
    let mut s = SignatureGraph::new();
    let vertices = if variant == 2 { 3 * m } else { 2 * m };
    for _ in 0..vertices {
        s.add_vertex(Signature::HwLeq1);
    }
    for (j, &ann) in annotations.iter().enumerate() {
        s.add_dangling(j, pair_color(i, 1), 2 * j + 1, Some(ann))?;
        s.add_dangling(m + j, pair_color(i, 2), 2 * j + 2, Some(ann))?;
    }
    if variant == 2 {
        for j in 0..m {
            s.add_edge(j, 2 * m + j, pair_color(i, 3), None)?;
            s.add_edge(2 * m + j, m + j, pair_color(i, 4), None)?;
        }
    }
    Ok(s)
}

/// Coefficients `(m² - 3m + 3, -1)` of the two gadget variants in the
/// combined signature at `w_i`.
pub fn gamma_coefficients(m: usize) -> [Rational; 2] {
    let m = m as i64;
    [rat(m * m - 3 * m + 3), rat(-1)]
}

/// One colorful-matching query of the subdivision reduction.
#[derive(Clone, Debug)]
pub struct SubdivisionQuery {
    /// Gadget variant per color, `theta[i - 1]` in `{1, 2}`.
    pub theta: Vec<u8>,
    pub coefficient: Rational,
    pub graph: Graph,
    /// `embedding[x]` is the vertex of the 3-subdivision of the input that
    /// vertex `x` of `graph` corresponds to.
    pub embedding: Vec<usize>,
}

impl SubdivisionQuery {
    /// True if `embedding` maps `graph` injectively onto a subgraph of `sub`.
    pub fn embeds_into(&self, sub: &Graph) -> bool {
        let mut seen = vec![false; sub.n()];
        for &x in &self.embedding {
            if x >= sub.n() || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        self.embedding.len() == self.graph.n()
            && self
                .graph
                .edges()
                .iter()
                .all(|&(u, v)| sub.has_edge(self.embedding[u], self.embedding[v]))
    }
}

/// The `2^k` graphs, with coefficients, whose colorful matching counts
/// combine to the colorful matching count of `g`. Empty if a color class of
/// `g` is empty (the count is then 0).
pub fn subdivision_queries(g: &Graph) -> Result<Vec<SubdivisionQuery>> {
    let bip = build_omega_bip(g)?;
    let k = g.num_colors() as usize;
    if bip.class_edges.iter().any(|c| c.is_empty()) {
        return Ok(Vec::new());
    }
    if k >= 24 {
        return Err(Error::cap("colors in subdivision reduction", 23, k));
    }
    let n = g.n();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0..(1usize << k) {
        let theta: Vec<u8> = (0..k).map(|i| 1 + ((mask >> (k - 1 - i)) & 1) as u8).collect();
        let mut omega = bip.omega.clone();
        let mut target: Vec<usize> = (0..n).chain(std::iter::repeat_n(usize::MAX, k)).collect();
        let mut w = bip.w.clone();
        let mut coefficient = rat(1);
        for i in 1..=k {
            let class = &bip.class_edges[i - 1];
            let gamma = build_gamma(theta[i - 1], i as u32, class)?;
            coefficient *= &gamma_coefficients(class.len())[theta[i - 1] as usize - 1];
            let wi = w[i - 1];
            let mut order = Vec::with_capacity(2 * class.len());
            for &e in class {
                for j in 1..=2 {
                    let pos = omega
                        .edges
                        .iter()
                        .position(|x| x.touches(wi) && x.annotation == Some(e) && x.color == pair_color(i as u32, j))
                        .ok_or_else(|| Error::Inconsistent(format!("edge {e} missing at its class vertex")))?;
                    order.push(pos);
                }
            }
            let (next, maps) = insert_matchgate(&omega, wi, &gamma, &order)?;
            let mut new_target = vec![usize::MAX; next.n()];
            for (old, new) in maps.host.iter().enumerate() {
                if let Some(new) = new {
                    new_target[*new] = target[old];
                }
            }
            let m = class.len();
            for (j, &e) in class.iter().enumerate() {
                new_target[maps.gadget[j]] = n + 3 * e;
                new_target[maps.gadget[m + j]] = n + 3 * e + 2;
                if theta[i - 1] == 2 {
                    new_target[maps.gadget[2 * m + j]] = n + 3 * e + 1;
                }
            }
            for x in w.iter_mut() {
                *x = maps.host.get(*x).copied().flatten().unwrap_or(usize::MAX);
            }
            target = new_target;
            omega = next;
        }
        let graph = strip_signatures(&omega)?;
        out.push(SubdivisionQuery {
            theta,
            coefficient,
            graph,
            embedding: target,
        });
    }
    Ok(out)
}

/// Colorful matchings of `g` computed through colorful matching counts of
/// subgraphs of its 3-subdivision.
pub fn colmatch_via_subdivision(g: &Graph) -> Result<Count> {
    colored_input(g)?;
    let queries = subdivision_queries(g)?;
    if queries.is_empty() {
        return Ok(Count::zero());
    }
    let sub = subdivide(g, 3);
    for q in &queries {
        if !q.embeds_into(&sub) {
            return Err(Error::Inconsistent("query graph is not a subgraph of the 3-subdivision".into()));
        }
    }
    let parts = par::try_map(queries, |q| {
        let c = count_matchings(&q.graph, q.graph.num_colors() as usize, true)?;
        Ok::<_, Error>(q.coefficient * rat_from_count(&c))
    })?;
    let total: Rational = parts.into_iter().sum();
    to_count(&total).ok_or_else(|| Error::Inconsistent(format!("combination gave {total}")))
}

/// Colorful matchings of `g` by inclusion-exclusion over color subsets of
/// uncolored matching counts.
pub fn colmatch_via_uncolored(g: &Graph) -> Result<Count> {
    let colors = colored_input(g)?.to_vec();
    let k = g.num_colors() as usize;
    if k >= 24 {
        return Err(Error::cap("colors in inclusion-exclusion", 23, k));
    }
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << k) {
        let keep: Vec<usize> = (0..g.m()).filter(|&e| mask >> (colors[e] - 1) & 1 == 1).collect();
        let sub = g.uncolored().edge_subgraph(&keep);
        let c = BigInt::from(count_matchings(&sub, k, false)?);
        if (k - mask.count_ones() as usize) % 2 == 0 {
            total += c;
        } else {
            total -= c;
        }
    }
    if total.is_negative() {
        return Err(Error::Inconsistent("negative inclusion-exclusion total".into()));
    }
    Ok(total.to_biguint().unwrap())
}

/// Wraps a matchgate as a vertex signature.
pub fn matchgate_signature(gamma: SignatureGraph) -> Signature {
    Signature::Matchgate(Arc::new(gamma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::Caps;
    use crate::holant::{col_holant, col_sig, expand_combined};

    fn caps() -> Caps {
        Caps::default()
    }

    fn rainbow_c4() -> Graph {
        Graph::colored(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)], None).unwrap()
    }

    #[test]
    fn match_holant_counts_colorful_matchings() {
        let g = rainbow_c4();
        let s = build_match_holant(&g).unwrap();
        let direct = count_matchings(&g, 2, true).unwrap();
        assert_eq!(col_holant(&s, &caps()).unwrap(), rat_from_count(&direct));
        assert_eq!(strip_signatures(&s).unwrap(), g);
    }

    #[test]
    fn gamma_two_values() {
        for m in 1..=5usize {
            let ann: Vec<usize> = (0..m).collect();
            let gamma = build_gamma(2, 1, &ann).unwrap();
            let one = build_gamma(1, 1, &ann).unwrap();
            for j1 in 1..=m {
                for j2 in 1..=m {
                    let x = [2 * j1 - 1, 2 * j2];
                    let expected = if j1 == j2 { m * m + 2 - 3 * m } else { m * m + 3 - 3 * m };
                    assert_eq!(col_sig(&gamma, &x, &caps()).unwrap(), rat(expected as i64), "m={m} {j1} {j2}");
                    assert_eq!(col_sig(&one, &x, &caps()).unwrap(), rat(1));
                }
            }
        }
    }

    #[test]
    fn combined_signature_at_class_vertex() {
        let g = Graph::colored(5, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 4, 1), (0, 4, 2)], None).unwrap();
        let bip = build_omega_bip(&g).unwrap();
        let direct = rat_from_count(&count_matchings(&g, 2, true).unwrap());
        assert_eq!(col_holant(&bip.omega, &caps()).unwrap(), direct);
        let mut decomposition = Vec::new();
        for (idx, class) in bip.class_edges.iter().enumerate() {
            let coefs = gamma_coefficients(class.len());
            let terms = (1..=2u8)
                .map(|variant| {
                    let gamma = build_gamma(variant, idx as u32 + 1, class).unwrap();
                    (coefs[variant as usize - 1].clone(), matchgate_signature(gamma))
                })
                .collect();
            decomposition.push((bip.w[idx], terms));
        }
        let expanded = expand_combined(&bip.omega, &decomposition, &caps()).unwrap();
        assert_eq!(expanded.len(), 4);
        let total: Rational = expanded
            .iter()
            .map(|(c, h)| c * col_holant(h, &caps()).unwrap())
            .sum();
        assert_eq!(total, direct);
    }

    #[test]
    fn inserted_matchgate_equals_signature() {
        let g = rainbow_c4();
        let bip = build_omega_bip(&g).unwrap();
        let class = &bip.class_edges[0];
        let gamma = build_gamma(2, 1, class).unwrap();
        let mut lazy = bip.omega.clone();
        lazy.set_sig(bip.w[0], matchgate_signature(gamma.clone()));
        let order = bip.omega.incident(bip.w[0]);
        let (inserted, _) = insert_matchgate(&bip.omega, bip.w[0], &gamma, &order).unwrap();
        assert_eq!(col_holant(&inserted, &caps()).unwrap(), col_holant(&lazy, &caps()).unwrap());
    }

    #[test]
    fn subdivision_pipeline_agrees() {
        let graphs = [
            rainbow_c4(),
            Graph::colored(5, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 4, 1), (0, 4, 2)], None).unwrap(),
            Graph::colored(6, &[(0, 1, 1), (2, 3, 2), (4, 5, 3), (1, 2, 3), (3, 4, 1)], None).unwrap(),
            Graph::colored(3, &[(0, 1, 1)], Some(2)).unwrap(),
        ];
        for g in &graphs {
            let k = g.num_colors() as usize;
            let direct = count_matchings(g, k, true).unwrap();
            assert_eq!(colmatch_via_subdivision(g).unwrap(), direct);
            assert_eq!(colmatch_via_uncolored(g).unwrap(), direct);
        }
    }

    #[test]
    fn queries_fit_in_subdivision() {
        let g = Graph::colored(5, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 4, 1), (0, 4, 2)], None).unwrap();
        let sub = subdivide(&g, 3);
        let queries = subdivision_queries(&g).unwrap();
        assert_eq!(queries.len(), 4);
        for q in &queries {
            assert!(q.embeds_into(&sub));
            assert!(q.graph.n() <= 4 * (g.n() + g.m()));
            assert!(q.graph.m() <= 4 * (g.n() + g.m()));
            assert!(q.graph.num_colors() as usize <= 4 * 2);
        }
        let full = queries.iter().find(|q| q.theta == vec![2, 2]).unwrap();
        assert_eq!(full.graph.m(), sub.m());
    }
}
