use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::{Color, SgEdge, Signature, SignatureGraph};
use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::oracles::Caps;
use crate::par;

/// Value of the signature at `v` when exactly the incident edges with
/// `on(edge id)` are set.
pub fn eval_signature(sg: &SignatureGraph, v: usize, on: &dyn Fn(usize) -> bool, caps: &Caps) -> Result<Rational> {
    let inc = sg.incident(v);
    let set: Vec<usize> = (0..inc.len()).filter(|&p| on(inc[p])).collect();
    let bool_val = |b: bool| if b { Rational::one() } else { Rational::zero() };
    match sg.sig(v) {
        Signature::HwLeq1 => Ok(bool_val(set.len() <= 1)),
        Signature::AnnotationEq => {
            if set.len() != 2 {
                return Ok(Rational::zero());
            }
            let (a, b) = (sg.edges[inc[set[0]]].annotation, sg.edges[inc[set[1]]].annotation);
            Ok(bool_val(a.is_some() && a == b))
        }
        Signature::Table(values) => {
            if inc.len() >= 32 || values.len() != 1usize << inc.len() {
                return Err(Error::Precondition(format!(
                    "signature table at vertex {v} has {} entries for degree {}",
                    values.len(),
                    inc.len()
                )));
            }
            let idx = set.iter().fold(0usize, |m, &p| m | (1 << p));
            Ok(values[idx].clone())
        }
        Signature::Matchgate(gamma) => {
            let d = gamma.dangling().len();
            if d != inc.len() {
                return Err(Error::ArityMismatch {
                    vertex_degree: inc.len(),
                    dangling: d,
                });
            }
            let labels: Vec<usize> = set.iter().map(|p| p + 1).collect();
            col_sig(gamma, &labels, caps)
        }
    }
}

/// Σ over choices of one edge per class (edges in `fixed` always set) of the
/// product of all signatures.
fn sum_assignments(sg: &SignatureGraph, classes: &[Vec<usize>], fixed: &[usize], caps: &Caps, parallel: bool) -> Result<Rational> {
    if classes.iter().any(|c| c.is_empty()) {
        return Ok(Rational::zero());
    }
    let total = classes
        .iter()
        .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128))
        .unwrap_or(u128::MAX);
    if total > caps.holant_assignments {
        return Err(Error::cap(
            "colorful assignments",
            caps.holant_assignments.min(usize::MAX as u128) as usize,
            total.min(usize::MAX as u128) as usize,
        ));
    }
    let mut state = State {
        sg,
        classes,
        caps,
        on: vec![false; sg.edges.len()],
        count: vec![0; sg.n()],
    };
    for &e in fixed {
        if !state.push(e) {
            state.on[e] = true;
            // the fixed part already violates a signature bound
            return Ok(Rational::zero());
        }
    }
    if parallel && !classes.is_empty() {
        let firsts = classes[0].clone();
        let parts = par::try_map(firsts, |e| {
            let mut s = state.clone();
            if !s.push(e) {
                return Ok(Rational::zero());
            }
            s.rec(1)
        })?;
        return Ok(parts.into_iter().sum());
    }
    state.rec(0)
}

#[derive(Clone)]
struct State<'a> {
    sg: &'a SignatureGraph,
    classes: &'a [Vec<usize>],
    caps: &'a Caps,
    on: Vec<bool>,
    count: Vec<usize>,
}

impl State<'_> {
    fn bound(&self, v: usize) -> usize {
        match self.sg.sig(v) {
            Signature::HwLeq1 => 1,
            Signature::AnnotationEq => 2,
            _ => usize::MAX,
        }
    }

    /// Sets edge `e`; false (with nothing changed) if this breaks a bound.
    fn push(&mut self, e: usize) -> bool {
        let SgEdge { u, v, .. } = self.sg.edges[e];
        let ends = [Some(u), v];
        for w in ends.iter().flatten() {
            if self.count[*w] + 1 > self.bound(*w) {
                return false;
            }
        }
        for w in ends.iter().flatten() {
            self.count[*w] += 1;
        }
        self.on[e] = true;
        true
    }

    fn pop(&mut self, e: usize) {
        let SgEdge { u, v, .. } = self.sg.edges[e];
        for w in [Some(u), v].iter().flatten() {
            self.count[*w] -= 1;
        }
        self.on[e] = false;
    }

    fn rec(&mut self, i: usize) -> Result<Rational> {
        if i == self.classes.len() {
            let mut prod = Rational::one();
            for v in 0..self.sg.n() {
                let on = &self.on;
                prod *= eval_signature(self.sg, v, &|e| on[e], self.caps)?;
                if prod.is_zero() {
                    break;
                }
            }
            return Ok(prod);
        }
        let mut total = Rational::zero();
        for &e in &self.classes[i] {
            if self.push(e) {
                total += self.rec(i + 1)?;
                self.pop(e);
            }
        }
        Ok(total)
    }
}

fn classes_for(sg: &SignatureGraph, colors: &BTreeSet<Color>) -> Vec<Vec<usize>> {
    colors
        .iter()
        .map(|&c| {
            (0..sg.edges.len())
                .filter(|&i| !sg.edges[i].is_dangling() && sg.edges[i].color == c)
                .collect()
        })
        .collect()
}

/// Colorful Holant of a signature graph without dangling edges.
pub fn col_holant(omega: &SignatureGraph, caps: &Caps) -> Result<Rational> {
    if omega.edges.iter().any(|e| e.is_dangling()) {
        return Err(Error::Precondition("colorful Holant needs a graph without dangling edges".into()));
    }
    let classes = classes_for(omega, &omega.internal_colors());
    sum_assignments(omega, &classes, &[], caps, true)
}

/// Colorful signature of a matchgate at the boundary assignment that sets
/// exactly the dangling edges whose labels are listed in `on_labels`.
/// Colorfulness is required of the internal colors only.
pub fn col_sig(gamma: &SignatureGraph, on_labels: &[usize], caps: &Caps) -> Result<Rational> {
    let internal = gamma.internal_colors();
    let dangling = gamma.dangling_colors();
    if let Some(c) = internal.intersection(&dangling).next() {
        return Err(Error::Precondition(format!(
            "malformed matchgate: color {c} is both internal and on a dangling edge"
        )));
    }
    let mut fixed = Vec::new();
    for &l in on_labels {
        let e = (0..gamma.edges.len())
            .find(|&i| gamma.edges[i].label == Some(l))
            .ok_or_else(|| Error::Precondition(format!("matchgate has no dangling edge labelled {l}")))?;
        fixed.push(e);
    }
    let classes = classes_for(gamma, &internal);
    sum_assignments(gamma, &classes, &fixed, caps, false)
}

/// Vertex maps produced by [`insert_matchgate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertMaps {
    /// Old host vertex id to new id; `None` for the replaced vertex.
    pub host: Vec<Option<usize>>,
    /// Matchgate vertex id to new id.
    pub gadget: Vec<usize>,
}

/// Replaces vertex `v` of `omega` by the matchgate `gamma`, identifying the
/// `i`-th edge of `edge_order` (a permutation of the edges at `v`) with the
/// dangling edge labelled `i + 1`. Internal colors of `gamma` are renamed to
/// colors unused in `omega`.
pub fn insert_matchgate(
    omega: &SignatureGraph,
    v: usize,
    gamma: &SignatureGraph,
    edge_order: &[usize],
) -> Result<(SignatureGraph, InsertMaps)> {
    if v >= omega.n() {
        return Err(Error::Precondition(format!("no vertex {v}")));
    }
    let inc = omega.incident(v);
    let dangling = gamma.dangling();
    if inc.len() != dangling.len() {
        return Err(Error::ArityMismatch {
            vertex_degree: inc.len(),
            dangling: dangling.len(),
        });
    }
    let mut sorted_order = edge_order.to_vec();
    sorted_order.sort_unstable();
    if sorted_order != inc {
        return Err(Error::Precondition(format!(
            "edge order must list exactly the edges at vertex {v}"
        )));
    }
    for (pos, (&he, &ge)) in edge_order.iter().zip(&dangling).enumerate() {
        let label = gamma.edges[ge].label.unwrap();
        if label != pos + 1 {
            return Err(Error::Precondition(format!("matchgate dangling labels must be 1..={}", dangling.len())));
        }
        let (hc, gc) = (omega.edges[he].color, gamma.edges[ge].color);
        if hc != gc {
            return Err(Error::ColorMismatch {
                label,
                host: hc,
                gadget: gc,
            });
        }
    }
    let mut next_color = omega
        .all_colors()
        .into_iter()
        .chain(gamma.all_colors())
        .max()
        .unwrap_or(0)
        + 1;
    let mut rename: BTreeMap<Color, Color> = BTreeMap::new();
    for c in gamma.internal_colors() {
        rename.insert(c, next_color);
        next_color += 1;
    }

    let mut out = SignatureGraph::new();
    let mut host = vec![None; omega.n()];
    for w in 0..omega.n() {
        if w != v {
            host[w] = Some(out.add_vertex(omega.sigs[w].clone()));
        }
    }
    let gadget: Vec<usize> = (0..gamma.n()).map(|w| out.add_vertex(gamma.sigs[w].clone())).collect();
    for (i, e) in omega.edges.iter().enumerate() {
        if inc.contains(&i) {
            continue;
        }
        out.edges.push(SgEdge {
            u: host[e.u].unwrap(),
            v: e.v.map(|x| host[x].unwrap()),
            ..e.clone()
        });
    }
    for (&he, &ge) in edge_order.iter().zip(&dangling) {
        let h = &omega.edges[he];
        let inner = gadget[gamma.edges[ge].u];
        match h.other(v) {
            Some(x) => out.edges.push(SgEdge {
                u: host[x].unwrap(),
                v: Some(inner),
                color: h.color,
                annotation: h.annotation,
                label: None,
            }),
            None => out.edges.push(SgEdge {
                u: inner,
                v: None,
                color: h.color,
                annotation: h.annotation,
                label: h.label,
            }),
        }
    }
    for e in gamma.edges.iter().filter(|e| !e.is_dangling()) {
        out.edges.push(SgEdge {
            u: gadget[e.u],
            v: e.v.map(|x| gadget[x]),
            color: rename[&e.color],
            annotation: e.annotation,
            label: None,
        });
    }
    out.declared = omega.declared.clone();
    out.declared.extend(gamma.declared().iter().map(|c| rename[c]));
    Ok((out, InsertMaps { host, gadget }))
}

/// Restrictions to `I(w)` of colorful assignments, as lists of positions in
/// the incident-edge order. A color all of whose edges meet `w` contributes
/// exactly one position; any other color at `w` contributes at most one.
pub fn colorful_restrictions(omega: &SignatureGraph, w: usize) -> Vec<Vec<usize>> {
    let inc = omega.incident(w);
    let mut by_color: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
    for (p, &e) in inc.iter().enumerate() {
        by_color.entry(omega.edges[e].color).or_default().push(p);
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for (c, positions) in by_color {
        let total = omega.edges.iter().filter(|e| e.color == c).count();
        let mut options: Vec<Option<usize>> = positions.iter().map(|&p| Some(p)).collect();
        if total > positions.len() {
            options.push(None);
        }
        out = out
            .into_iter()
            .flat_map(|base| {
                options.iter().map(move |o| {
                    let mut b = base.clone();
                    b.extend(o.iter().copied());
                    b
                })
            })
            .collect();
    }
    for set in &mut out {
        set.sort_unstable();
    }
    out
}

/// Expands a combined signature `f_w = Σ_i c_i g_i` at each listed vertex.
///
/// Each decomposition is first checked point-wise on the colorful
/// restrictions at its vertex. Returns one `(Π c, Ω_θ)` per choice `θ`,
/// in lexicographic order of `θ`.
pub fn expand_combined(
    omega: &SignatureGraph,
    decomposition: &[(usize, Vec<(Rational, Signature)>)],
    caps: &Caps,
) -> Result<Vec<(Rational, SignatureGraph)>> {
    let mut seen = BTreeSet::new();
    for (w, terms) in decomposition {
        if *w >= omega.n() || !seen.insert(*w) {
            return Err(Error::Precondition(format!("decomposition vertex {w} missing or repeated")));
        }
        let inc = omega.incident(*w);
        for set in colorful_restrictions(omega, *w) {
            let on = |e: usize| inc.iter().position(|&x| x == e).is_some_and(|p| set.contains(&p));
            let f = eval_signature(omega, *w, &on, caps)?;
            let mut combo = Rational::zero();
            for (c, g) in terms {
                let mut probe = omega.clone();
                probe.set_sig(*w, g.clone());
                combo += c * eval_signature(&probe, *w, &on, caps)?;
            }
            if f != combo {
                return Err(Error::Inconsistent(format!(
                    "decomposition at vertex {w} fails on restriction {set:?}: {f} != {combo}"
                )));
            }
        }
    }
    let mut out = vec![(Rational::one(), omega.clone())];
    for (w, terms) in decomposition {
        let mut next = Vec::with_capacity(out.len() * terms.len());
        for (coef, g) in &out {
            for (c, sig) in terms {
                let mut h = g.clone();
                h.set_sig(*w, sig.clone());
                next.push((coef * c, h));
            }
        }
        out = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn caps() -> Caps {
        Caps::default()
    }

    fn hw_graph(n: usize, edges: &[(usize, usize, Color)]) -> SignatureGraph {
        let mut s = SignatureGraph::new();
        for _ in 0..n {
            s.add_vertex(Signature::HwLeq1);
        }
        for &(u, v, c) in edges {
            s.add_edge(u, v, c, None).unwrap();
        }
        s
    }

    #[test]
    fn small_holants() {
        assert_eq!(col_holant(&hw_graph(2, &[(0, 1, 1)]), &caps()).unwrap(), rat(1));
        assert_eq!(
            col_holant(&hw_graph(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]), &caps()).unwrap(),
            rat(0)
        );
        assert_eq!(col_holant(&SignatureGraph::new(), &caps()).unwrap(), rat(1));
        let mut empty_class = hw_graph(2, &[(0, 1, 1)]);
        empty_class.declare_color(2);
        assert_eq!(col_holant(&empty_class, &caps()).unwrap(), rat(0));
    }

    #[test]
    fn parallel_edges_allowed() {
        let s = hw_graph(2, &[(0, 1, 1), (0, 1, 1)]);
        assert_eq!(col_holant(&s, &caps()).unwrap(), rat(2));
    }

    #[test]
    fn table_signature_matches_symbolic() {
        // K_{1,3} centre with HW<=1 as a table
        let mut s = hw_graph(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 2)]);
        let table: Vec<Rational> = (0..8u32).map(|m| rat((m.count_ones() <= 1) as i64)).collect();
        let symbolic = col_holant(&s, &caps()).unwrap();
        s.set_sig(0, Signature::Table(table));
        assert_eq!(col_holant(&s, &caps()).unwrap(), symbolic);
        s.set_sig(0, Signature::Table(vec![rat(1); 4]));
        assert!(col_holant(&s, &caps()).is_err());
    }

    #[test]
    fn insertion_errors() {
        let omega = hw_graph(3, &[(0, 1, 1), (1, 2, 2)]);
        let mut gamma = SignatureGraph::new();
        let a = gamma.add_vertex(Signature::HwLeq1);
        gamma.add_dangling(a, 1, 1, None).unwrap();
        let inc = omega.incident(1);
        assert!(matches!(
            insert_matchgate(&omega, 1, &gamma, &inc),
            Err(Error::ArityMismatch { .. })
        ));
        let b = gamma.add_vertex(Signature::HwLeq1);
        gamma.add_dangling(b, 3, 2, None).unwrap();
        assert!(matches!(
            insert_matchgate(&omega, 1, &gamma, &inc),
            Err(Error::ColorMismatch { label: 2, host: 2, gadget: 3 })
        ));
    }

    #[test]
    fn inserting_hw_gadget_preserves_holant() {
        // vertex 1 of a colored P_3 replaced by a single HW<=1 vertex gadget
        let omega = hw_graph(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
        let mut gamma = SignatureGraph::new();
        let a = gamma.add_vertex(Signature::HwLeq1);
        gamma.add_dangling(a, 1, 1, None).unwrap();
        gamma.add_dangling(a, 2, 2, None).unwrap();
        let inc = omega.incident(1);
        let (out, maps) = insert_matchgate(&omega, 1, &gamma, &inc).unwrap();
        assert_eq!(maps.host, vec![Some(0), None, Some(1), Some(2)]);
        assert_eq!(maps.gadget, vec![3]);
        assert_eq!(col_holant(&out, &caps()).unwrap(), col_holant(&omega, &caps()).unwrap());
    }

    #[test]
    fn trivial_expansions() {
        let omega = hw_graph(3, &[(0, 1, 1), (1, 2, 2)]);
        let none = expand_combined(&omega, &[], &caps()).unwrap();
        assert_eq!(none.len(), 1);
        assert_eq!(none[0].0, rat(1));
        let zero_table = Signature::Table(vec![rat(0); 4]);
        let terms = vec![(rat(1), Signature::HwLeq1), (rat(0), zero_table)];
        let out = expand_combined(&omega, &[(1, terms)], &caps()).unwrap();
        assert_eq!(out.len(), 2);
        let total: Rational = out
            .iter()
            .map(|(c, g)| c * col_holant(g, &caps()).unwrap())
            .sum();
        assert_eq!(total, col_holant(&omega, &caps()).unwrap());
        let wrong = vec![(rat(2), Signature::HwLeq1)];
        assert!(expand_combined(&omega, &[(0, wrong)], &caps()).is_err());
    }
}
