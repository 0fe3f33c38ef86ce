//! Edge-colored Holant framework: signature graphs, colorful Holant values,
//! matchgates and their colorful signatures, matchgate insertion and
//! combined-signature expansion.
//!
//! A colorful assignment sets exactly one edge of every color to 1. The
//! colorful Holant of a signature graph sums, over colorful assignments, the
//! product of all vertex signatures evaluated on their incident edges.

mod eval;
mod format;
mod gadgets;

use std::collections::BTreeSet;
use std::sync::Arc;

pub use eval::{col_holant, col_sig, colorful_restrictions, eval_signature, expand_combined, insert_matchgate, InsertMaps};
pub use format::{parse_signature_graph, serialize_signature_graph};
pub use gadgets::{
    build_gamma, build_match_holant, build_omega_bip, colmatch_via_subdivision, colmatch_via_uncolored,
    gamma_coefficients, matchgate_signature, strip_signatures, subdivision_queries, OmegaBip, SubdivisionQuery,
};

use crate::error::{Error, Result};
use crate::numeric::Rational;

pub type Color = u32;

/// Encodes the color pair `(i, j)` (`i >= 1`, `j` in `1..=4`) as a single id.
pub fn pair_color(i: u32, j: u32) -> Color {
    debug_assert!(i >= 1 && (1..=4).contains(&j));
    4 * (i - 1) + j
}

/// Inverse of [`pair_color`].
pub fn unpair_color(c: Color) -> (u32, u32) {
    ((c - 1) / 4 + 1, (c - 1) % 4 + 1)
}

#[derive(Clone, Debug)]
pub enum Signature {
    /// 1 if at most one incident edge is set, else 0.
    HwLeq1,
    /// 1 if exactly two incident edges are set and their annotations agree,
    /// else 0.
    AnnotationEq,
    /// Explicit values indexed by the bitmask of set edges, bit `p` standing
    /// for the `p`-th incident edge in edge order.
    Table(Vec<Rational>),
    /// The colorful signature of a matchgate; the `p`-th incident edge is
    /// identified with dangling label `p + 1`.
    Matchgate(Arc<SignatureGraph>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SgEdge {
    pub u: usize,
    /// `None` for a dangling edge.
    pub v: Option<usize>,
    pub color: Color,
    pub annotation: Option<usize>,
    /// Dangling label, `1..=|D|`.
    pub label: Option<usize>,
}

impl SgEdge {
    pub fn is_dangling(&self) -> bool {
        self.v.is_none()
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == Some(w)
    }

    pub fn other(&self, w: usize) -> Option<usize> {
        if self.u == w {
            self.v
        } else {
            Some(self.u)
        }
    }
}

/// Edge-colored multigraph with a signature at every vertex and optional
/// dangling edges. A matchgate is a signature graph with dangling edges and
/// `HwLeq1` everywhere.
#[derive(Clone, Debug, Default)]
pub struct SignatureGraph {
    sigs: Vec<Signature>,
    edges: Vec<SgEdge>,
    declared: BTreeSet<Color>,
}

impl SignatureGraph {
    pub fn new() -> SignatureGraph {
        SignatureGraph::default()
    }

    pub fn add_vertex(&mut self, sig: Signature) -> usize {
        self.sigs.push(sig);
        self.sigs.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, color: Color, annotation: Option<usize>) -> Result<usize> {
        if u >= self.n() || v >= self.n() || u == v {
            return Err(Error::InvalidGraph(format!("bad signature-graph edge {u}-{v}")));
        }
        if color == 0 {
            return Err(Error::InvalidGraph("colors are 1-based".into()));
        }
        self.edges.push(SgEdge {
            u,
            v: Some(v),
            color,
            annotation,
            label: None,
        });
        Ok(self.edges.len() - 1)
    }

    pub fn add_dangling(&mut self, u: usize, color: Color, label: usize, annotation: Option<usize>) -> Result<usize> {
        if u >= self.n() {
            return Err(Error::InvalidGraph(format!("dangling edge at missing vertex {u}")));
        }
        if self.edges.iter().any(|e| e.label == Some(label)) {
            return Err(Error::InvalidGraph(format!("duplicate dangling label {label}")));
        }
        self.edges.push(SgEdge {
            u,
            v: None,
            color,
            annotation,
            label: Some(label),
        });
        Ok(self.edges.len() - 1)
    }

    /// Declares a color so that it takes part in colorfulness even when no
    /// edge carries it (the Holant is then 0).
    pub fn declare_color(&mut self, c: Color) {
        self.declared.insert(c);
    }

    pub fn n(&self) -> usize {
        self.sigs.len()
    }

    pub fn edges(&self) -> &[SgEdge] {
        &self.edges
    }

    pub fn sig(&self, v: usize) -> &Signature {
        &self.sigs[v]
    }

    pub fn set_sig(&mut self, v: usize, sig: Signature) {
        self.sigs[v] = sig;
    }

    /// Incident edge ids of `v` in increasing order.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].touches(v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// Dangling edge ids sorted by label.
    pub fn dangling(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.edges.len()).filter(|&i| self.edges[i].is_dangling()).collect();
        d.sort_by_key(|&i| self.edges[i].label);
        d
    }

    /// Colors of non-dangling edges together with declared colors.
    pub fn internal_colors(&self) -> BTreeSet<Color> {
        let mut set = self.declared.clone();
        set.extend(self.edges.iter().filter(|e| !e.is_dangling()).map(|e| e.color));
        set
    }

    pub fn dangling_colors(&self) -> BTreeSet<Color> {
        self.edges.iter().filter(|e| e.is_dangling()).map(|e| e.color).collect()
    }

    pub fn all_colors(&self) -> BTreeSet<Color> {
        let mut set = self.internal_colors();
        set.extend(self.dangling_colors());
        set
    }

    pub(crate) fn declared(&self) -> &BTreeSet<Color> {
        &self.declared
    }

    /// True if every signature is `HwLeq1`.
    pub fn all_hw_leq1(&self) -> bool {
        self.sigs.iter().all(|s| matches!(s, Signature::HwLeq1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_encoding_round_trips() {
        for i in 1..6 {
            for j in 1..=4 {
                assert_eq!(unpair_color(pair_color(i, j)), (i, j));
            }
        }
    }

    #[test]
    fn rejects_bad_edges() {
        let mut s = SignatureGraph::new();
        let a = s.add_vertex(Signature::HwLeq1);
        assert!(s.add_edge(a, a, 1, None).is_err());
        assert!(s.add_edge(a, 3, 1, None).is_err());
        s.add_dangling(a, 1, 1, None).unwrap();
        assert!(s.add_dangling(a, 1, 1, None).is_err());
    }
}
