use std::collections::HashMap;
use std::sync::RwLock;

use super::group::{CoxeterGroup, DihedralGroup, SymmetricGroup};
use super::CoxeterError;
use crate::digraph::{Edge, LabelRelation, LabeledDigraph, VertexId};
use crate::ncpoly::{ab_to_cd, CdPoly, IntPoly};

/// The Bruhat graph of a finite Coxeter group: an edge `u → u·t` labeled
/// `t` for every reflection `t` with `ℓ(u) < ℓ(u·t)`, with labels ordered by
/// the group's reflection ordering.
///
/// Vertices are sorted by length, then by name.
#[derive(Debug)]
pub struct BruhatGraph {
    graph: LabeledDigraph,
    lengths: Vec<usize>,
    /// `right_simple[w][k]` is the index of `w·s_k`.
    right_simple: Vec<Vec<usize>>,
    pub(super) r_memo: RwLock<HashMap<(usize, usize), IntPoly>>,
}

impl BruhatGraph {
    pub fn new<G: CoxeterGroup>(group: &G) -> Self {
        let mut elements = group.elements();
        let names: HashMap<G::Element, String> = elements
            .iter()
            .map(|w| (w.clone(), group.element_name(w)))
            .collect();
        elements.sort_by(|u, v| {
            group
                .length(u)
                .cmp(&group.length(v))
                .then_with(|| names[u].cmp(&names[v]))
        });
        let index: HashMap<G::Element, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let lengths: Vec<usize> = elements.iter().map(|w| group.length(w)).collect();
        let reflections = group.reflections();
        let mut edges = Vec::new();
        for (ui, u) in elements.iter().enumerate() {
            for (label, t) in reflections.iter().enumerate() {
                let ut = index[&group.multiply(u, t)];
                if lengths[ut] > lengths[ui] {
                    edges.push(Edge {
                        tail: ui,
                        head: ut,
                        label,
                    });
                }
            }
        }
        let simples = group.simple_reflections();
        let right_simple = elements
            .iter()
            .map(|w| {
                simples
                    .iter()
                    .map(|s| index[&group.multiply(w, s)])
                    .collect()
            })
            .collect();
        let graph = LabeledDigraph::new(
            elements.iter().map(|w| names[w].clone()).collect(),
            edges,
            reflections
                .iter()
                .map(|t| group.reflection_name(t))
                .collect(),
            LabelRelation::linear((0..reflections.len()).collect()),
        )
        .expect("length increases along edges");
        BruhatGraph {
            graph,
            lengths,
            right_simple,
            r_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn graph(&self) -> &LabeledDigraph {
        &self.graph
    }

    pub fn element(&self, name: &str) -> Result<VertexId, CoxeterError> {
        self.graph
            .vertex(name)
            .ok_or_else(|| CoxeterError::UnknownElement(name.to_string()))
    }

    pub fn name(&self, w: VertexId) -> &str {
        self.graph.vertex_name(w)
    }

    pub fn length(&self, w: VertexId) -> usize {
        self.lengths[w]
    }

    pub fn identity(&self) -> VertexId {
        0
    }

    /// The longest element.
    pub fn top(&self) -> VertexId {
        self.lengths.len() - 1
    }

    pub fn rank(&self) -> usize {
        self.right_simple.first().map_or(0, |r| r.len())
    }

    pub(super) fn times_simple(&self, w: VertexId, k: usize) -> VertexId {
        self.right_simple[w][k]
    }

    /// Bruhat order: reachability in the graph.
    pub fn leq(&self, u: VertexId, v: VertexId) -> bool {
        self.graph.leq(u, v)
    }

    /// All pairs `u < v`.
    pub fn strict_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.graph.strict_pairs()
    }

    /// The Bruhat graph restricted to `[u, v]`.
    pub fn interval(&self, u: VertexId, v: VertexId) -> Result<LabeledDigraph, CoxeterError> {
        if !self.leq(u, v) {
            return Err(CoxeterError::NotComparable(
                self.name(u).to_string(),
                self.name(v).to_string(),
            ));
        }
        Ok(self.graph.interval(u, v))
    }

    /// `[u, v]` with only the edges that raise length by one.
    pub fn cover_interval(&self, u: VertexId, v: VertexId) -> Result<LabeledDigraph, CoxeterError> {
        let iv = self.interval(u, v)?;
        let lengths: Vec<usize> = iv
            .vertices()
            .iter()
            .map(|n| self.lengths[self.graph.vertex(n).unwrap()])
            .collect();
        let edges = iv
            .edges()
            .iter()
            .copied()
            .filter(|e| lengths[e.head] == lengths[e.tail] + 1)
            .collect();
        Ok(LabeledDigraph::new(
            iv.vertices().to_vec(),
            edges,
            iv.labels().to_vec(),
            iv.relation().clone(),
        )
        .expect("subgraph of an acyclic graph"))
    }

    fn strict(&self, u: VertexId, v: VertexId) -> Result<(), CoxeterError> {
        if u == v || !self.leq(u, v) {
            return Err(CoxeterError::NotComparable(
                self.name(u).to_string(),
                self.name(v).to_string(),
            ));
        }
        Ok(())
    }

    /// The cd-index of the Bruhat graph interval `[u, v]`, `u < v`.
    ///
    /// Fails with [`CoxeterError::Internal`] if the ab-index is not a
    /// cd-polynomial or has a degree that is too large or of the wrong
    /// parity.
    pub fn complete_cd_index(&self, u: VertexId, v: VertexId) -> Result<CdPoly, CoxeterError> {
        self.strict(u, v)?;
        let iv = self.graph.interval(u, v);
        let psi = iv.ab_index_bounded().map_err(|e| self.internal(u, v, e))?;
        let cd = ab_to_cd(&psi).map_err(|e| self.internal(u, v, e))?;
        let top = self.lengths[v] - self.lengths[u] - 1;
        for d in cd.degrees() {
            if d > top || !(top - d).is_multiple_of(2) {
                return Err(self.internal(u, v, format!("cd-index has degree {d}")));
            }
        }
        Ok(cd)
    }

    /// The cd-index of the cover-edges-only interval `[u, v]`, `u < v`.
    pub fn poset_cd_index(&self, u: VertexId, v: VertexId) -> Result<CdPoly, CoxeterError> {
        self.strict(u, v)?;
        let iv = self.cover_interval(u, v)?;
        iv.cd_index().map_err(|e| self.internal(u, v, e))
    }

    fn internal(&self, u: VertexId, v: VertexId, e: impl ToString) -> CoxeterError {
        CoxeterError::Internal(format!(
            "[{}, {}]: {}",
            self.name(u),
            self.name(v),
            e.to_string()
        ))
    }
}

/// The Bruhat graph of `S_n` with the lexicographic reflection ordering.
pub fn bruhat_graph_sn(n: usize) -> Result<BruhatGraph, CoxeterError> {
    Ok(BruhatGraph::new(&SymmetricGroup::new(n)?))
}

/// The Bruhat graph of `I_2(m)` on `[e, w]` with `ℓ(w) = k`, where `w` is
/// the element whose reduced word starts with `s`.
pub fn dihedral_graph(m: usize, k: usize) -> Result<LabeledDigraph, CoxeterError> {
    let group = DihedralGroup::new(m)?;
    let w = group
        .element_of_length(k)
        .filter(|_| k >= 1)
        .ok_or(CoxeterError::NoSuchLength(k, m))?;
    let full = BruhatGraph::new(&group);
    let top = full.element(&group.element_name(&w))?;
    full.interval(full.identity(), top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::parse_cd;

    #[test]
    fn s3_graph() {
        let b = bruhat_graph_sn(3).unwrap();
        let g = b.graph();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
        let mut edges: Vec<(String, String)> = g
            .edges()
            .iter()
            .map(|e| (b.name(e.tail).to_string(), b.name(e.head).to_string()))
            .collect();
        edges.sort();
        let want = [
            ("123", "132"),
            ("123", "213"),
            ("123", "321"),
            ("132", "231"),
            ("132", "312"),
            ("213", "231"),
            ("213", "312"),
            ("231", "321"),
            ("312", "321"),
        ];
        let want: Vec<(String, String)> = want
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(edges, want);
        let (e, w0) = (b.identity(), b.top());
        assert_eq!(
            b.complete_cd_index(e, w0).unwrap(),
            parse_cd("cc + 1").unwrap()
        );
        assert_eq!(b.poset_cd_index(e, w0).unwrap(), parse_cd("cc").unwrap());
        assert!(b.complete_cd_index(w0, e).is_err());
    }

    #[test]
    fn s2_and_dihedral_edge() {
        let b = bruhat_graph_sn(2).unwrap();
        assert_eq!(b.graph().edge_count(), 1);
        assert_eq!(b.complete_cd_index(0, 1).unwrap(), parse_cd("1").unwrap());
        let d = dihedral_graph(5, 1).unwrap();
        assert_eq!(d.edge_count(), 1);
        assert!(dihedral_graph(3, 4).is_err());
    }
}
