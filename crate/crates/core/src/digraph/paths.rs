//! Explicit path enumeration. Exponential; used where the summand depends
//! on a whole path and as an oracle for the dynamic programs.

use crate::ncpoly::{Ab, AbPoly, AbWord};

use super::graph::{EdgeId, LabeledDigraph, VertexId};

/// A nonempty directed path, as a sequence of edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    edges: Vec<EdgeId>,
}

impl Path {
    /// # Panics
    /// If `edges` is empty.
    pub fn new(edges: Vec<EdgeId>) -> Self {
        assert!(!edges.is_empty(), "a path has at least one edge");
        Path { edges }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_valid(&self, g: &LabeledDigraph) -> bool {
        self.edges
            .windows(2)
            .all(|w| g.edge(w[0]).head == g.edge(w[1]).tail)
    }

    /// Interior vertices `head(e₁), …, head(e_{k−1})`.
    pub fn interior(&self, g: &LabeledDigraph) -> Vec<VertexId> {
        self.edges[..self.edges.len() - 1]
            .iter()
            .map(|&e| g.edge(e).head)
            .collect()
    }

    /// Interior vertices at which the path ascends.
    pub fn ascents(&self, g: &LabeledDigraph) -> Vec<VertexId> {
        self.split_interior(g, true)
    }

    /// Interior vertices at which the path descends.
    pub fn descents(&self, g: &LabeledDigraph) -> Vec<VertexId> {
        self.split_interior(g, false)
    }

    fn split_interior(&self, g: &LabeledDigraph, rising: bool) -> Vec<VertexId> {
        self.edges
            .windows(2)
            .filter(|w| g.ascent(w[0], w[1]) == rising)
            .map(|w| g.edge(w[0]).head)
            .collect()
    }

    pub fn descent_word(&self, g: &LabeledDigraph) -> AbWord {
        descent_word(g, &self.edges)
    }

    pub fn is_rising(&self, g: &LabeledDigraph) -> bool {
        is_rising(g, &self.edges)
    }

    pub fn is_falling(&self, g: &LabeledDigraph) -> bool {
        is_falling(g, &self.edges)
    }
}

/// `u(p)`: `a` at each ascent, `b` at each descent.
pub fn descent_word(g: &LabeledDigraph, edges: &[EdgeId]) -> AbWord {
    AbWord::new(
        edges
            .windows(2)
            .map(|w| if g.ascent(w[0], w[1]) { Ab::A } else { Ab::B })
            .collect(),
    )
}

pub fn is_rising(g: &LabeledDigraph, edges: &[EdgeId]) -> bool {
    edges.windows(2).all(|w| g.ascent(w[0], w[1]))
}

pub fn is_falling(g: &LabeledDigraph, edges: &[EdgeId]) -> bool {
    edges.windows(2).all(|w| !g.ascent(w[0], w[1]))
}

/// Calls `f` on every path from `x` to `y`, in depth-first order.
pub fn for_each_path(g: &LabeledDigraph, x: VertexId, y: VertexId, mut f: impl FnMut(&[EdgeId])) {
    if x == y || !g.leq(x, y) {
        return;
    }
    let mut stack: Vec<EdgeId> = Vec::new();
    fn go(
        g: &LabeledDigraph,
        v: VertexId,
        y: VertexId,
        stack: &mut Vec<EdgeId>,
        f: &mut dyn FnMut(&[EdgeId]),
    ) {
        for &e in g.out_edges(v) {
            let h = g.edge(e).head;
            if !g.leq(h, y) {
                continue;
            }
            stack.push(e);
            if h == y {
                f(stack);
            } else {
                go(g, h, y, stack, f);
            }
            stack.pop();
        }
    }
    go(g, x, y, &mut stack, &mut f);
}

pub fn paths(g: &LabeledDigraph, x: VertexId, y: VertexId) -> Vec<Path> {
    let mut out = Vec::new();
    for_each_path(g, x, y, |p| out.push(Path::new(p.to_vec())));
    out
}

/// The ab-index by summing descent words path by path.
pub fn ab_index_brute_force(g: &LabeledDigraph, x: VertexId, y: VertexId) -> AbPoly {
    let mut out = AbPoly::zero();
    for_each_path(g, x, y, |p| out.add_term(descent_word(g, p), 1.into()));
    out
}
