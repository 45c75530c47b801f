use std::collections::BTreeMap;

use super::graph::{Edge, LabelId, LabelRelation, LabeledDigraph};
use super::index::IndexError;

/// Which factor a product label came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Origin {
    Left(LabelId),
    Right(LabelId),
    Both(LabelId, LabelId),
}

struct Labels {
    ids: BTreeMap<Origin, LabelId>,
    names: Vec<String>,
    origins: Vec<Origin>,
}

impl Labels {
    fn new() -> Self {
        Labels {
            ids: BTreeMap::new(),
            names: Vec::new(),
            origins: Vec::new(),
        }
    }

    fn id(&mut self, o: Origin, g: &LabeledDigraph, h: &LabeledDigraph) -> LabelId {
        if let Some(&id) = self.ids.get(&o) {
            return id;
        }
        let name = match o {
            Origin::Left(l) => format!("g:{}", g.label_name(l)),
            Origin::Right(l) => format!("h:{}", h.label_name(l)),
            Origin::Both(l, m) => format!("(g:{},h:{})", g.label_name(l), h.label_name(m)),
        };
        let id = self.names.len();
        self.ids.insert(o, id);
        self.names.push(name);
        self.origins.push(o);
        id
    }

    fn relation(&self, rel: impl Fn(Origin, Origin) -> bool) -> LabelRelation {
        let mut pairs = Vec::new();
        for (i, &a) in self.origins.iter().enumerate() {
            for (j, &b) in self.origins.iter().enumerate() {
                if rel(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        LabelRelation::pairs(self.names.len(), pairs)
    }
}

/// The product `G * H` that fuses the sink of `G` with the source of `H`
/// through one new edge per pair of (edge into `1̂_G`, edge out of `0̂_H`).
///
/// Vertices and labels are prefixed `g:` and `h:`; the relation is stored
/// as explicit pairs over the labels that occur.
pub fn stanley_product(
    g: &LabeledDigraph,
    h: &LabeledDigraph,
) -> Result<LabeledDigraph, IndexError> {
    let (_, g1) = g.proper_bounds().ok_or(IndexError::Unbounded)?;
    let (h0, _) = h.proper_bounds().ok_or(IndexError::Unbounded)?;

    let mut gmap = vec![usize::MAX; g.vertex_count()];
    let mut hmap = vec![usize::MAX; h.vertex_count()];
    let mut vertices = Vec::new();
    for v in 0..g.vertex_count() {
        if v != g1 {
            gmap[v] = vertices.len();
            vertices.push(format!("g:{}", g.vertex_name(v)));
        }
    }
    for v in 0..h.vertex_count() {
        if v != h0 {
            hmap[v] = vertices.len();
            vertices.push(format!("h:{}", h.vertex_name(v)));
        }
    }

    let mut labels = Labels::new();
    let mut edges = Vec::new();
    for e in g.edges() {
        if e.head != g1 {
            edges.push(Edge {
                tail: gmap[e.tail],
                head: gmap[e.head],
                label: labels.id(Origin::Left(e.label), g, h),
            });
        }
    }
    for &e in g.in_edges(g1) {
        let e = g.edge(e);
        for &f in h.out_edges(h0) {
            let f = h.edge(f);
            edges.push(Edge {
                tail: gmap[e.tail],
                head: hmap[f.head],
                label: labels.id(Origin::Both(e.label, f.label), g, h),
            });
        }
    }
    for f in h.edges() {
        if f.tail != h0 {
            edges.push(Edge {
                tail: hmap[f.tail],
                head: hmap[f.head],
                label: labels.id(Origin::Right(f.label), g, h),
            });
        }
    }

    let relation = labels.relation(|a, b| match (a, b) {
        (Origin::Left(l), Origin::Left(m)) => g.related(l, m),
        (Origin::Left(l), Origin::Both(m, _)) => g.related(l, m),
        (Origin::Both(_, l), Origin::Right(m)) => h.related(l, m),
        (Origin::Right(l), Origin::Right(m)) => h.related(l, m),
        _ => false,
    });
    Ok(LabeledDigraph::new(vertices, edges, labels.names, relation)
        .expect("product of acyclic graphs is acyclic"))
}

/// The Cartesian product `G × H` on vertex pairs `(x,y)`.
///
/// A `G`-label is always related to a following `H`-label and never the
/// other way round.
pub fn cartesian_product(g: &LabeledDigraph, h: &LabeledDigraph) -> LabeledDigraph {
    let nh = h.vertex_count();
    let vid = |x: usize, y: usize| x * nh + y;
    let mut vertices = Vec::with_capacity(g.vertex_count() * nh);
    for x in g.vertices() {
        for y in h.vertices() {
            vertices.push(format!("({x},{y})"));
        }
    }
    let mut labels = Labels::new();
    let mut edges = Vec::new();
    for x in 0..g.vertex_count() {
        for f in h.edges() {
            edges.push(Edge {
                tail: vid(x, f.tail),
                head: vid(x, f.head),
                label: labels.id(Origin::Right(f.label), g, h),
            });
        }
    }
    for e in g.edges() {
        for y in 0..nh {
            edges.push(Edge {
                tail: vid(e.tail, y),
                head: vid(e.head, y),
                label: labels.id(Origin::Left(e.label), g, h),
            });
        }
    }
    let relation = labels.relation(|a, b| match (a, b) {
        (Origin::Left(l), Origin::Left(m)) => g.related(l, m),
        (Origin::Left(_), Origin::Right(_)) => true,
        (Origin::Right(l), Origin::Right(m)) => h.related(l, m),
        _ => false,
    });
    LabeledDigraph::new(vertices, edges, labels.names, relation)
        .expect("product of acyclic graphs is acyclic")
}

/// `G*`: every edge reversed and the relation transposed.
pub fn dual(g: &LabeledDigraph) -> LabeledDigraph {
    LabeledDigraph::new(
        g.vertices().to_vec(),
        g.edges()
            .iter()
            .map(|e| Edge {
                tail: e.head,
                head: e.tail,
                label: e.label,
            })
            .collect(),
        g.labels().to_vec(),
        g.relation().reversed(),
    )
    .expect("reversal preserves acyclicity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::parse_ab;

    fn edge() -> LabeledDigraph {
        LabeledDigraph::from_linear(&["0", "1"], &[("0", "1", "1")], &["1"]).unwrap()
    }

    fn chain12() -> LabeledDigraph {
        LabeledDigraph::from_linear(
            &["0", "x", "1"],
            &[("0", "x", "1"), ("x", "1", "2")],
            &["1", "2"],
        )
        .unwrap()
    }

    #[test]
    fn product_of_edges_is_an_edge() {
        let p = stanley_product(&edge(), &edge()).unwrap();
        assert_eq!(p.vertex_count(), 2);
        assert_eq!(p.edge_count(), 1);
        assert_eq!(p.ab_index_bounded().unwrap(), parse_ab("1").unwrap());
    }

    #[test]
    fn product_multiplies_chains() {
        let p = stanley_product(&chain12(), &dual(&chain12())).unwrap();
        assert_eq!(p.ab_index_bounded().unwrap(), parse_ab("aa").unwrap());
        let one_vertex = LabeledDigraph::from_linear::<&str>(&["v"], &[], &[]).unwrap();
        assert_eq!(
            stanley_product(&edge(), &one_vertex).unwrap_err(),
            IndexError::Unbounded
        );
    }

    #[test]
    fn dual_of_rising_chain() {
        let g = chain12();
        let d = dual(&g);
        assert_eq!(g.ab_index(0, 2).unwrap(), parse_ab("a").unwrap());
        assert_eq!(d.ab_index(2, 0).unwrap(), parse_ab("a").unwrap());
        assert_eq!(dual(&d), g);
    }

    #[test]
    fn cartesian_with_point() {
        let point = LabeledDigraph::from_linear::<&str>(&["p"], &[], &[]).unwrap();
        let g = chain12();
        let p = cartesian_product(&g, &point);
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.ab_index(0, 2).unwrap(), g.ab_index(0, 2).unwrap());
    }
}
