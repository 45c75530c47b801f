//! Seeded random bounded digraphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::digraph::{Edge, LabelRelation, LabeledDigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// A random total order on the labels.
    Linear,
    /// Each ordered pair related independently with probability 1/2.
    Pairs,
}

#[derive(Debug, Clone, Copy)]
pub struct RandomGraphParams {
    /// At least 2.
    pub max_vertices: usize,
    pub max_labels: usize,
    pub relation: RelationKind,
    /// Probability of an edge between consecutive layers.
    pub edge_prob: f64,
    /// Probability of an edge skipping one or more layers.
    pub skip_prob: f64,
    /// Probability of doubling an edge.
    pub parallel_prob: f64,
}

impl Default for RandomGraphParams {
    fn default() -> Self {
        RandomGraphParams {
            max_vertices: 8,
            max_labels: 4,
            relation: RelationKind::Linear,
            edge_prob: 0.5,
            skip_prob: 0.15,
            parallel_prob: 0.1,
        }
    }
}

/// A layered acyclic digraph with a unique source `0` and sink `1`.
///
/// Interior vertices are split into layers; every interior vertex has an
/// edge from the previous layer and to the next, plus random extra and
/// layer-skipping edges.
pub fn random_bounded_digraph<R: Rng>(rng: &mut R, p: &RandomGraphParams) -> LabeledDigraph {
    assert!(p.max_vertices >= 2 && p.max_labels >= 1);
    let n = rng.gen_range(2..=p.max_vertices);
    let interior = n - 2;
    let layer_count = if interior == 0 {
        0
    } else {
        rng.gen_range(1..=interior)
    };
    let mut layers: Vec<Vec<usize>> = vec![vec![0]];
    let mut sizes = vec![1usize; layer_count];
    for _ in layer_count..interior {
        sizes[rng.gen_range(0..layer_count)] += 1;
    }
    let mut next = 1;
    for s in sizes {
        layers.push((next..next + s).collect());
        next += s;
    }
    layers.push(vec![n - 1]);

    let label_count = rng.gen_range(1..=p.max_labels);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 1..layers.len() {
        for &v in &layers[i] {
            let prev = &layers[i - 1];
            pairs.push((*prev.choose(rng).unwrap(), v));
            for &u in prev {
                if rng.gen_bool(p.edge_prob) {
                    pairs.push((u, v));
                }
            }
            for layer in &layers[..i - 1] {
                for &u in layer {
                    if rng.gen_bool(p.skip_prob) {
                        pairs.push((u, v));
                    }
                }
            }
        }
    }
    // every vertex but the sink needs an out-edge
    for i in 0..layers.len() - 1 {
        for &u in &layers[i] {
            if !pairs.iter().any(|&(t, _)| t == u) {
                pairs.push((u, *layers[i + 1].choose(rng).unwrap()));
            }
        }
    }
    let mut edges = Vec::new();
    for (tail, head) in pairs {
        let copies = if rng.gen_bool(p.parallel_prob) { 2 } else { 1 };
        for _ in 0..copies {
            edges.push(Edge {
                tail,
                head,
                label: rng.gen_range(0..label_count),
            });
        }
    }
    let relation = match p.relation {
        RelationKind::Linear => {
            let mut order: Vec<usize> = (0..label_count).collect();
            order.shuffle(rng);
            LabelRelation::linear(order)
        }
        RelationKind::Pairs => {
            let mut rel = Vec::new();
            for l in 0..label_count {
                for m in 0..label_count {
                    if rng.gen_bool(0.5) {
                        rel.push((l, m));
                    }
                }
            }
            LabelRelation::pairs(label_count, rel)
        }
    };
    let mut vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    vertices[0] = "0".into();
    vertices[n - 1] = "1".into();
    LabeledDigraph::new(
        vertices,
        edges,
        (1..=label_count).map(|l| l.to_string()).collect(),
        relation,
    )
    .expect("layered graphs are acyclic")
    .prune_labels()
}
