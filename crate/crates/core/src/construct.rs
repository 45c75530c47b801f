//! Balanced linearly labeled digraphs with a prescribed cd-index, and a
//! seeded search for linearly labeled balanced graphs whose cd-index has a
//! negative coefficient.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coxeter::dihedral_graph;
use crate::digraph::{ab_index_brute_force, Edge, LabelRelation, LabeledDigraph, RelationMode};
use crate::ncpoly::{ab_to_cd, Cd, CdPoly, CdWord};
use crate::random::{random_bounded_digraph, RandomGraphParams, RelationKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("graph must have a unique source and a distinct unique sink")]
    NotBounded,
    #[error("label relation must be a linear order")]
    NotLinear,
    #[error("graph is not balanced")]
    NotBalanced,
    #[error("coefficient of {0} is negative")]
    NegativeCoefficient(String),
    #[error("the zero polynomial has no realization")]
    ZeroPolynomial,
}

/// A bounded graph with a linear label order, ready to be combined.
struct Piece<'a> {
    g: &'a LabeledDigraph,
    zero: usize,
    one: usize,
    /// Labels from smallest to largest.
    order: Vec<usize>,
}

fn piece(g: &LabeledDigraph) -> Result<Piece<'_>, ConstructError> {
    let (zero, one) = g.proper_bounds().ok_or(ConstructError::NotBounded)?;
    let RelationMode::Linear(order) = g.relation().mode() else {
        return Err(ConstructError::NotLinear);
    };
    Ok(Piece {
        g,
        zero,
        one,
        order: order.clone(),
    })
}

fn checked(g: &LabeledDigraph) -> Result<Piece<'_>, ConstructError> {
    let p = piece(g)?;
    if !g.is_balanced().balanced {
        return Err(ConstructError::NotBalanced);
    }
    Ok(p)
}

/// Accumulates vertices, edges and a label order; vertices are named
/// `0`, `v1`, `v2`, …, `1` and labels `1`, `2`, … in increasing order.
struct Assembly {
    vertex_count: usize,
    edges: Vec<Edge>,
    label_count: usize,
}

impl Assembly {
    /// Starts with the source already present as vertex 0.
    fn new() -> Self {
        Assembly {
            vertex_count: 1,
            edges: Vec::new(),
            label_count: 0,
        }
    }

    fn fresh_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    fn fresh_label(&mut self) -> usize {
        self.label_count += 1;
        self.label_count - 1
    }

    /// Copies `p` with its source and sink sent to `zero` and `one`;
    /// `one = None` makes a fresh sink. Returns the sink.
    fn copy(&mut self, p: &Piece<'_>, zero: usize, one: Option<usize>) -> usize {
        let mut label_map = vec![0; p.g.labels().len()];
        for &l in &p.order {
            label_map[l] = self.fresh_label();
        }
        let mut vmap = vec![usize::MAX; p.g.vertex_count()];
        vmap[p.zero] = zero;
        for v in 0..p.g.vertex_count() {
            if v != p.zero && v != p.one {
                vmap[v] = self.fresh_vertex();
            }
        }
        vmap[p.one] = one.unwrap_or_else(|| self.fresh_vertex());
        for e in p.g.edges() {
            self.edges.push(Edge {
                tail: vmap[e.tail],
                head: vmap[e.head],
                label: label_map[e.label],
            });
        }
        vmap[p.one]
    }

    /// Moves `sink` to the last index and names everything.
    fn finish(mut self, sink: usize) -> LabeledDigraph {
        let last = self.vertex_count - 1;
        let swap = |v: usize| {
            if v == sink {
                last
            } else if v == last {
                sink
            } else {
                v
            }
        };
        for e in &mut self.edges {
            e.tail = swap(e.tail);
            e.head = swap(e.head);
        }
        let mut vertices: Vec<String> = (0..self.vertex_count).map(|i| format!("v{i}")).collect();
        vertices[0] = "0".into();
        vertices[last] = "1".into();
        LabeledDigraph::new(
            vertices,
            self.edges,
            (1..=self.label_count).map(|l| l.to_string()).collect(),
            LabelRelation::linear((0..self.label_count).collect()),
        )
        .expect("assembled from acyclic pieces")
    }
}

fn join_unchecked(a: &Piece<'_>, b: &Piece<'_>) -> LabeledDigraph {
    let mut asm = Assembly::new();
    let mu1 = asm.fresh_label();
    let top = asm.copy(a, 0, None);
    let bottom = asm.fresh_vertex();
    let sink = asm.copy(b, bottom, None);
    let mu2 = asm.fresh_label();
    for label in [mu1, mu2] {
        asm.edges.push(Edge {
            tail: top,
            head: bottom,
            label,
        });
    }
    asm.finish(sink)
}

fn glue_unchecked(pieces: &[Piece<'_>]) -> LabeledDigraph {
    let mut asm = Assembly::new();
    let sink = asm.fresh_vertex();
    for p in pieces {
        asm.copy(p, 0, Some(sink));
    }
    asm.finish(sink)
}

/// `H` with `G₁` and `G₂` in series, joined by two parallel edges from the
/// top of `G₁` to the bottom of `G₂`. One new edge gets a label below all
/// others and one a label above; the labels of `G₁` precede those of `G₂`.
/// `Ψ(H) = Ψ(G₁)·d·Ψ(G₂)`.
pub fn d_join(g1: &LabeledDigraph, g2: &LabeledDigraph) -> Result<LabeledDigraph, ConstructError> {
    Ok(join_unchecked(&checked(g1)?, &checked(g2)?))
}

/// `G₁` and `G₂` with their sources identified and their sinks identified;
/// the labels of `G₁` precede those of `G₂`. `Ψ(H) = Ψ(G₁) + Ψ(G₂)`.
pub fn glue_sum(
    g1: &LabeledDigraph,
    g2: &LabeledDigraph,
) -> Result<LabeledDigraph, ConstructError> {
    Ok(glue_unchecked(&[checked(g1)?, checked(g2)?]))
}

/// The Hasse graph of the rank `k + 1` butterfly with a linear labeling
/// whose cd-index is `c^k`.
pub fn butterfly(k: usize) -> LabeledDigraph {
    if k == 0 {
        return LabeledDigraph::from_linear(&["0", "1"], &[("0", "1", "1")], &["1"])
            .expect("single edge");
    }
    // the cover graph of the dihedral group I_2(k+1) with its reflection order
    let full = dihedral_graph(k + 1, k + 1).expect("k + 1 ≥ 2");
    let rank = |name: &str| if name == "e" { 0 } else { name.len() };
    let edges = full
        .edges()
        .iter()
        .copied()
        .filter(|e| rank(full.vertex_name(e.head)) == rank(full.vertex_name(e.tail)) + 1)
        .collect();
    let covers = LabeledDigraph::new(
        full.vertices().to_vec(),
        edges,
        full.labels().to_vec(),
        full.relation().clone(),
    )
    .expect("subgraph")
    .prune_labels();
    glue_unchecked(&[piece(&covers).expect("bounded and linear")])
}

/// A bounded balanced linearly labeled graph whose cd-index is `w`.
///
/// Each monomial `c^{k₀} d c^{k₁} d ⋯ d c^{k_r}` is built as butterflies
/// joined by [`d_join`], and the monomials, repeated by coefficient, are
/// combined by [`glue_sum`].
pub fn realize(w: &CdPoly) -> Result<LabeledDigraph, ConstructError> {
    if w.is_zero() {
        return Err(ConstructError::ZeroPolynomial);
    }
    if let Some((word, _)) = w.negative_terms().next() {
        return Err(ConstructError::NegativeCoefficient(word.to_string()));
    }
    let mut monomials = Vec::new();
    for (word, coeff) in w.terms() {
        let g = realize_word(word);
        let count: usize = coeff.try_into().expect("coefficient fits in usize");
        for _ in 0..count {
            monomials.push(g.clone());
        }
    }
    if monomials.len() == 1 {
        return Ok(monomials.pop().unwrap());
    }
    let pieces: Vec<Piece<'_>> = monomials.iter().map(|g| piece(g).unwrap()).collect();
    Ok(glue_unchecked(&pieces))
}

fn realize_word(word: &CdWord) -> LabeledDigraph {
    let mut runs = vec![0usize];
    for &l in word.letters() {
        match l {
            Cd::C => *runs.last_mut().unwrap() += 1,
            Cd::D => runs.push(0),
        }
    }
    let mut g = butterfly(runs[0]);
    for &k in &runs[1..] {
        let next = butterfly(k);
        g = join_unchecked(&piece(&g).unwrap(), &piece(&next).unwrap());
    }
    g
}

/// Whether a graph falls under the nonnegativity question: bounded, with a
/// linear label order, and balanced.
pub fn in_conjecture_scope(g: &LabeledDigraph) -> bool {
    piece(g).is_ok() && g.is_balanced().balanced
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchParams {
    pub seed: u64,
    pub trials: u64,
    pub max_vertices: usize,
    pub max_labels: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            seed: 42,
            trials: 10_000,
            max_vertices: 8,
            max_labels: 4,
        }
    }
}

/// A balanced linearly labeled graph whose cd-index has a negative
/// coefficient, confirmed by path enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub trial: u64,
    pub cd_index: String,
    pub graph: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub seed: u64,
    pub trials: u64,
    pub max_vertices: usize,
    /// Trials whose graph was balanced.
    pub balanced: u64,
    /// Balanced trials whose cd-index is not the single monomial `1`.
    pub nontrivial: u64,
    pub counterexamples: Vec<Candidate>,
}

/// The random graph of one trial. Trial `i` draws from stream `i` of the
/// generator seeded with `seed`, so any trial can be replayed alone.
pub fn search_trial_graph(p: &SearchParams, trial: u64) -> LabeledDigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    rng.set_stream(trial);
    let params = RandomGraphParams {
        max_vertices: p.max_vertices,
        max_labels: p.max_labels,
        relation: RelationKind::Linear,
        ..Default::default()
    };
    random_bounded_digraph(&mut rng, &params)
}

enum Outcome {
    Unbalanced,
    Trivial,
    Nonnegative,
    Negative(Candidate),
}

fn run_trial(p: &SearchParams, trial: u64) -> Outcome {
    let g = search_trial_graph(p, trial);
    let report = g.is_balanced();
    if !report.balanced {
        return Outcome::Unbalanced;
    }
    let cd = report
        .cd_index
        .expect("balanced bounded graph has a cd-index");
    if cd == CdPoly::one() {
        return Outcome::Trivial;
    }
    if cd.is_nonnegative() {
        return Outcome::Nonnegative;
    }
    let (s, t) = g.proper_bounds().expect("generated graphs are bounded");
    let recheck = ab_to_cd(&ab_index_brute_force(&g, s, t)).expect("balanced");
    assert_eq!(recheck, cd, "path enumeration disagrees on trial {trial}");
    Outcome::Negative(Candidate {
        trial,
        cd_index: cd.to_string(),
        graph: g.to_json(),
    })
}

/// Runs `trials` independent random trials in parallel and reports every
/// negative cd-index found, ordered by trial.
pub fn conjecture_search(p: &SearchParams) -> SearchReport {
    let outcomes: Vec<Outcome> = (0..p.trials)
        .into_par_iter()
        .map(|t| run_trial(p, t))
        .collect();
    let mut report = SearchReport {
        seed: p.seed,
        trials: p.trials,
        max_vertices: p.max_vertices,
        balanced: 0,
        nontrivial: 0,
        counterexamples: Vec::new(),
    };
    for o in outcomes {
        match o {
            Outcome::Unbalanced => {}
            Outcome::Trivial => report.balanced += 1,
            Outcome::Nonnegative => {
                report.balanced += 1;
                report.nontrivial += 1;
            }
            Outcome::Negative(c) => {
                report.balanced += 1;
                report.nontrivial += 1;
                report.counterexamples.push(c);
            }
        }
    }
    report
}
