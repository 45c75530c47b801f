//! Restricted digraphs and the signed path sums around Alexander duality.
//!
//! For a bounded graph `G` and a set `S` of interior vertices, the
//! restricted digraph `G_S` keeps `S ∪ {0̂, 1̂}` and has one edge for every
//! rising path of `G` whose endpoints are kept and whose interior avoids
//! them. That edge is labeled by the sequence of labels along the path.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use thiserror::Error;

use crate::digraph::{for_each_path, Edge, EdgeId, LabelRelation, LabeledDigraph, Path, VertexId};
use crate::ncpoly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("graph does not have a unique source and a distinct unique sink")]
    Unbounded,
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex {0:?} is the source or the sink")]
    BoundaryVertex(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

/// `G_S` together with the base path behind each of its edges.
#[derive(Debug, Clone)]
pub struct RestrictedDigraph {
    pub graph: LabeledDigraph,
    /// Base vertex id of each vertex of `graph`.
    pub kept: Vec<VertexId>,
    /// Base path of each edge of `graph`.
    pub segments: Vec<Vec<EdgeId>>,
    /// Positions of `0̂` and `1̂` in `graph`. Other kept vertices may
    /// become extra sources or sinks, so `graph` need not be bounded.
    pub zero: VertexId,
    pub one: VertexId,
}

impl RestrictedDigraph {
    /// Concatenates the base segments of a path in `G_S`.
    pub fn expand_path(&self, edges: &[EdgeId]) -> Vec<EdgeId> {
        edges
            .iter()
            .flat_map(|&e| self.segments[e].iter().copied())
            .collect()
    }
}

/// Resolves vertex names to ids, rejecting `0̂`, `1̂` and unknown names.
pub fn interior_subset<S: AsRef<str>>(
    g: &LabeledDigraph,
    names: &[S],
) -> Result<Vec<VertexId>, AlexanderError> {
    let (s, t) = g.proper_bounds().ok_or(AlexanderError::Unbounded)?;
    let mut out = Vec::new();
    for name in names {
        let name = name.as_ref();
        let v = g
            .vertex(name)
            .ok_or_else(|| AlexanderError::UnknownVertex(name.to_string()))?;
        if v == s || v == t {
            return Err(AlexanderError::BoundaryVertex(name.to_string()));
        }
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Interior vertices not in `s`.
pub fn complement(g: &LabeledDigraph, s: &[VertexId]) -> Vec<VertexId> {
    let (zero, one) = g.proper_bounds().expect("bounded graph");
    (0..g.vertex_count())
        .filter(|v| *v != zero && *v != one && !s.contains(v))
        .collect()
}

/// Builds `G_S`. Labels are base label names joined with `,`; two labels
/// are related when the last base label of the first is related to the
/// first base label of the second.
pub fn restrict(g: &LabeledDigraph, s: &[VertexId]) -> Result<RestrictedDigraph, AlexanderError> {
    let (zero, one) = g.proper_bounds().ok_or(AlexanderError::Unbounded)?;
    if let Some(&v) = s.iter().find(|&&v| v == zero || v == one) {
        return Err(AlexanderError::BoundaryVertex(g.vertex_name(v).to_string()));
    }
    let keep: HashSet<VertexId> = s.iter().copied().chain([zero, one]).collect();
    let kept: Vec<VertexId> = (0..g.vertex_count()).filter(|v| keep.contains(v)).collect();
    let mut new_id = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in kept.iter().enumerate() {
        new_id[v] = i;
    }

    let mut segments: Vec<Vec<EdgeId>> = Vec::new();
    for &x in &kept {
        let mut stack = Vec::new();
        rising_segments(g, x, &keep, &mut stack, &mut segments);
    }

    let mut label_ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut label_seqs: Vec<Vec<usize>> = Vec::new();
    let mut edges = Vec::with_capacity(segments.len());
    for seg in &segments {
        let seq: Vec<usize> = seg.iter().map(|&e| g.edge(e).label).collect();
        let label = *label_ids.entry(seq.clone()).or_insert_with(|| {
            label_seqs.push(seq);
            label_seqs.len() - 1
        });
        edges.push(Edge {
            tail: new_id[g.edge(seg[0]).tail],
            head: new_id[g.edge(*seg.last().unwrap()).head],
            label,
        });
    }
    let mut pairs = Vec::new();
    for (i, a) in label_seqs.iter().enumerate() {
        for (j, b) in label_seqs.iter().enumerate() {
            if g.related(*a.last().unwrap(), b[0]) {
                pairs.push((i, j));
            }
        }
    }
    let names = label_seqs
        .iter()
        .map(|seq| {
            seq.iter()
                .map(|&l| g.label_name(l))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    let graph = LabeledDigraph::new(
        kept.iter().map(|&v| g.vertex_name(v).to_string()).collect(),
        edges,
        names,
        LabelRelation::pairs(label_seqs.len(), pairs),
    )
    .expect("restriction of an acyclic graph is acyclic");
    Ok(RestrictedDigraph {
        graph,
        zero: new_id[zero],
        one: new_id[one],
        kept,
        segments,
    })
}

fn rising_segments(
    g: &LabeledDigraph,
    v: VertexId,
    keep: &HashSet<VertexId>,
    stack: &mut Vec<EdgeId>,
    out: &mut Vec<Vec<EdgeId>>,
) {
    for &e in g.out_edges(v) {
        if let Some(&last) = stack.last() {
            if !g.ascent(last, e) {
                continue;
            }
        }
        stack.push(e);
        let h = g.edge(e).head;
        if keep.contains(&h) {
            out.push(stack.clone());
        } else {
            rising_segments(g, h, keep, stack, out);
        }
        stack.pop();
    }
}

/// Whether all `0̂ → 1̂` paths have lengths of one parity, and the longest
/// length `ℓ(G)`.
pub fn parity_condition(g: &LabeledDigraph) -> Result<(bool, usize), AlexanderError> {
    let (s, t) = g.proper_bounds().ok_or(AlexanderError::Unbounded)?;
    let lens = g.path_lengths(s, t);
    let same = lens.windows(2).all(|w| (w[1] - w[0]) % 2 == 0);
    Ok((same, lens.last().copied().unwrap_or(0)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityCheck {
    /// `f̃_{G_S}(−1)`.
    pub lhs: BigInt,
    /// `(−1)^{ℓ(G)−1} · f̃_{G_T}(−1)`.
    pub rhs: BigInt,
    pub equal: bool,
}

impl RestrictedDigraph {
    /// `f̃_{0̂,1̂}` of the restricted graph; zero when there is no path.
    pub fn falling(&self) -> IntPoly {
        self.graph
            .rising_falling_from(self.zero)
            .swap_remove(self.one)
            .falling
    }
}

/// Compares the falling-path sums of `G_S` and `G_T` at `q = −1`, where `T`
/// is the complement of `S` among the interior vertices.
///
/// Requires `G` balanced with the parity condition.
pub fn alexander_check(g: &LabeledDigraph, s: &[VertexId]) -> Result<DualityCheck, AlexanderError> {
    let (same_parity, len) = parity_condition(g)?;
    if !same_parity {
        return Err(AlexanderError::PreconditionFailed(
            "path lengths from source to sink differ in parity".into(),
        ));
    }
    if !g.is_balanced().balanced {
        return Err(AlexanderError::PreconditionFailed(
            "graph is not balanced".into(),
        ));
    }
    let t = complement(g, s);
    let m1 = BigInt::from(-1);
    let lhs = restrict(g, s)?.falling().eval(&m1);
    let mut rhs = restrict(g, &t)?.falling().eval(&m1);
    if len % 2 == 0 {
        rhs = -rhs;
    }
    Ok(DualityCheck {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Whether every interval has as many rising as falling paths.
pub fn rising_count_equals_falling(g: &LabeledDigraph) -> bool {
    let one = BigInt::from(1);
    g.all_rising_falling()
        .into_iter()
        .all(|(_, rf)| rf.rising.eval(&one) == rf.falling.eval(&one))
}

/// The two signed path sums
/// `A = Σ_{Asc(p) ⊆ T, Des(p) ⊆ S} (−1)^{|i(p) ∩ S|}` and
/// `B = Σ_{Asc(p) ⊆ S, Des(p) ⊆ T} (−1)^{|i(p) ∩ S|}` over `0̂ → 1̂` paths.
///
/// Requires every interval to have equally many rising and falling paths.
pub fn signed_path_sums(
    g: &LabeledDigraph,
    s: &[VertexId],
) -> Result<(BigInt, BigInt), AlexanderError> {
    let (zero, one) = g.proper_bounds().ok_or(AlexanderError::Unbounded)?;
    if !rising_count_equals_falling(g) {
        return Err(AlexanderError::PreconditionFailed(
            "some interval has unequal rising and falling path counts".into(),
        ));
    }
    let in_s: HashSet<VertexId> = s.iter().copied().collect();
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(0));
    for_each_path(g, zero, one, |p| {
        let (mut asc_in_s, mut asc_in_t, mut des_in_s, mut des_in_t) = (0, 0, 0, 0);
        for w in p.windows(2) {
            let v = g.edge(w[0]).head;
            match (g.ascent(w[0], w[1]), in_s.contains(&v)) {
                (true, true) => asc_in_s += 1,
                (true, false) => asc_in_t += 1,
                (false, true) => des_in_s += 1,
                (false, false) => des_in_t += 1,
            }
        }
        let sign = if (asc_in_s + des_in_s) % 2 == 0 {
            1
        } else {
            -1
        };
        if asc_in_s == 0 && des_in_t == 0 {
            a += sign;
        }
        if asc_in_t == 0 && des_in_s == 0 {
            b += sign;
        }
    });
    Ok((a, b))
}

/// Base paths with ascents only in `T` and descents only in `S`; these are
/// exactly the expansions of the falling `0̂ → 1̂` paths of `G_S`.
pub fn paths_with_pattern(g: &LabeledDigraph, s: &[VertexId]) -> Vec<Path> {
    let (zero, one) = g.proper_bounds().expect("bounded graph");
    let mut out = Vec::new();
    for_each_path(g, zero, one, |p| {
        let ok = p.windows(2).all(|w| {
            let v = g.edge(w[0]).head;
            g.ascent(w[0], w[1]) != s.contains(&v)
        });
        if ok {
            out.push(Path::new(p.to_vec()));
        }
    });
    out
}
