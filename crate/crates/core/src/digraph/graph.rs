use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type LabelId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("directed cycle: {}", .0.join(" -> "))]
    CycleDetected(Vec<String>),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("edge endpoint {0:?} is not a vertex")]
    DanglingVertex(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate label {0:?} in linear order")]
    DuplicateLabel(String),
    #[error("malformed graph description: {0}")]
    Format(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
    pub label: LabelId,
}

/// How the relation `∼` on labels is specified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationMode {
    /// A total order listed smallest first; `λ ∼ μ` iff `λ ≤ μ`.
    Linear(Vec<LabelId>),
    /// An arbitrary set of related ordered pairs.
    Pairs(Vec<(LabelId, LabelId)>),
}

/// A binary relation on label ids, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelRelation {
    mode: RelationMode,
    n: usize,
    table: FixedBitSet,
}

impl LabelRelation {
    /// Builds the relation on `n` labels. In linear mode `order` must list
    /// every label exactly once.
    pub fn new(n: usize, mode: RelationMode) -> Self {
        let mut table = FixedBitSet::with_capacity(n * n);
        match &mode {
            RelationMode::Linear(order) => {
                for (i, &l) in order.iter().enumerate() {
                    for &m in &order[i..] {
                        table.insert(l * n + m);
                    }
                }
            }
            RelationMode::Pairs(pairs) => {
                for &(l, m) in pairs {
                    table.insert(l * n + m);
                }
            }
        }
        LabelRelation { mode, n, table }
    }

    pub fn linear(order: Vec<LabelId>) -> Self {
        Self::new(order.len(), RelationMode::Linear(order))
    }

    pub fn pairs(n: usize, pairs: Vec<(LabelId, LabelId)>) -> Self {
        Self::new(n, RelationMode::Pairs(pairs))
    }

    pub fn related(&self, l: LabelId, m: LabelId) -> bool {
        self.table.contains(l * self.n + m)
    }

    pub fn mode(&self) -> &RelationMode {
        &self.mode
    }

    pub fn is_linear(&self) -> bool {
        matches!(self.mode, RelationMode::Linear(_))
    }

    pub fn label_count(&self) -> usize {
        self.n
    }

    /// The relation `μ ∼* λ` iff `λ ∼ μ`. A reversed linear order stays
    /// linear.
    pub fn reversed(&self) -> Self {
        match &self.mode {
            RelationMode::Linear(order) => Self::linear(order.iter().rev().copied().collect()),
            RelationMode::Pairs(pairs) => {
                Self::pairs(self.n, pairs.iter().map(|&(l, m)| (m, l)).collect())
            }
        }
    }
}

/// A finite acyclic multidigraph with labeled edges and a relation on the
/// labels.
#[derive(Clone)]
pub struct LabeledDigraph {
    vertices: Vec<String>,
    vertex_index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    labels: Vec<String>,
    relation: LabelRelation,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
    topo: Vec<VertexId>,
    reach: Vec<FixedBitSet>,
}

impl LabeledDigraph {
    /// Validates and indexes a graph given by ids.
    ///
    /// `relation` must be defined on `labels.len()` labels.
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<Edge>,
        labels: Vec<String>,
        relation: LabelRelation,
    ) -> Result<Self, GraphError> {
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        assert_eq!(relation.label_count(), labels.len());
        let n = vertices.len();
        let mut out_edges = vec![Vec::new(); n];
        let mut in_edges = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for v in [e.tail, e.head] {
                if v >= n {
                    return Err(GraphError::DanglingVertex(format!("#{v}")));
                }
            }
            assert!(e.label < labels.len());
            out_edges[e.tail].push(i);
            in_edges[e.head].push(i);
        }

        let topo = match topological_order(n, &edges, &out_edges) {
            Ok(t) => t,
            Err(cycle) => {
                return Err(GraphError::CycleDetected(
                    cycle.into_iter().map(|v| vertices[v].clone()).collect(),
                ))
            }
        };

        let mut reach = vec![FixedBitSet::with_capacity(n); n];
        for &v in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(v);
            for &e in &out_edges[v] {
                set.union_with(&reach[edges[e].head]);
            }
            reach[v] = set;
        }

        Ok(LabeledDigraph {
            vertices,
            vertex_index,
            edges,
            labels,
            relation,
            out_edges,
            in_edges,
            topo,
            reach,
        })
    }

    /// Builds a graph from vertex names and `(tail, head, label)` triples,
    /// with labels related by the given total order.
    pub fn from_linear<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(S, S, S)],
        order: &[S],
    ) -> Result<Self, GraphError> {
        let mut b = Builder::new(vertices)?;
        for l in order {
            b.declare_label(l.as_ref(), true)?;
        }
        for (t, h, l) in edges {
            b.edge(t.as_ref(), h.as_ref(), l.as_ref(), false)?;
        }
        let order = (0..b.labels.len()).collect();
        b.finish(LabelRelation::linear(order))
    }

    /// Builds a graph from vertex names, `(tail, head, label)` triples and
    /// an explicit list of related label pairs.
    ///
    /// Every label named in `pairs` must occur on some edge.
    pub fn from_pairs<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(S, S, S)],
        pairs: &[(S, S)],
    ) -> Result<Self, GraphError> {
        let mut b = Builder::new(vertices)?;
        for (t, h, l) in edges {
            b.edge(t.as_ref(), h.as_ref(), l.as_ref(), true)?;
        }
        let mut ids = Vec::with_capacity(pairs.len());
        for (l, m) in pairs {
            ids.push((b.label_id(l.as_ref())?, b.label_id(m.as_ref())?));
        }
        let n = b.labels.len();
        b.finish(LabelRelation::pairs(n, ids))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_name(&self, l: LabelId) -> &str {
        &self.labels[l]
    }

    pub fn label_id(&self, name: &str) -> Option<LabelId> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn relation(&self) -> &LabelRelation {
        &self.relation
    }

    pub fn related(&self, l: LabelId, m: LabelId) -> bool {
        self.relation.related(l, m)
    }

    /// Whether consecutive edges `e`, `f` form an ascent.
    pub fn ascent(&self, e: EdgeId, f: EdgeId) -> bool {
        self.relation
            .related(self.edges[e].label, self.edges[f].label)
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v]
    }

    pub fn topological_order(&self) -> &[VertexId] {
        &self.topo
    }

    /// `x ≤ y`: there is a (possibly empty) directed path from `x` to `y`.
    pub fn leq(&self, x: VertexId, y: VertexId) -> bool {
        self.reach[x].contains(y)
    }

    pub fn sources(&self) -> Vec<VertexId> {
        (0..self.vertex_count())
            .filter(|&v| self.in_edges[v].is_empty())
            .collect()
    }

    pub fn sinks(&self) -> Vec<VertexId> {
        (0..self.vertex_count())
            .filter(|&v| self.out_edges[v].is_empty())
            .collect()
    }

    /// The unique source and sink `(0̂, 1̂)`, if the graph has them.
    pub fn bounds(&self) -> Option<(VertexId, VertexId)> {
        match (self.sources().as_slice(), self.sinks().as_slice()) {
            (&[s], &[t]) => Some((s, t)),
            _ => None,
        }
    }

    /// Like [`bounds`](Self::bounds) but also requires `0̂ ≠ 1̂`.
    pub fn proper_bounds(&self) -> Option<(VertexId, VertexId)> {
        self.bounds().filter(|(s, t)| s != t)
    }

    /// The vertex-induced subgraph on `{z : x ≤ z ≤ y}`; empty unless
    /// `x ≤ y`. Labels and relation are inherited unchanged.
    pub fn interval(&self, x: VertexId, y: VertexId) -> LabeledDigraph {
        let keep: Vec<VertexId> = (0..self.vertex_count())
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect();
        self.induced(&keep)
    }

    /// The subgraph induced on `keep`, with vertices in the given order.
    pub fn induced(&self, keep: &[VertexId]) -> LabeledDigraph {
        let mut map = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| map[e.tail] != usize::MAX && map[e.head] != usize::MAX)
            .map(|e| Edge {
                tail: map[e.tail],
                head: map[e.head],
                label: e.label,
            })
            .collect();
        LabeledDigraph::new(
            keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            edges,
            self.labels.clone(),
            self.relation.clone(),
        )
        .expect("subgraph of an acyclic graph is acyclic")
    }

    /// Ids of labels that occur on at least one edge.
    pub fn used_labels(&self) -> Vec<LabelId> {
        let mut used = FixedBitSet::with_capacity(self.labels.len());
        for e in &self.edges {
            used.insert(e.label);
        }
        used.ones().collect()
    }

    /// Drops labels that no edge uses, renumbering the rest in order.
    pub fn prune_labels(&self) -> LabeledDigraph {
        let used = self.used_labels();
        let mut map = vec![usize::MAX; self.labels.len()];
        for (i, &l) in used.iter().enumerate() {
            map[l] = i;
        }
        let relation = match self.relation.mode() {
            RelationMode::Linear(order) => LabelRelation::linear(
                order
                    .iter()
                    .filter(|&&l| map[l] != usize::MAX)
                    .map(|&l| map[l])
                    .collect(),
            ),
            RelationMode::Pairs(pairs) => LabelRelation::pairs(
                used.len(),
                pairs
                    .iter()
                    .filter(|(l, m)| map[*l] != usize::MAX && map[*m] != usize::MAX)
                    .map(|&(l, m)| (map[l], map[m]))
                    .collect(),
            ),
        };
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                label: map[e.label],
                ..*e
            })
            .collect();
        LabeledDigraph::new(
            self.vertices.clone(),
            edges,
            used.iter().map(|&l| self.labels[l].clone()).collect(),
            relation,
        )
        .unwrap()
    }

    /// Lengths of all `x → y` paths, as a sorted set, computed by DP.
    pub fn path_lengths(&self, x: VertexId, y: VertexId) -> Vec<usize> {
        let n = self.vertex_count();
        let mut lens: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n + 1); n];
        lens[x].insert(0);
        for &v in &self.topo {
            if lens[v].is_clear() {
                continue;
            }
            let shifted: Vec<usize> = lens[v].ones().map(|k| k + 1).collect();
            for &e in &self.out_edges[v] {
                let h = self.edges[e].head;
                for &k in &shifted {
                    lens[h].insert(k);
                }
            }
        }
        lens[y].ones().filter(|&k| k > 0).collect()
    }
}

impl fmt::Debug for LabeledDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LabeledDigraph")
            .field("vertices", &self.vertices)
            .field(
                "edges",
                &self
                    .edges
                    .iter()
                    .map(|e| {
                        format!(
                            "{} -{}-> {}",
                            self.vertices[e.tail], self.labels[e.label], self.vertices[e.head]
                        )
                    })
                    .collect::<Vec<_>>(),
            )
            .field("relation", &self.relation.mode)
            .finish()
    }
}

/// Two graphs are equal when their vertex names, edge lists, label names
/// and relations coincide exactly.
impl PartialEq for LabeledDigraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.edges == other.edges
            && self.labels == other.labels
            && self.relation == other.relation
    }
}

impl Eq for LabeledDigraph {}

struct Builder {
    vertices: Vec<String>,
    index: HashMap<String, VertexId>,
    labels: Vec<String>,
    label_index: HashMap<String, LabelId>,
    edges: Vec<Edge>,
}

impl Builder {
    fn new<S: AsRef<str>>(vertices: &[S]) -> Result<Self, GraphError> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_ref().to_string(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.as_ref().to_string()));
            }
        }
        Ok(Builder {
            vertices: vertices.iter().map(|v| v.as_ref().to_string()).collect(),
            index,
            labels: Vec::new(),
            label_index: HashMap::new(),
            edges: Vec::new(),
        })
    }

    fn declare_label(&mut self, l: &str, strict: bool) -> Result<LabelId, GraphError> {
        if let Some(&id) = self.label_index.get(l) {
            if strict {
                return Err(GraphError::DuplicateLabel(l.to_string()));
            }
            return Ok(id);
        }
        let id = self.labels.len();
        self.labels.push(l.to_string());
        self.label_index.insert(l.to_string(), id);
        Ok(id)
    }

    fn label_id(&self, l: &str) -> Result<LabelId, GraphError> {
        self.label_index
            .get(l)
            .copied()
            .ok_or_else(|| GraphError::UnknownLabel(l.to_string()))
    }

    fn vertex_id(&self, v: &str) -> Result<VertexId, GraphError> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| GraphError::DanglingVertex(v.to_string()))
    }

    fn edge(&mut self, t: &str, h: &str, l: &str, new_labels: bool) -> Result<(), GraphError> {
        let tail = self.vertex_id(t)?;
        let head = self.vertex_id(h)?;
        let label = if new_labels {
            self.declare_label(l, false)?
        } else {
            self.label_id(l)?
        };
        self.edges.push(Edge { tail, head, label });
        Ok(())
    }

    fn finish(self, relation: LabelRelation) -> Result<LabeledDigraph, GraphError> {
        LabeledDigraph::new(self.vertices, self.edges, self.labels, relation)
    }
}

/// Kahn's algorithm. On failure returns a directed cycle `v₀ → ⋯ → v₀`.
fn topological_order(
    n: usize,
    edges: &[Edge],
    out_edges: &[Vec<EdgeId>],
) -> Result<Vec<VertexId>, Vec<VertexId>> {
    let mut indeg = vec![0usize; n];
    for e in edges {
        indeg[e.head] += 1;
    }
    let mut stack: Vec<VertexId> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = stack.pop() {
        order.push(v);
        for &e in out_edges[v].iter().rev() {
            let h = edges[e].head;
            indeg[h] -= 1;
            if indeg[h] == 0 {
                stack.push(h);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // every leftover vertex has an incoming edge from another leftover
    // vertex; walk those backwards until a vertex repeats
    let mut pred = vec![usize::MAX; n];
    for e in edges {
        if indeg[e.head] > 0 && indeg[e.tail] > 0 && pred[e.head] == usize::MAX {
            pred[e.head] = e.tail;
        }
    }
    let start = (0..n).find(|&v| indeg[v] > 0).unwrap();
    let mut seen = vec![false; n];
    let mut v = start;
    while !seen[v] {
        seen[v] = true;
        v = pred[v];
    }
    let mut cycle = vec![v];
    let mut u = pred[v];
    while u != v {
        cycle.push(u);
        u = pred[u];
    }
    cycle.push(v);
    cycle.reverse();
    Err(cycle)
}
