//! Path sums by dynamic programming over `(vertex, label of last edge)`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use thiserror::Error;

use crate::ncpoly::{ab_to_cd, Ab, AbPoly, CdPoly, IntPoly, NotInSpan};

use super::graph::{LabelId, LabeledDigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("no path from {0:?} to {1:?}")]
    NoPath(String, String),
    #[error("graph does not have a unique source and a distinct unique sink")]
    Unbounded,
    #[error(transparent)]
    NotCd(#[from] NotInSpan),
}

/// A quantity summed over paths, built up one edge at a time.
pub trait PathWeight: Clone + Send + Sync {
    fn zero() -> Self;
    /// Weight of a single-edge path.
    fn unit() -> Self;
    /// Weight after appending an edge that makes an ascent or a descent.
    fn extend(&self, ascent: bool) -> Self;
    fn accumulate(&mut self, other: &Self);
    fn is_zero(&self) -> bool;
}

impl PathWeight for AbPoly {
    fn zero() -> Self {
        AbPoly::zero()
    }

    fn unit() -> Self {
        AbPoly::one()
    }

    fn extend(&self, ascent: bool) -> Self {
        self.append(if ascent { Ab::A } else { Ab::B })
    }

    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }

    fn is_zero(&self) -> bool {
        AbPoly::is_zero(self)
    }
}

/// `(r̃, f̃)`: rising and falling paths counted by `q^{ℓ(p)−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RisingFalling {
    pub rising: IntPoly,
    pub falling: IntPoly,
}

impl PathWeight for RisingFalling {
    fn zero() -> Self {
        Self::default()
    }

    fn unit() -> Self {
        RisingFalling {
            rising: IntPoly::one(),
            falling: IntPoly::one(),
        }
    }

    fn extend(&self, ascent: bool) -> Self {
        if ascent {
            RisingFalling {
                rising: self.rising.shift(1),
                falling: IntPoly::zero(),
            }
        } else {
            RisingFalling {
                rising: IntPoly::zero(),
                falling: self.falling.shift(1),
            }
        }
    }

    fn accumulate(&mut self, other: &Self) {
        self.rising = &self.rising + &other.rising;
        self.falling = &self.falling + &other.falling;
    }

    fn is_zero(&self) -> bool {
        self.rising.is_zero() && self.falling.is_zero()
    }
}

/// For each vertex `y`, the weights of all `x → y` paths grouped by the
/// label of their last edge.
pub fn path_sums_from<W: PathWeight>(g: &LabeledDigraph, x: VertexId) -> Vec<BTreeMap<LabelId, W>> {
    let n = g.vertex_count();
    let mut acc: Vec<BTreeMap<LabelId, W>> = vec![BTreeMap::new(); n];
    let mut started = false;
    for &v in g.topological_order() {
        if v == x {
            started = true;
        } else if !started || acc[v].is_empty() {
            continue;
        }
        let mut per_label: HashMap<LabelId, W> = HashMap::new();
        for &f in g.out_edges(v) {
            let lf = g.edge(f).label;
            let w = per_label
                .entry(lf)
                .or_insert_with(|| {
                    let mut w = if v == x { W::unit() } else { W::zero() };
                    for (&l, p) in &acc[v] {
                        let next = p.extend(g.related(l, lf));
                        if !next.is_zero() {
                            w.accumulate(&next);
                        }
                    }
                    w
                })
                .clone();
            if w.is_zero() {
                continue;
            }
            let h = g.edge(f).head;
            match acc[h].get_mut(&lf) {
                Some(slot) => slot.accumulate(&w),
                None => {
                    acc[h].insert(lf, w);
                }
            }
        }
    }
    acc
}

/// Totals of [`path_sums_from`] per target vertex.
pub fn path_totals_from<W: PathWeight>(g: &LabeledDigraph, x: VertexId) -> Vec<W> {
    path_sums_from::<W>(g, x)
        .into_iter()
        .map(|m| {
            let mut t = W::zero();
            for w in m.values() {
                t.accumulate(w);
            }
            t
        })
        .collect()
}

impl LabeledDigraph {
    fn strict_pair(&self, x: VertexId, y: VertexId) -> Result<(), IndexError> {
        if x == y || !self.leq(x, y) {
            return Err(IndexError::NoPath(
                self.vertex_name(x).to_string(),
                self.vertex_name(y).to_string(),
            ));
        }
        Ok(())
    }

    /// `Ψ([x, y])`, the sum of descent words of all `x → y` paths.
    pub fn ab_index(&self, x: VertexId, y: VertexId) -> Result<AbPoly, IndexError> {
        self.strict_pair(x, y)?;
        Ok(self.ab_index_from(x).swap_remove(y))
    }

    /// `Ψ([x, y])` for every `y`; zero where there is no path.
    pub fn ab_index_from(&self, x: VertexId) -> Vec<AbPoly> {
        path_totals_from::<AbPoly>(self, x)
    }

    /// `Ψ(G) = Ψ([0̂, 1̂])`.
    pub fn ab_index_bounded(&self) -> Result<AbPoly, IndexError> {
        let (s, t) = self.proper_bounds().ok_or(IndexError::Unbounded)?;
        self.ab_index(s, t)
    }

    /// The cd-index of a bounded graph.
    pub fn cd_index(&self) -> Result<CdPoly, IndexError> {
        Ok(ab_to_cd(&self.ab_index_bounded()?)?)
    }

    /// `(r̃_{x,y}, f̃_{x,y})`.
    pub fn rising_falling(
        &self,
        x: VertexId,
        y: VertexId,
    ) -> Result<(IntPoly, IntPoly), IndexError> {
        self.strict_pair(x, y)?;
        let rf = self.rising_falling_from(x).swap_remove(y);
        Ok((rf.rising, rf.falling))
    }

    pub fn rising_falling_from(&self, x: VertexId) -> Vec<RisingFalling> {
        path_totals_from::<RisingFalling>(self, x)
    }

    /// `(R̃_{x,y}, F̃_{x,y})`: `q·r̃`, `q·f̃` for `x < y`, and `(1, 1)` for
    /// `x = y`. Both vanish when `x ≰ y`.
    pub fn capital_rising_falling(&self, x: VertexId, y: VertexId) -> (IntPoly, IntPoly) {
        if x == y {
            return (IntPoly::one(), IntPoly::one());
        }
        match self.rising_falling(x, y) {
            Ok((r, f)) => (r.shift(1), f.shift(1)),
            Err(_) => (IntPoly::zero(), IntPoly::zero()),
        }
    }

    /// All pairs `x < y`, in index order.
    pub fn strict_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && self.leq(x, y))
            .collect()
    }

    /// `Ψ([x, y])` for every `x < y`, computed in parallel over `x`.
    pub fn all_ab_indexes(&self) -> Vec<((VertexId, VertexId), AbPoly)> {
        let n = self.vertex_count();
        let rows: Vec<Vec<AbPoly>> = (0..n)
            .into_par_iter()
            .map(|x| self.ab_index_from(x))
            .collect();
        let mut out = Vec::new();
        for (x, row) in rows.into_iter().enumerate() {
            for (y, p) in row.into_iter().enumerate() {
                if x != y && self.leq(x, y) {
                    out.push(((x, y), p));
                }
            }
        }
        out
    }

    pub fn all_rising_falling(&self) -> Vec<((VertexId, VertexId), RisingFalling)> {
        let n = self.vertex_count();
        let rows: Vec<Vec<RisingFalling>> = (0..n)
            .into_par_iter()
            .map(|x| self.rising_falling_from(x))
            .collect();
        let mut out = Vec::new();
        for (x, row) in rows.into_iter().enumerate() {
            for (y, p) in row.into_iter().enumerate() {
                if x != y && self.leq(x, y) {
                    out.push(((x, y), p));
                }
            }
        }
        out
    }
}
