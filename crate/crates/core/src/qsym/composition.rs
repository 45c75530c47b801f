use std::cmp::Ordering;
use std::fmt;

use super::QSymError;
use crate::ncpoly::Monomial;

/// An integer composition. The empty composition is the composition of 0.
///
/// Ordered by size, then number of parts, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    /// Fails on a zero part.
    pub fn new(parts: Vec<usize>) -> Result<Self, QSymError> {
        if parts.contains(&0) {
            return Err(QSymError::ZeroPart);
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `(n)`, the minimum of `Σ_n`.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partial sums `α₁, α₁+α₂, …` strictly below `n`, as a subset of `[n−1]`.
    pub fn breaks(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        let mut s = 0;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            s += p;
            out.push(s);
        }
        out
    }

    /// Inverse of [`breaks`](Self::breaks). `breaks` must be increasing and
    /// inside `1..n`.
    pub fn from_breaks(n: usize, breaks: &[usize]) -> Self {
        if n == 0 {
            return Self::empty();
        }
        let mut parts = Vec::with_capacity(breaks.len() + 1);
        let mut prev = 0;
        for &b in breaks {
            assert!(b > prev && b < n, "breaks must increase inside 1..{n}");
            parts.push(b - prev);
            prev = b;
        }
        parts.push(n - prev);
        Composition(parts)
    }

    /// Exchange commas and plus signs: the break set is complemented in
    /// `[n−1]`.
    pub fn complement(&self) -> Self {
        let n = self.size();
        if n == 0 {
            return Self::empty();
        }
        let own = self.breaks();
        let rest: Vec<usize> = (1..n).filter(|i| own.binary_search(i).is_err()).collect();
        Self::from_breaks(n, &rest)
    }

    /// `α*`, the parts in reverse order.
    pub fn reverse(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Concatenation of parts.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// Every `β` with `α ≤ β`, i.e. every refinement of `α` (including `α`).
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.size();
        let own = self.breaks();
        let free: Vec<usize> = (1..n).filter(|i| own.binary_search(i).is_err()).collect();
        subsets_over(&own, &free)
            .into_iter()
            .map(|b| Self::from_breaks(n, &b))
            .collect()
    }

    /// Every `β` with `β ≤ α`, i.e. every coarsening of `α`.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.size();
        subsets_over(&[], &self.breaks())
            .into_iter()
            .map(|b| Self::from_breaks(n, &b))
            .collect()
    }

    pub fn write_parts(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// `base ∪ T` for every subset `T` of `extra`, each sorted.
fn subsets_over(base: &[usize], extra: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << extra.len());
    for mask in 0..1u64 << extra.len() {
        let mut s: Vec<usize> = base.to_vec();
        s.extend(
            extra
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x),
        );
        s.sort_unstable();
        out.push(s);
    }
    out
}

/// All `2^{n−1}` compositions of `n` in the canonical order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    let mut out = Composition::single(n).refinements();
    out.sort();
    out
}

/// `α ≤ β` in `Σ_n`: `β` refines `α`.
pub fn sigma_leq(alpha: &Composition, beta: &Composition) -> Result<bool, QSymError> {
    if alpha.size() != beta.size() {
        return Err(QSymError::SizeMismatch(alpha.size(), beta.size()));
    }
    let bb = beta.breaks();
    Ok(alpha.breaks().iter().all(|x| bb.binary_search(x).is_ok()))
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then(self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for Composition {
    fn degree(&self) -> usize {
        self.size()
    }

    fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    const DESCENDING: bool = false;

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("M")?;
        self.write_parts(f)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_parts(f)
    }
}

impl std::str::FromStr for Composition {
    type Err = QSymError;

    /// Accepts `[3,1,2]`, `3,1,2` or `(3,1,2)`; `[]` is the empty composition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| QSymError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}
