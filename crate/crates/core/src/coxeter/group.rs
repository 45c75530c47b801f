use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use super::CoxeterError;

/// A finite Coxeter group with a chosen reflection ordering.
pub trait CoxeterGroup {
    type Element: Clone + Eq + Hash + fmt::Debug;

    fn identity(&self) -> Self::Element;
    fn simple_reflections(&self) -> Vec<Self::Element>;
    fn multiply(&self, u: &Self::Element, v: &Self::Element) -> Self::Element;
    fn length(&self, w: &Self::Element) -> usize;
    /// All reflections, listed in the reflection ordering.
    fn reflections(&self) -> Vec<Self::Element>;
    fn element_name(&self, w: &Self::Element) -> String;
    fn reflection_name(&self, t: &Self::Element) -> String;

    /// Every element, by breadth-first search from the identity.
    fn elements(&self) -> Vec<Self::Element> {
        let gens = self.simple_reflections();
        let id = self.identity();
        let mut seen: HashMap<Self::Element, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for s in &gens {
                let ws = self.multiply(&w, s);
                if seen.insert(ws.clone(), ()).is_none() {
                    queue.push_back(ws);
                }
            }
            out.push(w);
        }
        out
    }
}

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, CoxeterError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(CoxeterError::NotAPermutation(format!("{one_line:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `w₀ = n ⋯ 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// The transposition `t_{ij}`, 1-based.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        Self::identity(n).swap_positions(i, j)
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// The number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// `u·t_{ij}`: swap the entries in positions `i` and `j` (1-based).
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, j - 1);
        Permutation(v)
    }

    /// `(uv)(k) = u(v(k))`.
    pub fn compose(&self, v: &Permutation) -> Self {
        Permutation(v.0.iter().map(|&k| self.0[k - 1]).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = CoxeterError;

    /// `4321` or `4,3,2,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || CoxeterError::NotAPermutation(s.to_string());
        let v: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Self::new(v)
    }
}

/// True when every `t_{ik}` lies strictly between `t_{ij}` and `t_{jk}`
/// for `i < j < k`, and the order lists each transposition of `S_n` once.
pub fn reflection_order_validate(order: &[(usize, usize)], n: usize) -> bool {
    let mut pos = HashMap::new();
    for (idx, &(i, j)) in order.iter().enumerate() {
        if !(1 <= i && i < j && j <= n) || pos.insert((i, j), idx).is_some() {
            return false;
        }
    }
    if pos.len() != n * n.saturating_sub(1) / 2 {
        return false;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let (a, b, c) = (pos[&(i, j)], pos[&(i, k)], pos[&(j, k)]);
                if !((a < b && b < c) || (c < b && b < a)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Lexicographic order on `(i, j)`.
pub fn lex_reflection_order(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

/// Default bound on `n` for [`SymmetricGroup`].
pub const DEFAULT_MAX_N: usize = 6;

/// The symmetric group `S_n` (type `A_{n−1}`).
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    n: usize,
    order: Vec<(usize, usize)>,
}

impl SymmetricGroup {
    /// `S_n` with the lexicographic reflection ordering, `1 ≤ n ≤ 6`.
    pub fn new(n: usize) -> Result<Self, CoxeterError> {
        Self::with_cap(n, DEFAULT_MAX_N)
    }

    pub fn with_cap(n: usize, max_n: usize) -> Result<Self, CoxeterError> {
        Self::with_order(n, lex_reflection_order(n), max_n)
    }

    pub fn with_order(
        n: usize,
        order: Vec<(usize, usize)>,
        max_n: usize,
    ) -> Result<Self, CoxeterError> {
        if n == 0 || n > max_n {
            return Err(CoxeterError::TooLarge(n, max_n));
        }
        if !reflection_order_validate(&order, n) {
            return Err(CoxeterError::BadReflectionOrder);
        }
        Ok(SymmetricGroup { n, order })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reflection_order(&self) -> &[(usize, usize)] {
        &self.order
    }

    /// The same group with the reflection ordering reversed.
    pub fn reversed(&self) -> Self {
        SymmetricGroup {
            n: self.n,
            order: self.order.iter().rev().copied().collect(),
        }
    }
}

impl CoxeterGroup for SymmetricGroup {
    type Element = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.n)
    }

    fn simple_reflections(&self) -> Vec<Permutation> {
        (1..self.n)
            .map(|i| Permutation::transposition(self.n, i, i + 1))
            .collect()
    }

    fn multiply(&self, u: &Permutation, v: &Permutation) -> Permutation {
        u.compose(v)
    }

    fn length(&self, w: &Permutation) -> usize {
        w.length()
    }

    fn reflections(&self) -> Vec<Permutation> {
        self.order
            .iter()
            .map(|&(i, j)| Permutation::transposition(self.n, i, j))
            .collect()
    }

    fn element_name(&self, w: &Permutation) -> String {
        w.to_string()
    }

    fn reflection_name(&self, t: &Permutation) -> String {
        let moved: Vec<usize> = (1..=self.n).filter(|&k| t.0[k - 1] != k).collect();
        format!("({},{})", moved[0], moved[1])
    }
}

/// An element of the dihedral group as the map `x ↦ εx + r` on `Z/m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    pub flip: bool,
    pub shift: usize,
}

/// The dihedral group `I_2(m)` generated by `s: x ↦ −x` and `t: x ↦ 1 − x`.
#[derive(Debug, Clone)]
pub struct DihedralGroup {
    m: usize,
    words: HashMap<DihedralElement, String>,
}

impl DihedralGroup {
    pub fn new(m: usize) -> Result<Self, CoxeterError> {
        if m < 2 {
            return Err(CoxeterError::TooLarge(m, 2));
        }
        let mut g = DihedralGroup {
            m,
            words: HashMap::new(),
        };
        // shortest words, preferring those that start with s
        let id = g.identity();
        g.words.insert(id, String::new());
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            let word = g.words[&w].clone();
            for (letter, gen) in ["s", "t"].iter().zip(g.simple_reflections()) {
                let next = g.multiply(&w, &gen);
                if let std::collections::hash_map::Entry::Vacant(e) = g.words.entry(next) {
                    e.insert(format!("{word}{letter}"));
                    queue.push_back(next);
                }
            }
        }
        Ok(g)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The element with the given reduced word, if it is one.
    pub fn element(&self, word: &str) -> Option<DihedralElement> {
        let mut w = self.identity();
        let gens = self.simple_reflections();
        for ch in word.chars() {
            let g = match ch {
                's' => gens[0],
                't' => gens[1],
                'e' if word == "e" => return Some(w),
                _ => return None,
            };
            w = self.multiply(&w, &g);
        }
        Some(w)
    }

    /// The element of length `k` whose reduced word starts with `s`.
    pub fn element_of_length(&self, k: usize) -> Option<DihedralElement> {
        if k > self.m {
            return None;
        }
        let word: String = (0..k).map(|i| if i % 2 == 0 { 's' } else { 't' }).collect();
        self.element(&word)
    }
}

impl CoxeterGroup for DihedralGroup {
    type Element = DihedralElement;

    fn identity(&self) -> DihedralElement {
        DihedralElement {
            flip: false,
            shift: 0,
        }
    }

    fn simple_reflections(&self) -> Vec<DihedralElement> {
        vec![
            DihedralElement {
                flip: true,
                shift: 0,
            },
            DihedralElement {
                flip: true,
                shift: 1 % self.m,
            },
        ]
    }

    /// `(uv)(x) = u(v(x))`.
    fn multiply(&self, u: &DihedralElement, v: &DihedralElement) -> DihedralElement {
        let m = self.m;
        let vs = if u.flip { (m - v.shift) % m } else { v.shift };
        DihedralElement {
            flip: u.flip != v.flip,
            shift: (vs + u.shift) % m,
        }
    }

    fn length(&self, w: &DihedralElement) -> usize {
        self.words[w].len()
    }

    /// `s, sts, ststs, …, tst, t`.
    fn reflections(&self) -> Vec<DihedralElement> {
        let gens = self.simple_reflections();
        let st = self.multiply(&gens[0], &gens[1]);
        let mut out = Vec::with_capacity(self.m);
        let mut cur = gens[0];
        for _ in 0..self.m {
            out.push(cur);
            cur = self.multiply(&st, &cur);
        }
        out
    }

    fn element_name(&self, w: &DihedralElement) -> String {
        let word = &self.words[w];
        if word.is_empty() {
            "e".to_string()
        } else {
            word.clone()
        }
    }

    fn reflection_name(&self, t: &DihedralElement) -> String {
        self.element_name(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations() {
        let w: Permutation = "2413".parse().unwrap();
        assert_eq!(w.length(), 3);
        assert_eq!(w.swap_positions(1, 4).to_string(), "3412");
        assert!("2213".parse::<Permutation>().is_err());
        assert_eq!(
            "4,3,2,1".parse::<Permutation>().unwrap(),
            Permutation::longest(4)
        );
        let g = SymmetricGroup::new(4).unwrap();
        assert_eq!(g.elements().len(), 24);
        let t = Permutation::transposition(4, 2, 4);
        assert_eq!(g.multiply(&w, &t), w.swap_positions(2, 4));
        assert_eq!(g.reflection_name(&t), "(2,4)");
    }

    #[test]
    fn reflection_orders() {
        assert!(reflection_order_validate(&lex_reflection_order(4), 4));
        assert!(!reflection_order_validate(&[(1, 3), (1, 2), (2, 3)], 3));
        assert!(reflection_order_validate(&[(1, 2)], 2));
        assert!(!reflection_order_validate(&[(1, 2)], 3));
        let mut rev = lex_reflection_order(5);
        rev.reverse();
        assert!(reflection_order_validate(&rev, 5));
        assert!(SymmetricGroup::new(7).is_err());
        assert!(SymmetricGroup::with_cap(7, 7).is_ok());
    }

    #[test]
    fn dihedral() {
        for m in 2..=7 {
            let g = DihedralGroup::new(m).unwrap();
            let els = g.elements();
            assert_eq!(els.len(), 2 * m);
            let refl = g.reflections();
            assert_eq!(refl.len(), m);
            assert!(refl.iter().all(|t| g.length(t) % 2 == 1));
            assert_eq!(g.element_name(refl.last().unwrap()), "t");
            let top = els.iter().map(|w| g.length(w)).max().unwrap();
            assert_eq!(top, m);
        }
    }
}
