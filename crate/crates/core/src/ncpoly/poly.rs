use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::word::{Concat, Monomial};

/// Finitely supported integer linear combination of monomials.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty
/// table and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<W: Monomial> {
    terms: BTreeMap<W, BigInt>,
}

impl<W: Monomial> Default for Poly<W> {
    fn default() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }
}

impl<W: Monomial> Poly<W> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(word: W, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(word, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (W, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&W, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (W, BigInt)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, word: &W) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, word: W, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor))
                .collect(),
        }
    }

    /// Applies a word map and re-collects like terms.
    pub fn map_words<V: Monomial>(&self, mut f: impl FnMut(&W) -> V) -> Poly<V> {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Linear extension of a word-to-polynomial map.
    pub fn linear_map<V: Monomial>(&self, mut f: impl FnMut(&W) -> Poly<V>) -> Poly<V> {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        let d: std::collections::BTreeSet<usize> =
            self.terms.keys().map(Monomial::degree).collect();
        d.into_iter().collect()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn homogeneous_part(&self, degree: usize) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn negative_terms(&self) -> impl Iterator<Item = (&W, &BigInt)> {
        self.terms.iter().filter(|(_, c)| c.is_negative())
    }
}

impl<W: Concat> Poly<W> {
    pub fn one() -> Self {
        Self::monomial(W::unit(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(W::unit(), c)
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a, W: Concat> Mul<&'a Poly<W>> for &'a Poly<W> {
    type Output = Poly<W>;

    fn mul(self, rhs: &'a Poly<W>) -> Poly<W> {
        let mut out = Poly::zero();
        for (u, c) in &self.terms {
            for (v, d) in &rhs.terms {
                out.add_term(u.concat(v), c * d);
            }
        }
        out
    }
}

impl<W: Concat> Mul for Poly<W> {
    type Output = Poly<W>;

    fn mul(self, rhs: Poly<W>) -> Poly<W> {
        &self * &rhs
    }
}

impl<W: Monomial> AddAssign<&Poly<W>> for Poly<W> {
    fn add_assign(&mut self, rhs: &Poly<W>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl<W: Monomial> SubAssign<&Poly<W>> for Poly<W> {
    fn sub_assign(&mut self, rhs: &Poly<W>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl<W: Monomial> Add for Poly<W> {
    type Output = Poly<W>;

    fn add(mut self, rhs: Poly<W>) -> Poly<W> {
        self += &rhs;
        self
    }
}

impl<'a, W: Monomial> Add<&'a Poly<W>> for &'a Poly<W> {
    type Output = Poly<W>;

    fn add(self, rhs: &'a Poly<W>) -> Poly<W> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<W: Monomial> Sub for Poly<W> {
    type Output = Poly<W>;

    fn sub(mut self, rhs: Poly<W>) -> Poly<W> {
        self -= &rhs;
        self
    }
}

impl<'a, W: Monomial> Sub<&'a Poly<W>> for &'a Poly<W> {
    type Output = Poly<W>;

    fn sub(self, rhs: &'a Poly<W>) -> Poly<W> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<W: Monomial> Neg for Poly<W> {
    type Output = Poly<W>;

    fn neg(self) -> Poly<W> {
        Poly {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl<W: Monomial> fmt::Display for Poly<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<(&W, &BigInt)> = self.terms.iter().collect();
        if W::DESCENDING {
            ordered.sort_by_key(|(w, _)| std::cmp::Reverse(w.degree()));
        }
        for (i, (w, c)) in ordered.into_iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_unit() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                w.write(f)?;
            }
        }
        Ok(())
    }
}

impl<W: Monomial> fmt::Debug for Poly<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
