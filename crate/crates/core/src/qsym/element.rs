use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::composition::Composition;
use super::multipoly::{Exponents, MultiPoly};
use crate::ncpoly::{Monomial, Poly};

/// Basis used when rendering a [`QSymElement`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Monomial quasisymmetric functions `M_α`.
    M,
    /// Fundamental quasisymmetric functions `L_α`.
    L,
}

/// A quasisymmetric function, stored in the monomial basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QSymElement {
    m: Poly<Composition>,
}

/// A pair of compositions `α ⊗ β`, a basis element of `QSym ⊗ QSym`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositionPair(pub Composition, pub Composition);

impl Monomial for CompositionPair {
    fn degree(&self) -> usize {
        self.0.size() + self.1.size()
    }

    fn is_unit(&self) -> bool {
        self.0.is_empty() && self.1.is_empty()
    }

    const DESCENDING: bool = false;

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in [&self.0, &self.1].into_iter().enumerate() {
            if i == 1 {
                f.write_str("⊗")?;
            }
            if c.is_empty() {
                f.write_str("1")?;
            } else {
                c.write(f)?;
            }
        }
        Ok(())
    }
}

/// An element of `QSym ⊗ QSym` in the basis `M_α ⊗ M_β`.
pub type QSymTensor = Poly<CompositionPair>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct LTerm(Composition);

impl Monomial for LTerm {
    fn degree(&self) -> usize {
        self.0.size()
    }

    fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    const DESCENDING: bool = false;

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("L")?;
        self.0.write_parts(f)
    }
}

/// `L_α = Σ_{α ≤ β} M_β`.
pub fn l_in_m(alpha: &Composition) -> QSymElement {
    QSymElement::from_m(alpha.refinements().into_iter().map(|b| (b, 1)))
}

/// `M_α = Σ_{α ≤ β} (−1)^{ℓ(β)−ℓ(α)} L_β`, as coefficients in the L basis.
pub fn m_in_l(alpha: &Composition) -> BTreeMap<Composition, BigInt> {
    alpha
        .refinements()
        .into_iter()
        .map(|b| {
            let sign = if (b.len() - alpha.len()).is_multiple_of(2) {
                1
            } else {
                -1
            };
            (b, BigInt::from(sign))
        })
        .collect()
}

impl QSymElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_m([(Composition::empty(), c)])
    }

    /// `M_α`.
    pub fn monomial(alpha: Composition) -> Self {
        Self::from_m([(alpha, 1)])
    }

    /// `L_α`.
    pub fn fundamental(alpha: &Composition) -> Self {
        l_in_m(alpha)
    }

    pub fn from_m<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Composition, C)>,
        C: Into<BigInt>,
    {
        QSymElement {
            m: Poly::from_terms(terms),
        }
    }

    pub fn from_l<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Composition, C)>,
        C: Into<BigInt>,
    {
        let mut out = Poly::zero();
        for (alpha, c) in terms {
            let c = c.into();
            for beta in alpha.refinements() {
                out.add_term(beta, c.clone());
            }
        }
        QSymElement { m: out }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// Nonzero coefficients in the M basis, in composition order.
    pub fn m_terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.m.terms()
    }

    pub fn m_coeff(&self, alpha: &Composition) -> BigInt {
        self.m.coeff(alpha)
    }

    pub fn as_poly(&self) -> &Poly<Composition> {
        &self.m
    }

    /// Nonzero coefficients in the L basis, in composition order.
    pub fn l_terms(&self) -> BTreeMap<Composition, BigInt> {
        let mut out: BTreeMap<Composition, BigInt> = BTreeMap::new();
        for (alpha, c) in self.m.terms() {
            for (beta, s) in m_in_l(alpha) {
                *out.entry(beta).or_default() += c * s;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn l_coeff(&self, alpha: &Composition) -> BigInt {
        self.l_terms().remove(alpha).unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.m.coeff(&Composition::empty())
    }

    pub fn homogeneous_part(&self, n: usize) -> Self {
        QSymElement {
            m: self.m.homogeneous_part(n),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QSymElement { m: self.m.scale(c) }
    }

    /// `Δ(M_α) = Σ M_{(α₁,…,αᵢ)} ⊗ M_{(αᵢ₊₁,…,α_k)}`.
    pub fn coproduct(&self) -> QSymTensor {
        let mut out = QSymTensor::zero();
        for (alpha, c) in self.m.terms() {
            let p = alpha.parts();
            for i in 0..=p.len() {
                let left = Composition::new(p[..i].to_vec()).unwrap();
                let right = Composition::new(p[i..].to_vec()).unwrap();
                out.add_term(CompositionPair(left, right), c.clone());
            }
        }
        out
    }

    /// The involution `ω(L_α) = L_{α^c}`.
    pub fn omega(&self) -> Self {
        Self::from_l(
            self.l_terms()
                .into_iter()
                .map(|(alpha, c)| (alpha.complement(), c)),
        )
    }

    /// Reverses every composition: `M_α ↦ M_{α*}`.
    pub fn reverse(&self) -> Self {
        QSymElement {
            m: self.m.map_words(|a| a.reverse()),
        }
    }

    /// `S(M_α) = (−1)^{|α|} ω(M_{α*})`.
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero();
        for n in self.m.degrees() {
            let part = self.homogeneous_part(n).reverse().omega();
            out = if n % 2 == 0 { out + part } else { out - part };
        }
        out
    }

    /// Evaluation at `w₁, …, w_m` with `w_{m+1} = w_{m+2} = ⋯ = 0`.
    pub fn truncate(&self, m: usize) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (alpha, c) in self.m.terms() {
            let p = alpha.parts();
            if p.len() > m {
                continue;
            }
            let mut chosen = Vec::with_capacity(p.len());
            increasing_tuples(m, p.len(), 0, &mut chosen, &mut |idx| {
                let mut e = vec![0u32; m];
                for (&i, &part) in idx.iter().zip(p) {
                    e[i] = part as u32;
                }
                out.add_term(Exponents::new(e), c.clone());
            });
        }
        out
    }

    pub fn render(&self, basis: Basis) -> String {
        match basis {
            Basis::M => self.m.to_string(),
            Basis::L => {
                Poly::from_terms(self.l_terms().into_iter().map(|(a, c)| (LTerm(a), c))).to_string()
            }
        }
    }
}

fn increasing_tuples(
    m: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    let remaining = k - chosen.len();
    for i in start..=m - remaining {
        chosen.push(i);
        increasing_tuples(m, k, i + 1, chosen, f);
        chosen.pop();
    }
}

type Shuffles = HashMap<(Vec<usize>, Vec<usize>), Vec<(Vec<usize>, BigInt)>>;

/// Quasi-shuffles of two part sequences with multiplicity.
fn quasi_shuffle(a: &[usize], b: &[usize], memo: &mut Shuffles) -> Vec<(Vec<usize>, BigInt)> {
    if a.is_empty() {
        return vec![(b.to_vec(), BigInt::one())];
    }
    if b.is_empty() {
        return vec![(a.to_vec(), BigInt::one())];
    }
    let key = (a.to_vec(), b.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    let mut prepend = |head: usize, rest: Vec<(Vec<usize>, BigInt)>| {
        for (w, c) in rest {
            let mut v = Vec::with_capacity(w.len() + 1);
            v.push(head);
            v.extend(w);
            *acc.entry(v).or_default() += c;
        }
    };
    prepend(a[0], quasi_shuffle(&a[1..], b, memo));
    prepend(b[0], quasi_shuffle(a, &b[1..], memo));
    prepend(a[0] + b[0], quasi_shuffle(&a[1..], &b[1..], memo));
    let v: Vec<(Vec<usize>, BigInt)> = acc.into_iter().collect();
    memo.insert(key, v.clone());
    v
}

impl Mul for &QSymElement {
    type Output = QSymElement;

    /// Quasi-shuffle product in the M basis.
    fn mul(self, rhs: &QSymElement) -> QSymElement {
        let mut memo = Shuffles::new();
        let mut out = Poly::zero();
        for (a, ca) in self.m.terms() {
            for (b, cb) in rhs.m.terms() {
                let c = ca * cb;
                for (w, k) in quasi_shuffle(a.parts(), b.parts(), &mut memo) {
                    out.add_term(Composition::new(w).unwrap(), &c * k);
                }
            }
        }
        QSymElement { m: out }
    }
}

impl Mul for QSymElement {
    type Output = QSymElement;

    fn mul(self, rhs: QSymElement) -> QSymElement {
        &self * &rhs
    }
}

impl Add for QSymElement {
    type Output = QSymElement;

    fn add(self, rhs: QSymElement) -> QSymElement {
        QSymElement { m: self.m + rhs.m }
    }
}

impl Add for &QSymElement {
    type Output = QSymElement;

    fn add(self, rhs: &QSymElement) -> QSymElement {
        QSymElement {
            m: &self.m + &rhs.m,
        }
    }
}

impl Sub for QSymElement {
    type Output = QSymElement;

    fn sub(self, rhs: QSymElement) -> QSymElement {
        QSymElement { m: self.m - rhs.m }
    }
}

impl Sub for &QSymElement {
    type Output = QSymElement;

    fn sub(self, rhs: &QSymElement) -> QSymElement {
        QSymElement {
            m: &self.m - &rhs.m,
        }
    }
}

impl Neg for QSymElement {
    type Output = QSymElement;

    fn neg(self) -> QSymElement {
        QSymElement { m: -self.m }
    }
}

/// `f ⊗ g`.
pub fn tensor(f: &QSymElement, g: &QSymElement) -> QSymTensor {
    let mut out = QSymTensor::zero();
    for (a, ca) in f.m_terms() {
        for (b, cb) in g.m_terms() {
            out.add_term(CompositionPair(a.clone(), b.clone()), ca * cb);
        }
    }
    out
}

/// The product of `QSym ⊗ QSym`, `(f ⊗ g)(f' ⊗ g') = ff' ⊗ gg'`.
pub fn tensor_product(x: &QSymTensor, y: &QSymTensor) -> QSymTensor {
    let mut out = QSymTensor::zero();
    for (CompositionPair(a, b), cx) in x.terms() {
        for (CompositionPair(a2, b2), cy) in y.terms() {
            let left = &QSymElement::monomial(a.clone()) * &QSymElement::monomial(a2.clone());
            let right = &QSymElement::monomial(b.clone()) * &QSymElement::monomial(b2.clone());
            let c = cx * cy;
            for (l, cl) in left.m_terms() {
                for (r, cr) in right.m_terms() {
                    out.add_term(CompositionPair(l.clone(), r.clone()), &c * cl * cr);
                }
            }
        }
    }
    out
}

/// `m ∘ (id ⊗ S) ∘ Δ`, which equals `ε(f)·1`.
pub fn antipode_convolution(f: &QSymElement) -> QSymElement {
    let mut out = QSymElement::zero();
    for (CompositionPair(a, b), c) in f.coproduct().terms() {
        let right = QSymElement::monomial(b.clone()).antipode();
        out = out + (&QSymElement::monomial(a.clone()) * &right).scale(c);
    }
    out
}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.m)
    }
}

impl fmt::Debug for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSym({})", self.m)
    }
}
