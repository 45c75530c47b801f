use std::collections::HashSet;

use num_bigint::BigInt;

use super::composition::Composition;
use super::element::{tensor, QSymElement, QSymTensor};
use super::multipoly::{in_variable, MultiPoly};
use super::QSymError;
use crate::digraph::{
    for_each_path, is_falling, is_rising, path_totals_from, EdgeId, IndexError, LabelId,
    LabelRelation, LabeledDigraph, PathWeight, RisingFalling, VertexId,
};
use crate::ncpoly::{is_cd_polynomial, Ab, AbPoly, AbWord, IntPoly, Poly};

/// `(ρ^R(λ), ρ^F(λ))`: the lengths of the maximal rising runs and of the
/// maximal falling runs of a label sequence.
pub fn run_compositions(labels: &[LabelId], rel: &LabelRelation) -> (Composition, Composition) {
    if labels.is_empty() {
        return (Composition::empty(), Composition::empty());
    }
    let (mut rising, mut falling) = (vec![1usize], vec![1usize]);
    for w in labels.windows(2) {
        if rel.related(w[0], w[1]) {
            *rising.last_mut().unwrap() += 1;
            falling.push(1);
        } else {
            rising.push(1);
            *falling.last_mut().unwrap() += 1;
        }
    }
    (
        Composition::new(rising).unwrap(),
        Composition::new(falling).unwrap(),
    )
}

/// Sum of `L_ρ` over paths, keyed by `ρ`.
#[derive(Clone, Default)]
struct RunWeight<const RISING: bool>(Poly<Composition>);

impl<const RISING: bool> PathWeight for RunWeight<RISING> {
    fn zero() -> Self {
        Self::default()
    }

    fn unit() -> Self {
        RunWeight(Poly::monomial(Composition::single(1), 1))
    }

    fn extend(&self, ascent: bool) -> Self {
        RunWeight(self.0.map_words(|c| {
            let mut p = c.parts().to_vec();
            if ascent == RISING {
                *p.last_mut().unwrap() += 1;
            } else {
                p.push(1);
            }
            Composition::new(p).unwrap()
        }))
    }

    fn accumulate(&mut self, other: &Self) {
        self.0 += &other.0;
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

fn from_x<const RISING: bool>(g: &LabeledDigraph, x: VertexId) -> Vec<QSymElement> {
    path_totals_from::<RunWeight<RISING>>(g, x)
        .into_iter()
        .enumerate()
        .map(|(y, w)| {
            if y == x {
                QSymElement::one()
            } else {
                QSymElement::from_l(w.0.into_terms())
            }
        })
        .collect()
}

fn all_intervals(g: &LabeledDigraph, rising: bool) -> Vec<Vec<QSymElement>> {
    (0..g.vertex_count())
        .map(|x| {
            if rising {
                from_x::<true>(g, x)
            } else {
                from_x::<false>(g, x)
            }
        })
        .collect()
}

/// `F^R([x, y]) = Σ_p L_{ρ^R(λ(p))}`; `1` when `x = y`, `0` when `x ≰ y`.
pub fn f_rising_interval(g: &LabeledDigraph, x: VertexId, y: VertexId) -> QSymElement {
    from_x::<true>(g, x).swap_remove(y)
}

/// `F^F([x, y]) = Σ_p L_{ρ^F(λ(p))}`; `1` when `x = y`, `0` when `x ≰ y`.
pub fn f_falling_interval(g: &LabeledDigraph, x: VertexId, y: VertexId) -> QSymElement {
    from_x::<false>(g, x).swap_remove(y)
}

pub fn f_rising(g: &LabeledDigraph) -> Result<QSymElement, IndexError> {
    let (s, t) = g.proper_bounds().ok_or(IndexError::Unbounded)?;
    Ok(f_rising_interval(g, s, t))
}

pub fn f_falling(g: &LabeledDigraph) -> Result<QSymElement, IndexError> {
    let (s, t) = g.proper_bounds().ok_or(IndexError::Unbounded)?;
    Ok(f_falling_interval(g, s, t))
}

/// The linear map sending `(a−b)^{α₁−1} b (a−b)^{α₂−1} b ⋯ b (a−b)^{α_k−1}`
/// to `M_α`.
///
/// Each word is expanded by writing `a = (a−b) + b`; a word in `a−b` and
/// `b` with runs of `i₀, i₁, …` copies of `a−b` between the `b`s maps to
/// `M_{(i₀+1, i₁+1, …)}`.
pub fn gamma(p: &AbPoly) -> QSymElement {
    let mut out = Poly::zero();
    for (w, c) in p.terms() {
        let letters = w.letters();
        let a_positions: Vec<usize> = (0..letters.len())
            .filter(|&i| letters[i] == Ab::A)
            .collect();
        for mask in 0..1u64 << a_positions.len() {
            // bit set: this a contributes b
            let mut parts = vec![1usize];
            let mut k = 0;
            for &l in letters {
                let is_b = match l {
                    Ab::B => true,
                    Ab::A => {
                        k += 1;
                        mask & (1 << (k - 1)) != 0
                    }
                };
                if is_b {
                    parts.push(1);
                } else {
                    *parts.last_mut().unwrap() += 1;
                }
            }
            out.add_term(Composition::new(parts).unwrap(), c.clone());
        }
    }
    QSymElement::from_m(out.into_terms())
}

/// The inverse of [`gamma`] on elements without constant term:
/// `L_α` pulls back to the word of length `|α| − 1` with `b` exactly at the
/// partial sums of `α`.
pub fn gamma_inverse(f: &QSymElement) -> Result<AbPoly, QSymError> {
    let mut out = AbPoly::zero();
    for (alpha, c) in f.l_terms() {
        if alpha.is_empty() {
            return Err(QSymError::ConstantTerm);
        }
        let mut letters = vec![Ab::A; alpha.size() - 1];
        for b in alpha.breaks() {
            letters[b - 1] = Ab::B;
        }
        out.add_term(AbWord::new(letters), c);
    }
    Ok(out)
}

/// Membership in the span of `1` and `γ(Z<c,d>)`.
pub fn peak_membership(f: &QSymElement) -> bool {
    let rest = f - &QSymElement::constant(f.constant_term());
    is_cd_polynomial(&gamma_inverse(&rest).expect("constant term removed"))
}

/// `Δ(F([x, y])) − Σ_{x≤z≤y} F([x, z]) ⊗ F([z, y])` for `x ≤ y`, using the
/// rising or the falling function.
pub fn hopf_residual(g: &LabeledDigraph, x: VertexId, y: VertexId, rising: bool) -> QSymTensor {
    let rows = all_intervals(g, rising);
    let mut out = rows[x][y].coproduct();
    for z in 0..g.vertex_count() {
        if g.leq(x, z) && g.leq(z, y) {
            out -= &tensor(&rows[x][z], &rows[z][y]);
        }
    }
    out
}

/// `Σ_{x≤z≤y} F^R([x, z])·S(F^R([z, y])) − δ_{x,y}`.
pub fn antipode_relation_residual(g: &LabeledDigraph, x: VertexId, y: VertexId) -> QSymElement {
    let rows = all_intervals(g, true);
    let mut out = if x == y {
        -QSymElement::one()
    } else {
        QSymElement::zero()
    };
    for z in 0..g.vertex_count() {
        if g.leq(x, z) && g.leq(z, y) {
            out = out + &rows[x][z] * &rows[z][y].antipode();
        }
    }
    out
}

/// Both sides of the multichain expansion at `m` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multichain {
    /// `F^R(G)` with `w_{m+1} = w_{m+2} = ⋯ = 0`.
    pub truncated_rising: MultiPoly,
    /// `Σ_c R̃_{x₀,x₁}(w₁)⋯R̃_{x_{m−1},x_m}(w_m)` over multichains
    /// `0̂ = x₀ ≤ ⋯ ≤ x_m = 1̂`.
    pub multichain_rising: MultiPoly,
    pub truncated_falling: MultiPoly,
    pub multichain_falling: MultiPoly,
}

impl Multichain {
    pub fn holds(&self) -> bool {
        self.truncated_rising == self.multichain_rising
            && self.truncated_falling == self.multichain_falling
    }
}

/// `(R̃_{x,y}, F̃_{x,y})` for all `x, y`.
fn capital_tables(g: &LabeledDigraph) -> Vec<Vec<(IntPoly, IntPoly)>> {
    (0..g.vertex_count())
        .map(|x| {
            g.rising_falling_from(x)
                .into_iter()
                .enumerate()
                .map(|(y, RisingFalling { rising, falling })| {
                    if y == x {
                        (IntPoly::one(), IntPoly::one())
                    } else {
                        (rising.shift(1), falling.shift(1))
                    }
                })
                .collect()
        })
        .collect()
}

pub fn multichain_specialization(g: &LabeledDigraph, m: usize) -> Result<Multichain, IndexError> {
    let (s, t) = g.proper_bounds().ok_or(IndexError::Unbounded)?;
    let tables = capital_tables(g);
    let n = g.vertex_count();
    let chains = |pick: fn(&(IntPoly, IntPoly)) -> &IntPoly| {
        let mut cur = vec![MultiPoly::zero(); n];
        cur[s] = MultiPoly::one();
        for j in 0..m {
            let mut next = vec![MultiPoly::zero(); n];
            for x in 0..n {
                if cur[x].is_zero() {
                    continue;
                }
                for (y, slot) in next.iter_mut().enumerate() {
                    let p = pick(&tables[x][y]);
                    if !p.is_zero() {
                        *slot += &(&cur[x] * &in_variable(p, j));
                    }
                }
            }
            cur = next;
        }
        cur.swap_remove(t)
    };
    Ok(Multichain {
        truncated_rising: f_rising_interval(g, s, t).truncate(m),
        multichain_rising: chains(|p| &p.0),
        truncated_falling: f_falling_interval(g, s, t).truncate(m),
        multichain_falling: chains(|p| &p.1),
    })
}

/// Which path-count convolution [`convolution_residual`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convolution {
    /// `Σ_{x≤z≤y} R̃_{x,z}(q)·F̃_{z,y}(−q)`, which is `δ_{x,y}` for every
    /// labeled acyclic digraph.
    RisingFalling,
    /// `Σ_{x≤z≤y} R̃_{x,z}(q)·R̃_{z,y}(−q)`, which is `δ_{x,y}` when the
    /// graph is balanced.
    RisingRising,
    /// `Σ_{x≤z≤y} (−1)^{ℓ(z,y)}·R̃_{x,z}(q)·R̃_{z,y}(q)`, which is `δ_{x,y}`
    /// when the graph is balanced and every interval has paths of one
    /// parity `ℓ(z,y)`.
    Alternating,
}

/// The chosen convolution minus `δ_{x,y}`.
pub fn convolution_residual(
    g: &LabeledDigraph,
    x: VertexId,
    y: VertexId,
    kind: Convolution,
) -> Result<IntPoly, QSymError> {
    let tables = capital_tables(g);
    let mut out = if x == y {
        -IntPoly::one()
    } else {
        IntPoly::zero()
    };
    for z in 0..g.vertex_count() {
        if !(g.leq(x, z) && g.leq(z, y)) {
            continue;
        }
        let left = &tables[x][z].0;
        let term = match kind {
            Convolution::RisingFalling => left * &tables[z][y].1.negate_variable(),
            Convolution::RisingRising => left * &tables[z][y].0.negate_variable(),
            Convolution::Alternating => {
                let lengths = g.path_lengths(z, y);
                let parity = lengths.first().map_or(0, |l| l % 2);
                if lengths.iter().any(|l| l % 2 != parity) {
                    return Err(QSymError::NotBipartite(
                        g.vertex_name(z).to_string(),
                        g.vertex_name(y).to_string(),
                    ));
                }
                let t = left * &tables[z][y].0;
                if parity == 1 {
                    -t
                } else {
                    t
                }
            }
        };
        out = &out + &term;
    }
    Ok(out)
}

/// A rising path `x → z` followed by a falling path `z → y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConvolutionPair {
    pub rising: Vec<EdgeId>,
    pub falling: Vec<EdgeId>,
}

impl ConvolutionPair {
    /// `(−1)^{ℓ(p₂)}`.
    pub fn sign(&self) -> i32 {
        if self.falling.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn total_length(&self) -> usize {
        self.rising.len() + self.falling.len()
    }
}

/// Every pair `(p₁, p₂)` with `p₁` a rising `x → z` path, `p₂` a falling
/// `z → y` path, over all `x ≤ z ≤ y`. Empty paths are allowed.
pub fn convolution_pairs(g: &LabeledDigraph, x: VertexId, y: VertexId) -> Vec<ConvolutionPair> {
    let collect = |from: VertexId, to: VertexId, keep: fn(&LabeledDigraph, &[EdgeId]) -> bool| {
        let mut out: Vec<Vec<EdgeId>> = Vec::new();
        if from == to {
            out.push(Vec::new());
        }
        for_each_path(g, from, to, |p| {
            if keep(g, p) {
                out.push(p.to_vec());
            }
        });
        out
    };
    let mut out = Vec::new();
    for z in 0..g.vertex_count() {
        if !(g.leq(x, z) && g.leq(z, y)) {
            continue;
        }
        let firsts = collect(x, z, is_rising);
        let seconds = collect(z, y, is_falling);
        for p1 in &firsts {
            for p2 in &seconds {
                out.push(ConvolutionPair {
                    rising: p1.clone(),
                    falling: p2.clone(),
                });
            }
        }
    }
    out
}

/// The sign-reversing involution on convolution pairs. `None` for the pair
/// of two empty paths.
///
/// With `p₁ = (e₁, …, eᵢ)` and `p₂ = (f₁, …, f_j)`: if `i = 0` move `f₁`
/// onto `p₁`; if `j = 0` move `eᵢ` onto `p₂`; otherwise move `f₁` onto `p₁`
/// when `λ(eᵢ) ∼ λ(f₁)` and `eᵢ` onto `p₂` when not.
pub fn sigma(g: &LabeledDigraph, pair: &ConvolutionPair) -> Option<ConvolutionPair> {
    let (p1, p2) = (&pair.rising, &pair.falling);
    let move_forward = match (p1.last(), p2.first()) {
        (None, None) => return None,
        (None, Some(_)) => true,
        (Some(_), None) => false,
        (Some(&e), Some(&f)) => g.ascent(e, f),
    };
    let (mut q1, mut q2) = (p1.clone(), p2.clone());
    if move_forward {
        q1.push(q2.remove(0));
    } else {
        q2.insert(0, q1.pop().unwrap());
    }
    Some(ConvolutionPair {
        rising: q1,
        falling: q2,
    })
}

/// Outcome of checking [`sigma`] on every convolution pair of an interval.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SigmaReport {
    pub pairs: usize,
    pub fixed_points: usize,
    /// Images that are not convolution pairs of the interval.
    pub escaped: usize,
    pub not_involutive: usize,
    pub sign_preserving: usize,
    pub length_changed: usize,
    /// `Σ (−1)^{ℓ(p₂)} q^{ℓ(p₁)+ℓ(p₂)}` over all pairs.
    pub signed_sum: IntPoly,
}

impl SigmaReport {
    /// True when sigma is a fixed-point-free sign-reversing matching.
    pub fn is_matching(&self) -> bool {
        self.fixed_points == 0
            && self.escaped == 0
            && self.not_involutive == 0
            && self.sign_preserving == 0
            && self.length_changed == 0
    }
}

/// Checks [`sigma`] on `[x, y]` for `x < y`.
pub fn verify_sigma(g: &LabeledDigraph, x: VertexId, y: VertexId) -> SigmaReport {
    let pairs = convolution_pairs(g, x, y);
    let domain: HashSet<&ConvolutionPair> = pairs.iter().collect();
    let mut r = SigmaReport {
        pairs: pairs.len(),
        ..Default::default()
    };
    for p in &pairs {
        let coeff = BigInt::from(p.sign());
        r.signed_sum.add_coeff(p.total_length(), &coeff);
        let Some(q) = sigma(g, p) else {
            r.fixed_points += 1;
            continue;
        };
        if &q == p {
            r.fixed_points += 1;
        }
        if !domain.contains(&q) {
            r.escaped += 1;
            continue;
        }
        if sigma(g, &q).as_ref() != Some(p) {
            r.not_involutive += 1;
        }
        if q.sign() == p.sign() {
            r.sign_preserving += 1;
        }
        if q.total_length() != p.total_length() {
            r.length_changed += 1;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ncpoly::parse_ab;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn runs() {
        let rel = LabelRelation::linear(vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(
            run_compositions(&[1, 2, 3], &rel),
            (comp(&[3]), comp(&[1, 1, 1]))
        );
        assert_eq!(
            run_compositions(&[2, 3, 1], &rel),
            (comp(&[2, 1]), comp(&[1, 2]))
        );
        assert_eq!(run_compositions(&[5], &rel), (comp(&[1]), comp(&[1])));
    }

    #[test]
    fn gamma_small() {
        let g = |s: &str| gamma(&parse_ab(s).unwrap());
        assert_eq!(g("1"), QSymElement::monomial(comp(&[1])));
        assert_eq!(g("b"), QSymElement::monomial(comp(&[1, 1])));
        assert_eq!(
            g("a"),
            QSymElement::from_m([(comp(&[2]), 1), (comp(&[1, 1]), 1)])
        );
        assert!(gamma_inverse(&QSymElement::one()).is_err());
    }

    #[test]
    fn fig1_left_f_rising() {
        let g = fixtures::fig1_left();
        let f = f_rising(&g).unwrap();
        let want = QSymElement::from_l([(comp(&[1]), 3), (comp(&[2]), 2), (comp(&[1, 1]), 2)]);
        assert_eq!(f, want);
        assert!(peak_membership(&f));
        assert!(!peak_membership(&QSymElement::fundamental(&comp(&[1, 1]))));
        assert!(peak_membership(&QSymElement::one()));
    }

    #[test]
    fn sigma_on_single_edge() {
        let g = fixtures::chain21();
        let (s, t) = g.bounds().unwrap();
        let r = verify_sigma(&g, s, t);
        assert!(r.is_matching(), "{r:?}");
        assert!(r.signed_sum.is_zero());
    }
}
