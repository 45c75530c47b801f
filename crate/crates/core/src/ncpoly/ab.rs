//! Operations specific to `Z<a,b>`: the Newtonian coproduct, the bar and
//! star involutions, and the algebra maps κ and λ.

use num_bigint::BigInt;

use super::word::{Ab, AbPair, AbWord};
use super::{AbPoly, TensorPoly};

pub fn a() -> AbPoly {
    AbPoly::monomial(AbWord::new(vec![Ab::A]), 1)
}

pub fn b() -> AbPoly {
    AbPoly::monomial(AbWord::new(vec![Ab::B]), 1)
}

pub fn letter(l: Ab) -> AbPoly {
    AbPoly::monomial(AbWord::new(vec![l]), 1)
}

/// `a - b`.
pub fn a_minus_b() -> AbPoly {
    &a() - &b()
}

impl AbPoly {
    /// Right-multiplies every word by a single letter.
    pub fn append(&self, l: Ab) -> AbPoly {
        self.map_words(|w| w.with(l))
    }

    /// `Δ(u_1 ⋯ u_n) = Σ_i u_1 ⋯ u_{i-1} ⊗ u_{i+1} ⋯ u_n`, extended linearly.
    pub fn coproduct(&self) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (w, c) in self.terms() {
            for i in 0..w.len() {
                out.add_term(AbPair(w.slice(0, i), w.slice(i + 1, w.len())), c.clone());
            }
        }
        out
    }

    /// Exchanges `a` and `b` letterwise.
    pub fn bar(&self) -> AbPoly {
        self.map_words(AbWord::bar)
    }

    /// Reverses every word.
    pub fn star(&self) -> AbPoly {
        self.map_words(AbWord::reversed)
    }

    /// The algebra map `a -> a - b`, `b -> 0`.
    pub fn kappa(&self) -> AbPoly {
        self.pure_power_map(Ab::A, &a_minus_b())
    }

    /// The algebra map `a -> 0`, `b -> b - a`.
    pub fn lambda(&self) -> AbPoly {
        self.pure_power_map(Ab::B, &(&b() - &a()))
    }

    // Shared shape of κ and λ: words using only `keep` map to image^len,
    // everything else vanishes.
    fn pure_power_map(&self, keep: Ab, image: &AbPoly) -> AbPoly {
        let mut powers: Vec<AbPoly> = vec![AbPoly::one()];
        let mut out = AbPoly::zero();
        for (w, c) in self.terms() {
            if w.letters().iter().any(|&l| l != keep) {
                continue;
            }
            while powers.len() <= w.len() {
                let next = powers.last().unwrap() * image;
                powers.push(next);
            }
            out.add_scaled(&powers[w.len()], c);
        }
        out
    }

    /// Commutative specialization with `a` and `b` each sent to `q` or `0`.
    /// `Ψ|_{a=q, b=0}` recovers the rising-path polynomial.
    pub fn specialize(&self, a_to_q: bool, b_to_q: bool) -> super::IntPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (w, c) in self.terms() {
            let na = w.letters().iter().filter(|&&l| l == Ab::A).count();
            let nb = w.len() - na;
            if (!a_to_q && na > 0) || (!b_to_q && nb > 0) {
                continue;
            }
            let deg = w.len();
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, BigInt::default());
            }
            coeffs[deg] += c;
        }
        super::IntPoly::new(coeffs)
    }
}

impl TensorPoly {
    /// Applies `f ⊗ g` then multiplies the factors with a letter in between:
    /// `Σ f(u₁) · mid · g(u₂)`.
    pub fn contract(
        &self,
        f: impl Fn(&AbPoly) -> AbPoly,
        mid: &AbPoly,
        g: impl Fn(&AbPoly) -> AbPoly,
    ) -> AbPoly {
        let mut out = AbPoly::zero();
        for (AbPair(u, v), c) in self.terms() {
            let left = f(&AbPoly::monomial(u.clone(), 1));
            let right = g(&AbPoly::monomial(v.clone(), 1));
            out.add_scaled(&(&(&left * mid) * &right), c);
        }
        out
    }

    /// `Σ (l · u₁) ⊗ (u₂ · r)`.
    pub fn wrap(&self, l: &AbPoly, r: &AbPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (AbPair(u, v), c) in self.terms() {
            let left = l * &AbPoly::monomial(u.clone(), 1);
            let right = &AbPoly::monomial(v.clone(), 1) * r;
            out += &tensor(&left, &right).scale(c);
        }
        out
    }
}

/// `p ⊗ q` expanded bilinearly.
pub fn tensor(p: &AbPoly, q: &AbPoly) -> TensorPoly {
    let mut out = TensorPoly::zero();
    for (u, c) in p.terms() {
        for (v, d) in q.terms() {
            out.add_term(AbPair(u.clone(), v.clone()), c * d);
        }
    }
    out
}

/// Residual `p - κ(p) - Σ κ(p₁) · b · p₂`; zero for every `p`.
pub fn kappa_counit_check(p: &AbPoly) -> AbPoly {
    let sum = p.coproduct().contract(AbPoly::kappa, &b(), Clone::clone);
    &(p - &p.kappa()) - &sum
}

/// Residual `p - λ(p) - Σ λ(p₁) · a · p₂`; zero for every `p`.
pub fn lambda_counit_check(p: &AbPoly) -> AbPoly {
    let sum = p.coproduct().contract(AbPoly::lambda, &a(), Clone::clone);
    &(p - &p.lambda()) - &sum
}

/// Residual of the Newtonian condition
/// `Δ(vw) = Σ v·w₁ ⊗ w₂ + Σ v₁ ⊗ v₂·w`.
pub fn newtonian_residual(v: &AbPoly, w: &AbPoly) -> TensorPoly {
    let lhs = (v * w).coproduct();
    let one = AbPoly::one();
    let mut rhs = w.coproduct().wrap(v, &one);
    rhs += &v.coproduct().wrap(&one, w);
    &lhs - &rhs
}
