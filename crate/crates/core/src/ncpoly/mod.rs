//! Exact noncommutative polynomials over `{a, b}` and `{c, d}`.
//!
//! `Z<a,b>` carries the Newtonian coproduct
//! `Δ(u₁⋯uₙ) = Σᵢ u₁⋯uᵢ₋₁ ⊗ uᵢ₊₁⋯uₙ`, and `Z<c,d>` embeds in it via
//! `c = a + b`, `d = ab + ba`. Coefficients are arbitrary precision.

mod ab;
mod cd;
mod intpoly;
mod poly;
mod text;
mod word;

pub use ab::{
    a, a_minus_b, b, kappa_counit_check, lambda_counit_check, letter, newtonian_residual, tensor,
};
pub use cd::{ab_to_cd, c, cd_words_of_degree, d, expand_word, is_cd_polynomial, NotInSpan};
pub use intpoly::IntPoly;
pub use poly::Poly;
pub use text::{parse_ab, parse_cd, parse_poly, ParseError};
pub use word::{cd_word_cmp, Ab, AbPair, AbWord, Cd, CdWord, Concat, Monomial};

pub type AbPoly = Poly<AbWord>;
pub type CdPoly = Poly<CdWord>;
pub type TensorPoly = Poly<AbPair>;

/// Expands a cd-polynomial into `Z<a,b>`.
pub fn cd_expand(p: &CdPoly) -> AbPoly {
    p.expand()
}
