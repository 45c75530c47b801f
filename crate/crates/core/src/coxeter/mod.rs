//! Bruhat graphs of `S_n` and of the dihedral groups, their cd-indexes,
//! and R-polynomials.
//!
//! Right multiplication by the transposition `t_{ij}` swaps the entries in
//! positions `i` and `j` of a permutation in one-line notation.

mod bruhat;
mod group;
mod rpoly;

use thiserror::Error;

pub use bruhat::{bruhat_graph_sn, dihedral_graph, BruhatGraph};
pub use group::{
    lex_reflection_order, reflection_order_validate, CoxeterGroup, DihedralElement, DihedralGroup,
    Permutation, SymmetricGroup, DEFAULT_MAX_N,
};
pub use rpoly::LaurentHalfPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("group parameter {0} outside the supported range (bound {1})")]
    TooLarge(usize, usize),
    #[error("not a reflection ordering")]
    BadReflectionOrder,
    #[error("unknown group element {0:?}")]
    UnknownElement(String),
    #[error("{0} is not below {1} in Bruhat order")]
    NotComparable(String, String),
    #[error("no element of length {0} in I_2({1})")]
    NoSuchLength(usize, usize),
    #[error("half-integer or negative power q^({0}/2) left over")]
    HalfPowerResidue(i64),
    #[error("internal error: {0}")]
    Internal(String),
}
