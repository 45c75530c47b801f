//! Quasisymmetric functions and the rising/falling quasisymmetric
//! functions of a labeled digraph.
//!
//! Compositions of `n` form the poset `Σ_n` with `α ≤ β` when `β` refines
//! `α`, so `L_α = Σ_{α ≤ β} M_β`. Elements are kept in the M basis; the
//! product is the quasi-shuffle and the coproduct is deconcatenation.

mod composition;
mod element;
mod graph;
mod multipoly;

use thiserror::Error;

use crate::digraph::IndexError;

pub use composition::{compositions_of, sigma_leq, Composition};
pub use element::{
    antipode_convolution, l_in_m, m_in_l, tensor, tensor_product, Basis, CompositionPair,
    QSymElement, QSymTensor,
};
pub use graph::{
    antipode_relation_residual, convolution_pairs, convolution_residual, f_falling,
    f_falling_interval, f_rising, f_rising_interval, gamma, gamma_inverse, hopf_residual,
    multichain_specialization, peak_membership, run_compositions, sigma, verify_sigma, Convolution,
    ConvolutionPair, Multichain, SigmaReport,
};
pub use multipoly::{in_variable, Exponents, MultiPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSymError {
    #[error("compositions have positive parts")]
    ZeroPart,
    #[error("compositions of different sizes {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("cannot parse composition {0:?}")]
    Parse(String),
    #[error("the constant term has no preimage under gamma")]
    ConstantTerm,
    #[error("paths from {0:?} to {1:?} have lengths of both parities")]
    NotBipartite(String, String),
    #[error(transparent)]
    Index(#[from] IndexError),
}
