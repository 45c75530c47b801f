//! Balanced labelings of acyclic digraphs and their cd-indexes.
//!
//! The ab-index of a labeled acyclic digraph sums the descent words of all
//! paths in an interval. When every interval has as many rising as falling
//! paths of each length the ab-index can be written in `c = a + b` and
//! `d = ab + ba`. This crate computes these invariants exactly along with
//! the surrounding machinery: restricted digraphs and Alexander duality,
//! rising/falling quasisymmetric functions, Bruhat graphs with their
//! R-polynomials, and explicit realizations of nonnegative cd-polynomials.

pub mod alexander;
pub mod construct;
pub mod coxeter;
pub mod digraph;
pub mod fixtures;
pub mod ncpoly;
pub mod qsym;
pub mod random;
