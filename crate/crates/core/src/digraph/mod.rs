//! Labeled acyclic multidigraphs and their path invariants.
//!
//! A path `(e₁, …, e_k)` has descent word `u₁⋯u_{k−1}` with `uᵢ = a` when
//! `λ(eᵢ) ∼ λ(eᵢ₊₁)` and `b` otherwise. The ab-index of an interval
//! `[x, y]` is the sum of the descent words of all `x → y` paths.

mod balance;
mod graph;
mod index;
mod io;
mod paths;
mod products;

pub use balance::{BalanceReport, EquivalenceReport, Imbalance};
pub use graph::{
    Edge, EdgeId, GraphError, LabelId, LabelRelation, LabeledDigraph, RelationMode, VertexId,
};
pub use index::{path_sums_from, path_totals_from, IndexError, PathWeight, RisingFalling};
pub use io::{EdgeRecord, GraphFile, RelationRecord};
pub use paths::{
    ab_index_brute_force, descent_word, for_each_path, is_falling, is_rising, paths, Path,
};
pub use products::{cartesian_product, dual, stanley_product};
