use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::ncpoly::{ab_to_cd, CdPoly, IntPoly};

use super::graph::{LabeledDigraph, VertexId};

/// An interval and path length with unequal rising and falling counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Imbalance {
    pub x: String,
    pub y: String,
    pub length: usize,
    pub rising: BigInt,
    pub falling: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceReport {
    pub balanced: bool,
    /// The first failing interval in vertex order, at its shortest failing
    /// length.
    pub witness: Option<Imbalance>,
    /// Present when the graph is balanced and has `0̂ ≠ 1̂`.
    pub cd_index: Option<CdPoly>,
}

/// The three conditions of the balance equivalence, each evaluated
/// independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    /// `r̃ = f̃` on every interval.
    pub all_lengths: bool,
    /// Rising and falling counts agree for every even length.
    pub even_lengths: bool,
    /// Every interval's ab-index is a cd-polynomial.
    pub cd_exists: bool,
}

impl EquivalenceReport {
    pub fn consistent(&self) -> bool {
        self.all_lengths == self.even_lengths && self.even_lengths == self.cd_exists
    }
}

fn first_mismatch(r: &IntPoly, f: &IntPoly, even_only: bool) -> Option<(usize, BigInt, BigInt)> {
    let top = r.coeffs().len().max(f.coeffs().len());
    (0..top)
        .map(|k| (k + 1, r.coeff(k), f.coeff(k)))
        .filter(|(len, _, _)| !even_only || len % 2 == 0)
        .find(|(_, a, b)| a != b)
}

impl LabeledDigraph {
    /// Tests whether every interval has as many rising as falling paths of
    /// each length.
    pub fn is_balanced(&self) -> BalanceReport {
        let witness = self.imbalance(false);
        let balanced = witness.is_none();
        let cd_index = if balanced { self.cd_index().ok() } else { None };
        BalanceReport {
            balanced,
            witness,
            cd_index,
        }
    }

    fn imbalance(&self, even_only: bool) -> Option<Imbalance> {
        let n = self.vertex_count();
        let rows: Vec<Option<(VertexId, usize, BigInt, BigInt)>> = (0..n)
            .into_par_iter()
            .map(|x| {
                let row = self.rising_falling_from(x);
                (0..n).find_map(|y| {
                    first_mismatch(&row[y].rising, &row[y].falling, even_only)
                        .map(|(k, r, f)| (y, k, r, f))
                })
            })
            .collect();
        rows.into_iter()
            .enumerate()
            .find_map(|(x, r)| r.map(|r| (x, r)))
            .map(|(x, (y, length, rising, falling))| Imbalance {
                x: self.vertex_name(x).to_string(),
                y: self.vertex_name(y).to_string(),
                length,
                rising,
                falling,
            })
    }

    /// Evaluates the three equivalent balance conditions separately.
    pub fn balance_equivalence(&self) -> EquivalenceReport {
        let all_lengths = self.imbalance(false).is_none();
        let even_lengths = self.imbalance(true).is_none();
        let n = self.vertex_count();
        let cd_exists = (0..n).into_par_iter().all(|x| {
            self.ab_index_from(x)
                .iter()
                .all(|p| p.is_zero() || ab_to_cd(p).is_ok())
        });
        EquivalenceReport {
            all_lengths,
            even_lengths,
            cd_exists,
        }
    }
}
