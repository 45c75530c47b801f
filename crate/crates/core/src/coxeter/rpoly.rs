use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::bruhat::BruhatGraph;
use super::CoxeterError;
use crate::digraph::VertexId;
use crate::ncpoly::IntPoly;

/// A Laurent polynomial in `q^{1/2}`, keyed by twice the exponent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentHalfPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentHalfPoly {
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c·q^{half/2}`.
    pub fn monomial(half: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::default();
        p.add(half, c.into());
        p
    }

    /// `q^{1/2} − q^{−1/2}`.
    pub fn dyer_variable() -> Self {
        let mut p = Self::monomial(1, 1);
        p.add(-1, BigInt::from(-1));
        p
    }

    fn add(&mut self, half: i64, c: BigInt) {
        let slot = self.terms.entry(half).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&half);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                out.add(i + j, a * b);
            }
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add(i, c.clone());
        }
        out
    }

    /// `p(x)` at this value of `x`.
    pub fn evaluate(p: &IntPoly, x: &Self) -> Self {
        let mut out = Self::default();
        let mut power = Self::one();
        for c in p.coeffs() {
            out = out.plus(&power.mul(&Self::monomial(0, c.clone())));
            power = power.mul(x);
        }
        out
    }

    /// The ordinary polynomial with the same terms; fails on a half-integer
    /// or negative exponent.
    pub fn into_int_poly(self) -> Result<IntPoly, CoxeterError> {
        let mut out = IntPoly::zero();
        for (half, c) in self.terms {
            if half % 2 != 0 || half < 0 {
                return Err(CoxeterError::HalfPowerResidue(half));
            }
            out.add_coeff((half / 2) as usize, &c);
        }
        Ok(out)
    }
}

impl BruhatGraph {
    /// `R_{u,v}` by the recursion: `0` if `u ≰ v`, `1` if `u = v`, and for a
    /// right descent `s` of `v`, `R_{us,vs}` when `s` is a descent of `u` and
    /// `(q−1)R_{u,vs} + q·R_{us,vs}` otherwise. Results are cached.
    pub fn r_polynomial_recursive(&self, u: VertexId, v: VertexId) -> IntPoly {
        if !self.leq(u, v) {
            return IntPoly::zero();
        }
        if u == v {
            return IntPoly::one();
        }
        if let Some(p) = self.r_memo.read().unwrap().get(&(u, v)) {
            return p.clone();
        }
        let k = (0..self.rank())
            .find(|&k| self.length(self.times_simple(v, k)) < self.length(v))
            .expect("v above u has a descent");
        let (us, vs) = (self.times_simple(u, k), self.times_simple(v, k));
        let out = if self.length(us) < self.length(u) {
            self.r_polynomial_recursive(us, vs)
        } else {
            let a = &IntPoly::from_i64s(&[-1, 1]) * &self.r_polynomial_recursive(u, vs);
            let b = self.r_polynomial_recursive(us, vs).shift(1);
            &a + &b
        };
        self.r_memo.write().unwrap().insert((u, v), out.clone());
        out
    }

    /// `R_{u,v}` from rising paths: `q^{ℓ(u,v)/2}·R̃_{u,v}(q^{1/2} − q^{−1/2})`
    /// where `R̃_{u,v}(x) = Σ x^{ℓ(p)}` over rising paths `u → v`.
    pub fn r_polynomial_dyer(&self, u: VertexId, v: VertexId) -> Result<IntPoly, CoxeterError> {
        if u == v {
            return Ok(IntPoly::one());
        }
        if !self.leq(u, v) {
            return Ok(IntPoly::zero());
        }
        let (rising, _) = self.graph().capital_rising_falling(u, v);
        let ell = (self.length(v) - self.length(u)) as i64;
        let x = LaurentHalfPoly::dyer_variable();
        LaurentHalfPoly::evaluate(&rising, &x)
            .mul(&LaurentHalfPoly::monomial(ell, 1))
            .into_int_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::super::bruhat::bruhat_graph_sn;
    use super::*;

    #[test]
    fn s3_longest() {
        let b = bruhat_graph_sn(3).unwrap();
        let (e, w0) = (b.identity(), b.top());
        let want = IntPoly::from_i64s(&[-1, 2, -2, 1]);
        assert_eq!(b.r_polynomial_recursive(e, w0), want);
        assert_eq!(b.r_polynomial_dyer(e, w0).unwrap(), want);
        assert_eq!(b.r_polynomial_recursive(w0, w0), IntPoly::one());
        assert_eq!(b.r_polynomial_recursive(w0, e), IntPoly::zero());
    }

    #[test]
    fn half_powers_are_rejected() {
        let x = LaurentHalfPoly::dyer_variable();
        assert_eq!(
            x.clone().into_int_poly(),
            Err(CoxeterError::HalfPowerResidue(-1))
        );
        let q = x.mul(&LaurentHalfPoly::monomial(1, 1));
        assert_eq!(q.into_int_poly().unwrap(), IntPoly::from_i64s(&[-1, 1]));
    }
}
