use std::fmt;

use crate::ncpoly::{Concat, IntPoly, Monomial, Poly};

/// A commutative monomial `w₁^{e₁}⋯w_m^{e_m}`, trailing zero exponents
/// dropped so that equal monomials compare equal whatever `m` was used.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponents(Vec<u32>);

impl Exponents {
    pub fn new(mut e: Vec<u32>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        Exponents(e)
    }

    /// `w_i^k`, with `i` counted from 0.
    pub fn power(i: usize, k: u32) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = k;
        Self::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl Monomial for Exponents {
    fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "w{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl Concat for Exponents {
    fn unit() -> Self {
        Exponents::default()
    }

    fn concat(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let e = (0..n)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0))
            .collect();
        Exponents::new(e)
    }
}

/// Integer polynomials in commuting variables `w₁, w₂, …`.
pub type MultiPoly = Poly<Exponents>;

/// `p(w_i)` for a univariate `p`, with `i` counted from 0.
pub fn in_variable(p: &IntPoly, i: usize) -> MultiPoly {
    MultiPoly::from_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (Exponents::power(i, k as u32), c.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = in_variable(&IntPoly::from_i64s(&[1, 1]), 0);
        let y = in_variable(&IntPoly::from_i64s(&[0, 2]), 1);
        let p = &x * &y;
        assert_eq!(p.to_string(), "2*w1*w2 + 2*w2");
        assert_eq!(&x * &x, in_variable(&IntPoly::from_i64s(&[1, 2, 1]), 0));
        assert_eq!(Exponents::new(vec![0, 0]), Exponents::unit());
    }
}
