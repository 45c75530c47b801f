use std::collections::HashMap;

use num_traits::Zero;
use thiserror::Error;

use super::word::{Ab, AbWord, Cd, CdWord, Monomial};
use super::{AbPoly, CdPoly};

/// An ab-polynomial that is not in the subring generated by `c = a + b`
/// and `d = ab + ba`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a cd-polynomial; residual {residual}")]
pub struct NotInSpan {
    /// Nonzero remainder after triangular elimination. No ab-word in it is
    /// the pivot of a cd-word.
    pub residual: AbPoly,
}

pub fn c() -> CdPoly {
    CdPoly::monomial(CdWord::new(vec![Cd::C]), 1)
}

pub fn d() -> CdPoly {
    CdPoly::monomial(CdWord::new(vec![Cd::D]), 1)
}

/// Expands a single cd-word into ab-words.
pub fn expand_word(w: &CdWord) -> AbPoly {
    let mut out: Vec<Vec<Ab>> = vec![Vec::with_capacity(w.degree())];
    for l in w.letters() {
        let mut next = Vec::with_capacity(out.len() * 2);
        for prefix in out {
            match l {
                Cd::C => {
                    for x in [Ab::A, Ab::B] {
                        let mut p = prefix.clone();
                        p.push(x);
                        next.push(p);
                    }
                }
                Cd::D => {
                    for (x, y) in [(Ab::A, Ab::B), (Ab::B, Ab::A)] {
                        let mut p = prefix.clone();
                        p.push(x);
                        p.push(y);
                        next.push(p);
                    }
                }
            }
        }
        out = next;
    }
    AbPoly::from_terms(out.into_iter().map(|v| (AbWord::new(v), 1)))
}

impl CdPoly {
    /// Substitutes `c -> a + b`, `d -> ab + ba`.
    pub fn expand(&self) -> AbPoly {
        self.linear_map(expand_word)
    }
}

/// Rewrites an ab-polynomial in the cd-basis.
///
/// Each homogeneous component is eliminated separately. At each step the
/// smallest cd-word whose pivot `a^{i_0} ba a^{i_1} ba ⋯ ba a^{i_p}` has a
/// nonzero coefficient in the residual is peeled off with exactly that
/// coefficient. Larger cd-words never contribute to a smaller word's pivot,
/// so the pivot sequence strictly increases and the loop terminates.
pub fn ab_to_cd(p: &AbPoly) -> Result<CdPoly, NotInSpan> {
    let mut result = CdPoly::zero();
    let mut residual = AbPoly::zero();
    for deg in p.degrees() {
        let (part, rest) = eliminate(p.homogeneous_part(deg));
        result += &part;
        residual += &rest;
    }
    if residual.is_zero() {
        Ok(result)
    } else {
        Err(NotInSpan { residual })
    }
}

fn eliminate(mut residual: AbPoly) -> (CdPoly, AbPoly) {
    let mut out = CdPoly::zero();
    let mut cache: HashMap<CdWord, AbPoly> = HashMap::new();
    loop {
        let pivot = residual
            .terms()
            .filter_map(|(w, c)| CdWord::from_pivot(w).map(|u| (u, c.clone())))
            .min_by(|(u, _), (v, _)| u.cmp(v));
        let Some((u, coeff)) = pivot else { break };
        debug_assert!(!coeff.is_zero());
        let expansion = cache.entry(u.clone()).or_insert_with(|| expand_word(&u));
        residual.add_scaled(expansion, &-&coeff);
        out.add_term(u, coeff);
    }
    (out, residual)
}

/// True when `p` lies in `Z<c,d>`.
pub fn is_cd_polynomial(p: &AbPoly) -> bool {
    ab_to_cd(p).is_ok()
}

/// All cd-words of a given degree, in increasing order.
pub fn cd_words_of_degree(n: usize) -> Vec<CdWord> {
    fn go(n: usize, prefix: &mut Vec<Cd>, out: &mut Vec<CdWord>) {
        if n == 0 {
            out.push(CdWord::new(prefix.clone()));
            return;
        }
        prefix.push(Cd::C);
        go(n - 1, prefix, out);
        prefix.pop();
        if n >= 2 {
            prefix.push(Cd::D);
            go(n - 2, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::{parse_ab, parse_cd};

    #[test]
    fn expansion_examples() {
        assert_eq!(c().expand(), parse_ab("a + b").unwrap());
        assert_eq!(d().expand(), parse_ab("ab + ba").unwrap());
        assert_eq!(
            parse_cd("cc - 2*d").unwrap().expand(),
            parse_ab("aa - ab - ba + bb").unwrap()
        );
    }

    #[test]
    fn conversion_examples() {
        assert_eq!(ab_to_cd(&parse_ab("ab + ba").unwrap()).unwrap(), d());
        assert_eq!(
            ab_to_cd(&parse_ab("aa + bb").unwrap()).unwrap(),
            parse_cd("cc - d").unwrap()
        );
        let err = ab_to_cd(&parse_ab("a").unwrap()).unwrap_err();
        assert!(!err.residual.is_zero());
        assert_eq!(
            ab_to_cd(&parse_ab("2*a + 2*b + 3").unwrap()).unwrap(),
            parse_cd("2*c + 3").unwrap()
        );
    }

    #[test]
    fn residual_has_no_pivots() {
        let err = ab_to_cd(&parse_ab("aab + 3*ba - bb").unwrap()).unwrap_err();
        assert!(err
            .residual
            .terms()
            .all(|(w, _)| CdWord::from_pivot(w).is_none()));
    }

    #[test]
    fn every_cd_word_roundtrips() {
        for n in 0..=7 {
            let words = cd_words_of_degree(n);
            for w in &words {
                let back = ab_to_cd(&expand_word(w)).unwrap();
                assert_eq!(back, CdPoly::monomial(w.clone(), 1));
            }
        }
        // Fibonacci counts
        let counts: Vec<usize> = (0..8).map(|n| cd_words_of_degree(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn pivots_only_appear_in_smaller_words() {
        // the triangularity that the elimination relies on
        for n in 1..=7 {
            let words = cd_words_of_degree(n);
            for (i, u) in words.iter().enumerate() {
                let z = u.pivot();
                for v in &words[i + 1..] {
                    assert!(
                        expand_word(v).coeff(&z).is_zero(),
                        "{v} contains pivot of {u}"
                    );
                }
                assert_eq!(expand_word(u).coeff(&z), 1.into());
            }
        }
    }
}
