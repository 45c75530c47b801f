//! Parser for the polynomial text form: `2*cc + 3`, `-d`, `cc - d`, `0`.
//!
//! A term is an integer, a word, or `integer*word`. `1` alone is the empty
//! word. Whitespace is ignored.

use num_bigint::BigInt;
use thiserror::Error;

use super::poly::Poly;
use super::word::{AbWord, CdWord, Monomial};
use super::{AbPoly, CdPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {0:?} at offset {1}")]
    Unexpected(char, usize),
    #[error("invalid word {0:?}")]
    BadWord(String),
}

pub fn parse_poly<W: Monomial>(
    input: &str,
    word: impl Fn(&str) -> Option<W>,
) -> Result<Poly<W>, ParseError> {
    let chars: Vec<(usize, char)> = input
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut out = Poly::zero();
    let mut i = 0;
    let mut first = true;
    while i < chars.len() {
        let mut negative = false;
        match chars[i].1 {
            '+' if !first => i += 1,
            '-' => {
                negative = true;
                i += 1;
            }
            _ if first => {}
            c => return Err(ParseError::Unexpected(c, chars[i].0)),
        }
        first = false;

        let start = i;
        while i < chars.len() && chars[i].1.is_ascii_digit() {
            i += 1;
        }
        let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
        let has_star = i < chars.len() && chars[i].1 == '*';
        if has_star {
            i += 1;
        }
        let wstart = i;
        while i < chars.len() && chars[i].1.is_ascii_alphabetic() {
            i += 1;
        }
        let letters: String = chars[wstart..i].iter().map(|(_, c)| c).collect();

        let (coeff, w) = match (digits.is_empty(), letters.is_empty()) {
            (true, true) => {
                let (off, c) = chars.get(i).copied().unwrap_or((input.len(), ' '));
                return Err(ParseError::Unexpected(c, off));
            }
            (false, true) if has_star => {
                let (off, c) = chars.get(i).copied().unwrap_or((input.len(), ' '));
                return Err(ParseError::Unexpected(c, off));
            }
            (false, true) => (digits.parse::<BigInt>().unwrap(), word("1")),
            (true, false) => (BigInt::from(1), word(&letters)),
            (false, false) => {
                if !has_star {
                    return Err(ParseError::Unexpected(chars[wstart].1, chars[wstart].0));
                }
                (digits.parse::<BigInt>().unwrap(), word(&letters))
            }
        };
        let w = w.ok_or_else(|| ParseError::BadWord(letters.clone()))?;
        out.add_term(w, if negative { -coeff } else { coeff });
    }
    Ok(out)
}

pub fn parse_ab(input: &str) -> Result<AbPoly, ParseError> {
    parse_poly(input, AbWord::parse)
}

pub fn parse_cd(input: &str) -> Result<CdPoly, ParseError> {
    parse_poly(input, CdWord::parse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn render_examples() {
        assert_eq!(parse_cd("3 + 2*cc").unwrap().to_string(), "2*cc + 3");
        assert_eq!(parse_cd("5*d").unwrap().to_string(), "5*d");
        assert_eq!(parse_cd("cc - d").unwrap().to_string(), "cc - d");
        assert_eq!(parse_cd("0").unwrap().to_string(), "0");
        assert_eq!(parse_cd("-d + 1").unwrap().to_string(), "-d + 1");
        assert_eq!(parse_cd("1 + cc").unwrap(), parse_cd("cc + 1").unwrap());
        assert_eq!(
            parse_ab("2*a + 2*b + 3").unwrap().to_string(),
            "2*a + 2*b + 3"
        );
    }

    #[test]
    fn zero_terms_cancel() {
        assert!(parse_ab("ab - ab").unwrap().is_zero());
        assert!(parse_ab("0").unwrap().is_zero());
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(parse_cd(""), Err(ParseError::Empty));
        assert!(parse_cd("2*").is_err());
        assert!(parse_cd("2c").is_err());
        assert!(matches!(parse_cd("ab"), Err(ParseError::BadWord(_))));
        assert!(parse_cd("c + + d").is_err());
    }

    fn cd_poly() -> impl Strategy<Value = CdPoly> {
        prop::collection::vec(("[cd]{0,5}", -20i64..20), 0..6).prop_map(|terms| {
            CdPoly::from_terms(
                terms
                    .into_iter()
                    .map(|(w, c)| (CdWord::parse(&w).unwrap(), c)),
            )
        })
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(p in cd_poly()) {
            prop_assert_eq!(parse_cd(&p.to_string()).unwrap(), p);
        }
    }
}
