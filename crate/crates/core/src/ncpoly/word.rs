use std::cmp::Ordering;
use std::fmt;

/// A monomial type usable as the key of a [`Poly`](super::Poly).
///
/// Terms are rendered grouped by degree, in `Ord` order within a degree.
pub trait Monomial: Clone + Ord + fmt::Debug {
    fn degree(&self) -> usize;

    /// True for the empty word; rendered as the bare coefficient.
    fn is_unit(&self) -> bool;

    /// Render higher-degree terms first.
    const DESCENDING: bool = true;

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

/// Monomials that multiply by concatenation.
pub trait Concat: Monomial {
    fn unit() -> Self;
    fn concat(&self, other: &Self) -> Self;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ab {
    A,
    B,
}

impl Ab {
    pub fn swap(self) -> Self {
        match self {
            Ab::A => Ab::B,
            Ab::B => Ab::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Ab::A => 'a',
            Ab::B => 'b',
        }
    }
}

/// A word over `{a, b}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbWord(Vec<Ab>);

impl AbWord {
    pub fn new(letters: Vec<Ab>) -> Self {
        AbWord(letters)
    }

    pub fn empty() -> Self {
        AbWord(Vec::new())
    }

    pub fn letters(&self) -> &[Ab] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Ab) {
        self.0.push(letter);
    }

    pub fn with(&self, letter: Ab) -> Self {
        let mut w = self.clone();
        w.0.push(letter);
        w
    }

    pub fn slice(&self, start: usize, end: usize) -> Self {
        AbWord(self.0[start..end].to_vec())
    }

    pub fn contains(&self, letter: Ab) -> bool {
        self.0.contains(&letter)
    }

    pub fn bar(&self) -> Self {
        AbWord(self.0.iter().map(|l| l.swap()).collect())
    }

    pub fn reversed(&self) -> Self {
        AbWord(self.0.iter().rev().copied().collect())
    }

    /// Parses a string over `{a, b}`; `"1"` or `""` is the empty word.
    pub fn parse(s: &str) -> Option<Self> {
        if s == "1" {
            return Some(AbWord::empty());
        }
        s.chars()
            .map(|c| match c {
                'a' => Some(Ab::A),
                'b' => Some(Ab::B),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(AbWord)
    }
}

impl Ord for AbWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AbWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for AbWord {
    fn degree(&self) -> usize {
        self.0.len()
    }

    fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl Concat for AbWord {
    fn unit() -> Self {
        AbWord::empty()
    }

    fn concat(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        AbWord(v)
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cd {
    C,
    D,
}

/// A word over `{c, d}` with `deg c = 1` and `deg d = 2`.
///
/// Words are ordered by degree, then by the number of `d`s, then
/// lexicographically by the vector of `c`-exponents between consecutive
/// `d`s. Within a fixed degree this is the order used by the triangular
/// ab-to-cd elimination.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CdWord(Vec<Cd>);

impl CdWord {
    pub fn new(letters: Vec<Cd>) -> Self {
        CdWord(letters)
    }

    pub fn empty() -> Self {
        CdWord(Vec::new())
    }

    pub fn letters(&self) -> &[Cd] {
        &self.0
    }

    pub fn d_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == Cd::D).count()
    }

    /// The exponents `(i_0, ..., i_p)` of `c^{i_0} d c^{i_1} d ... d c^{i_p}`.
    pub fn c_exponents(&self) -> Vec<usize> {
        let mut out = vec![0];
        for l in &self.0 {
            match l {
                Cd::C => *out.last_mut().unwrap() += 1,
                Cd::D => out.push(0),
            }
        }
        out
    }

    pub fn from_c_exponents(exponents: &[usize]) -> Self {
        let mut v = Vec::new();
        for (k, &e) in exponents.iter().enumerate() {
            if k > 0 {
                v.push(Cd::D);
            }
            v.extend(std::iter::repeat_n(Cd::C, e));
        }
        CdWord(v)
    }

    /// The ab-word obtained by `c -> a`, `d -> ba`; it occurs in the
    /// expansion of this word and in no expansion of a larger word of the
    /// same degree.
    pub fn pivot(&self) -> AbWord {
        let mut v = Vec::with_capacity(self.degree());
        for l in &self.0 {
            match l {
                Cd::C => v.push(Ab::A),
                Cd::D => {
                    v.push(Ab::B);
                    v.push(Ab::A);
                }
            }
        }
        AbWord::new(v)
    }

    /// Inverse of [`CdWord::pivot`]: defined on ab-words in which every `b`
    /// is immediately followed by an `a`.
    pub fn from_pivot(w: &AbWord) -> Option<Self> {
        let letters = w.letters();
        let mut v = Vec::new();
        let mut i = 0;
        while i < letters.len() {
            match letters[i] {
                Ab::A => {
                    v.push(Cd::C);
                    i += 1;
                }
                Ab::B => {
                    if letters.get(i + 1) != Some(&Ab::A) {
                        return None;
                    }
                    v.push(Cd::D);
                    i += 2;
                }
            }
        }
        Some(CdWord(v))
    }

    pub fn parse(s: &str) -> Option<Self> {
        if s == "1" {
            return Some(CdWord::empty());
        }
        s.chars()
            .map(|c| match c {
                'c' => Some(Cd::C),
                'd' => Some(Cd::D),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(CdWord)
    }
}

/// Compares two cd-words of equal degree: fewer `d`s first, then the
/// `c`-exponent vectors lexicographically.
///
/// # Panics
/// If the degrees differ.
pub fn cd_word_cmp(u: &CdWord, v: &CdWord) -> Ordering {
    assert_eq!(
        u.degree(),
        v.degree(),
        "cd_word_cmp requires words of equal degree"
    );
    u.d_count()
        .cmp(&v.d_count())
        .then_with(|| u.c_exponents().cmp(&v.c_exponents()))
}

impl Ord for CdWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| cd_word_cmp(self, other))
    }
}

impl PartialOrd for CdWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for CdWord {
    fn degree(&self) -> usize {
        self.0.len() + self.d_count()
    }

    fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            f.write_str(match l {
                Cd::C => "c",
                Cd::D => "d",
            })?;
        }
        Ok(())
    }
}

impl Concat for CdWord {
    fn unit() -> Self {
        CdWord::empty()
    }

    fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        CdWord(v)
    }
}

impl fmt::Display for CdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}

/// Elementary tensor `u ⊗ v` of two ab-words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbPair(pub AbWord, pub AbWord);

impl Monomial for AbPair {
    fn degree(&self) -> usize {
        self.0.len() + self.1.len()
    }

    fn is_unit(&self) -> bool {
        false
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write(f)?;
        f.write_str("⊗")?;
        self.1.write(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(s: &str) -> CdWord {
        CdWord::parse(s).unwrap()
    }

    #[test]
    fn linear_order_examples() {
        assert_eq!(cd_word_cmp(&cd("cc"), &cd("d")), Ordering::Less);
        assert_eq!(cd_word_cmp(&cd("dc"), &cd("cd")), Ordering::Less);
        assert_eq!(cd_word_cmp(&cd("cdc"), &cd("cdc")), Ordering::Equal);
    }

    #[test]
    #[should_panic]
    fn unequal_degrees_panic() {
        cd_word_cmp(&cd("c"), &cd("d"));
    }

    #[test]
    fn pivot_roundtrip() {
        for s in ["1", "c", "d", "cdc", "ddc", "cccd"] {
            let w = cd(s);
            assert_eq!(CdWord::from_pivot(&w.pivot()), Some(w));
        }
        assert_eq!(CdWord::from_pivot(&AbWord::parse("ab").unwrap()), None);
        assert_eq!(CdWord::from_pivot(&AbWord::parse("bb").unwrap()), None);
    }

    #[test]
    fn exponents() {
        assert_eq!(cd("ccdcd").c_exponents(), vec![2, 1, 0]);
        assert_eq!(CdWord::from_c_exponents(&[2, 1, 0]), cd("ccdcd"));
    }
}
