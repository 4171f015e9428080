//! Words over the infinite generating set `x0, x1, x2, ...` and their unique
//! normal forms.
//!
//! A [`Word`] is any finite sequence of signed generators. A [`NormalForm`] is
//! the unique representative
//!
//! ```text
//! x_{i1} x_{i2} ... x_{is} x_{jt}^-1 ... x_{j2}^-1 x_{j1}^-1
//! ```
//!
//! with `i1 <= ... <= is`, `j1 <= ... <= jt`, and the side condition that if
//! both `x_i` and `x_i^-1` occur then `x_{i+1}` or `x_{i+1}^-1` occurs too.

mod parse;
mod rewrite;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use parse::parse_word;
pub use rewrite::{reduce_to_normal_form, reduce_with, Strategy};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("malformed token `{token}` at byte {position}")]
    MalformedToken { token: String, position: usize },

    #[error("negative generator index in token `{token}` at byte {position}")]
    NegativeIndex { token: String, position: usize },

    #[error("zero exponent in token `{token}` at byte {position}")]
    ZeroExponent { token: String, position: usize },

    #[error("exponent out of range in token `{token}` at byte {position}")]
    ExponentOutOfRange { token: String, position: usize },

    #[error("letter x{index} at position {position} is not a standard generator (index must be 0 or 1)")]
    NonStandardLetter { index: u32, position: usize },

    #[error("invalid normal form: {0}")]
    InvalidNormalForm(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One generator occurrence `x_index^(+-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: u32,
    pub sign: Sign,
}

impl Letter {
    pub const fn new(index: u32, sign: Sign) -> Letter {
        Letter { index, sign }
    }

    pub const fn pos(index: u32) -> Letter {
        Letter::new(index, Sign::Plus)
    }

    pub const fn neg(index: u32) -> Letter {
        Letter::new(index, Sign::Minus)
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.index, self.sign.flip())
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "x{}", self.index),
            Sign::Minus => write!(f, "x{}^-1", self.index),
        }
    }
}

/// A finite, possibly unreduced, sequence of letters. The empty word is the
/// identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Cancels adjacent `x_i x_i^-1` and `x_i^-1 x_i` pairs until none remain.
    pub fn freely_reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match out.last() {
                Some(&top) if top.is_inverse_of(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word(out)
    }

    pub fn is_standard(&self) -> bool {
        self.0.iter().all(|l| l.index <= 1)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// Runs of identical letters collapse into one token with an exponent.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let mut first = true;
        let mut rest = &self.0[..];
        while let Some(&head) = rest.first() {
            let run = rest.iter().take_while(|&&l| l == head).count();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let exponent = run as i64 * head.sign.as_i32() as i64;
            if exponent == 1 {
                write!(f, "x{}", head.index)?;
            } else {
                write!(f, "x{}^{}", head.index, exponent)?;
            }
            rest = &rest[run..];
        }
        Ok(())
    }
}

/// The unique normal form of an element of F.
///
/// `pos` holds `i1 <= ... <= is` and `neg` holds `j1 <= ... <= jt`; the element
/// is `x_{i1}...x_{is} x_{jt}^-1...x_{j1}^-1`. Ordering is lexicographic on
/// `(pos, neg)`, which gives sets of elements a deterministic iteration order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    pos: Vec<u32>,
    neg: Vec<u32>,
}

impl NormalForm {
    /// Validates every normal-form invariant.
    pub fn new(pos: Vec<u32>, neg: Vec<u32>) -> Result<NormalForm, WordError> {
        if let Some(reason) = invariant_violation(&pos, &neg) {
            return Err(WordError::InvalidNormalForm(reason));
        }
        Ok(NormalForm { pos, neg })
    }

    pub(crate) fn from_parts_unchecked(pos: Vec<u32>, neg: Vec<u32>) -> NormalForm {
        debug_assert!(invariant_violation(&pos, &neg).is_none());
        NormalForm { pos, neg }
    }

    pub fn identity() -> NormalForm {
        NormalForm::default()
    }

    pub fn generator(letter: Letter) -> NormalForm {
        match letter.sign {
            Sign::Plus => NormalForm { pos: vec![letter.index], neg: vec![] },
            Sign::Minus => NormalForm { pos: vec![], neg: vec![letter.index] },
        }
    }

    pub fn pos(&self) -> &[u32] {
        &self.pos
    }

    pub fn neg(&self) -> &[u32] {
        &self.neg
    }

    pub fn is_identity(&self) -> bool {
        self.pos.is_empty() && self.neg.is_empty()
    }

    /// Number of letters in the normal form.
    pub fn len(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn to_word(&self) -> Word {
        self.pos
            .iter()
            .map(|&i| Letter::pos(i))
            .chain(self.neg.iter().rev().map(|&j| Letter::neg(j)))
            .collect()
    }

    /// Right multiplication by a single letter.
    pub fn mul_letter(&self, letter: Letter) -> NormalForm {
        let mut pos = self.pos.clone();
        let mut neg = self.neg.clone();
        rewrite::push_letter(&mut pos, &mut neg, letter);
        rewrite::repair(&mut pos, &mut neg);
        NormalForm { pos, neg }
    }

    pub fn multiply(&self, other: &NormalForm) -> NormalForm {
        nf_multiply(self, other)
    }

    pub fn inverse(&self) -> NormalForm {
        nf_invert(self)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

impl FromStr for NormalForm {
    type Err = WordError;

    /// Parses any word and reduces it.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(reduce_to_normal_form(&parse_word(s)?))
    }
}

fn invariant_violation(pos: &[u32], neg: &[u32]) -> Option<String> {
    if pos.windows(2).any(|w| w[0] > w[1]) {
        return Some(format!("positive part {pos:?} is not non-decreasing"));
    }
    if neg.windows(2).any(|w| w[0] > w[1]) {
        return Some(format!("negative part {neg:?} is not non-decreasing"));
    }
    for &i in pos {
        if neg.binary_search(&i).is_ok()
            && pos.binary_search(&(i + 1)).is_err()
            && neg.binary_search(&(i + 1)).is_err()
        {
            return Some(format!("x{i} and x{i}^-1 both occur but x{} does not", i + 1));
        }
    }
    None
}

pub fn nf_multiply(a: &NormalForm, b: &NormalForm) -> NormalForm {
    let mut pos = a.pos.clone();
    let mut neg = a.neg.clone();
    for letter in b.to_word().into_letters() {
        rewrite::push_letter(&mut pos, &mut neg, letter);
        rewrite::repair(&mut pos, &mut neg);
    }
    NormalForm { pos, neg }
}

/// The side condition is symmetric in the two halves, so swapping them is
/// already a normal form.
pub fn nf_invert(a: &NormalForm) -> NormalForm {
    NormalForm { pos: a.neg.clone(), neg: a.pos.clone() }
}

/// Rewrites every `x_n` with `n >= 2` as `x0^-(n-1) x1 x0^(n-1)` and freely
/// reduces. The result is not geodesic in general.
pub fn to_standard_word(a: &NormalForm) -> Word {
    let mut letters = Vec::new();
    for l in a.to_word().into_letters() {
        if l.index <= 1 {
            letters.push(l);
            continue;
        }
        let conj = l.index - 1;
        letters.extend(std::iter::repeat_n(Letter::neg(0), conj as usize));
        letters.push(Letter::new(1, l.sign));
        letters.extend(std::iter::repeat_n(Letter::pos(0), conj as usize));
    }
    Word(letters).freely_reduced()
}

pub fn from_standard_word(w: &Word) -> Result<NormalForm, WordError> {
    if let Some((position, l)) = w.letters().iter().enumerate().find(|(_, l)| l.index > 1) {
        return Err(WordError::NonStandardLetter { index: l.index, position });
    }
    Ok(reduce_to_normal_form(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(pos: &[u32], neg: &[u32]) -> NormalForm {
        NormalForm::new(pos.to_vec(), neg.to_vec()).unwrap()
    }

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn formatting_collapses_runs() {
        assert_eq!(w("x0 x0 x0 x1").to_string(), "x0^3 x1");
        assert_eq!(w("x17^-2 x11^-1").to_string(), "x17^-2 x11^-1");
        assert_eq!(w("x0 x0^-1").to_string(), "x0 x0^-1");
        assert_eq!(Word::identity().to_string(), "e");
    }

    #[test]
    fn normal_form_validation() {
        assert!(NormalForm::new(vec![0, 2], vec![]).is_ok());
        assert!(NormalForm::new(vec![2, 0], vec![]).is_err());
        assert!(NormalForm::new(vec![], vec![3, 1]).is_err());
        // x0 x0^-1 is not reduced
        assert!(NormalForm::new(vec![0], vec![0]).is_err());
        // x0 x1^-1 x0^-1 is fine: x1 occurs
        assert!(NormalForm::new(vec![0], vec![0, 1]).is_ok());
        // x0 x2 x2^-1 x0^-1: 2 in both halves without x3
        assert!(NormalForm::new(vec![0, 2], vec![0, 2]).is_err());
    }

    #[test]
    fn multiply_examples() {
        // x3 x1 = x1 x4
        assert_eq!(nf_multiply(&nf(&[3], &[]), &nf(&[1], &[])), nf(&[1, 4], &[]));
        let a = nf(&[0, 2], &[]);
        assert!(nf_multiply(&a, &nf(&[], &[0, 2])).is_identity());
        let g = nf(&[0, 1], &[]);
        assert_eq!(nf_multiply(&NormalForm::identity(), &g), g);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(nf_invert(&nf(&[0, 2], &[1])), nf(&[1], &[0, 2]));
        assert!(nf_invert(&NormalForm::identity()).is_identity());
        assert_eq!(nf_invert(&nf(&[], &[0])), nf(&[0], &[]));
        assert_eq!(nf(&[1], &[0, 2]).to_string(), "x1 x2^-1 x0^-1");
    }

    #[test]
    fn standard_word_examples() {
        assert_eq!(to_standard_word(&nf(&[2], &[])), w("x0^-1 x1 x0"));
        assert_eq!(to_standard_word(&nf(&[0], &[])), w("x0"));
        assert_eq!(to_standard_word(&nf(&[3], &[])), w("x0^-1 x0^-1 x1 x0 x0"));
        assert_eq!(from_standard_word(&w("x0^-1 x1 x0")).unwrap(), nf(&[2], &[]));
        assert!(from_standard_word(&Word::identity()).unwrap().is_identity());
        assert_eq!(from_standard_word(&w("x0 x1")).unwrap(), nf(&[0, 1], &[]));
        assert_eq!(
            from_standard_word(&w("x0 x2")),
            Err(WordError::NonStandardLetter { index: 2, position: 1 })
        );
    }

    #[test]
    fn free_reduction_cascades() {
        assert_eq!(w("x0 x1 x1^-1 x0^-1 x2").freely_reduced(), w("x2"));
    }

    #[test]
    fn mul_letter_matches_generator_product() {
        let g = nf(&[0, 0, 3], &[1, 5]);
        for i in 0..6 {
            for l in [Letter::pos(i), Letter::neg(i)] {
                assert_eq!(g.mul_letter(l), nf_multiply(&g, &NormalForm::generator(l)));
            }
        }
    }
}
