//! Reduction of words to normal form.
//!
//! The defining relations `x_j x_i = x_i x_{j+1}` (i < j) are oriented so that
//! positive letters move left and sort upward while negative letters move
//! right and sort downward:
//!
//! ```text
//! x_j    x_i     -> x_i      x_{j+1}      (i < j)
//! x_i^-1 x_j^-1  -> x_{j+1}^-1 x_i^-1     (i < j)
//! x_j^-1 x_i     -> x_i      x_{j+1}^-1   (i < j)
//! x_i^-1 x_j     -> x_{j+1}  x_i^-1       (i < j)
//! x_i x_i^-1 -> e,  x_i^-1 x_i -> e
//! x_i u x_i^-1   -> u'   (every letter of u has index >= i+2; u' is u with indices lowered by one)
//! ```
//!
//! Irreducible words under these rules are exactly the normal forms.

use super::{Letter, NormalForm, Sign, Word};

/// Order in which redexes are contracted. All strategies reach the same
/// normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Feed letters one at a time into a running normal form.
    Incremental,
    /// Always contract the redex that starts leftmost.
    Leftmost,
    /// Always contract the redex that starts rightmost.
    Rightmost,
}

pub fn reduce_to_normal_form(w: &Word) -> NormalForm {
    reduce_with(w, Strategy::Incremental)
}

pub fn reduce_with(w: &Word, strategy: Strategy) -> NormalForm {
    match strategy {
        Strategy::Incremental => {
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for &l in w.letters() {
                push_letter(&mut pos, &mut neg, l);
                repair(&mut pos, &mut neg);
            }
            NormalForm::from_parts_unchecked(pos, neg)
        }
        Strategy::Leftmost => rewrite_to_fixpoint(w.letters().to_vec(), false),
        Strategy::Rightmost => rewrite_to_fixpoint(w.letters().to_vec(), true),
    }
}

/// Appends `letter` on the right of the semi-normal form `(pos, neg)` and
/// restores sortedness. `neg` is stored ascending; its first entry is the
/// rightmost letter of the word.
pub(crate) fn push_letter(pos: &mut Vec<u32>, neg: &mut Vec<u32>, letter: Letter) {
    let mut k = letter.index;
    match letter.sign {
        Sign::Plus => {
            let mut at = 0;
            while at < neg.len() {
                let j = neg[at];
                if j == k {
                    neg.remove(at);
                    return;
                }
                if j < k {
                    k += 1;
                } else {
                    neg[at] = j + 1;
                }
                at += 1;
            }
            let at = pos.partition_point(|&p| p <= k);
            for p in &mut pos[at..] {
                *p += 1;
            }
            pos.insert(at, k);
        }
        Sign::Minus => {
            let mut at = 0;
            while at < neg.len() && neg[at] < k {
                k += 1;
                at += 1;
            }
            neg.insert(at, k);
        }
    }
}

/// Removes `x_i ... x_i^-1` pairs that violate the side condition until the
/// semi-normal form `(pos, neg)` is a normal form.
pub(crate) fn repair(pos: &mut Vec<u32>, neg: &mut Vec<u32>) {
    while let Some(i) = find_violation(pos, neg) {
        let last = pos.partition_point(|&p| p <= i) - 1;
        pos.remove(last);
        let at = neg.partition_point(|&j| j < i);
        neg.remove(at);
        for v in pos.iter_mut().chain(neg.iter_mut()) {
            if *v > i {
                *v -= 1;
            }
        }
    }
}

fn find_violation(pos: &[u32], neg: &[u32]) -> Option<u32> {
    let contains = |s: &[u32], v: u32| s.binary_search(&v).is_ok();
    let mut prev = None;
    for &i in pos.iter().rev() {
        if prev == Some(i) {
            continue;
        }
        prev = Some(i);
        if contains(neg, i) && !contains(pos, i + 1) && !contains(neg, i + 1) {
            return Some(i);
        }
    }
    None
}

enum Redex {
    /// Replace the pair at `at` by these letters (possibly none).
    Pair { at: usize, replacement: Vec<Letter> },
    /// Delete positions `start` and `end`, lowering every index strictly
    /// between them by one.
    Conjugate { start: usize, end: usize },
}

fn rewrite_to_fixpoint(mut letters: Vec<Letter>, from_right: bool) -> NormalForm {
    while let Some(redex) = find_redex(&letters, from_right) {
        match redex {
            Redex::Pair { at, replacement } => {
                letters.splice(at..at + 2, replacement);
            }
            Redex::Conjugate { start, end } => {
                for l in &mut letters[start + 1..end] {
                    l.index -= 1;
                }
                letters.remove(end);
                letters.remove(start);
            }
        }
    }
    let split = letters.iter().position(|l| l.sign == Sign::Minus).unwrap_or(letters.len());
    let pos = letters[..split].iter().map(|l| l.index).collect();
    let neg = letters[split..].iter().rev().map(|l| l.index).collect();
    NormalForm::from_parts_unchecked(pos, neg)
}

fn find_redex(letters: &[Letter], from_right: bool) -> Option<Redex> {
    let n = letters.len();
    let mut starts: Box<dyn Iterator<Item = usize>> =
        if from_right { Box::new((0..n).rev()) } else { Box::new(0..n) };
    starts.find_map(|at| redex_at(letters, at))
}

fn redex_at(letters: &[Letter], at: usize) -> Option<Redex> {
    let a = letters[at];
    if let Some(&b) = letters.get(at + 1) {
        if let Some(replacement) = pair_rule(a, b) {
            return Some(Redex::Pair { at, replacement });
        }
    }
    if a.sign == Sign::Plus {
        for (offset, &l) in letters[at + 1..].iter().enumerate() {
            if l == a.inverse() {
                return Some(Redex::Conjugate { start: at, end: at + 1 + offset });
            }
            if l.index < a.index + 2 {
                break;
            }
        }
    }
    None
}

fn pair_rule(a: Letter, b: Letter) -> Option<Vec<Letter>> {
    use Sign::{Minus, Plus};
    if a.is_inverse_of(b) {
        return Some(Vec::new());
    }
    let (i, j) = (a.index, b.index);
    match (a.sign, b.sign) {
        (Plus, Plus) if j < i => Some(vec![Letter::pos(j), Letter::pos(i + 1)]),
        (Minus, Minus) if i < j => Some(vec![Letter::neg(j + 1), Letter::neg(i)]),
        (Minus, Plus) if j < i => Some(vec![Letter::pos(j), Letter::neg(i + 1)]),
        (Minus, Plus) if i < j => Some(vec![Letter::pos(j + 1), Letter::neg(i)]),
        _ => None,
    }
}
