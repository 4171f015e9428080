//! Semigroup diagrams over `<x | x^2 = x>` stored as a pair of forests.
//!
//! A [`Diagram`] with top forest `T` and bottom forest `B` is the diagram built
//! from the `(x, x^2)`-cells of `T` followed by the mirror image of `B`; the
//! leaves of both forests are the same edges. Its top path is `x^roots(T)` and
//! its bottom path is `x^roots(B)`.
//!
//! A dipole sits wherever leaves `k` and `k+1` are the two children of one
//! caret in both forests. A [`CanonicalDiagram`] has no dipoles and does not
//! end in a common trivial edge (except the identity `.|.`), so each element
//! of F has exactly one.
//!
//! Text format: leaf `.`, caret `(LR)`, forest = trees concatenated,
//! diagram = `top|bottom`. `X0` is `(..)|..`.

mod dot;
mod tree;

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

use crate::words::{Letter, NormalForm, Sign, Word};

pub use dot::diagram_to_dot;
pub use tree::{Forest, Tree};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("a diagram needs a nonempty base word")]
    EmptyBase,

    #[error("top forest has {top} leaves but bottom forest has {bottom}")]
    LeafMismatch { top: usize, bottom: usize },

    #[error("diagram has a dipole at leaf {0}")]
    HasDipole(usize),

    #[error("diagram ends in a common trivial edge")]
    TrailingEdge,

    #[error("cannot parse diagram at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("internal invariant breach: {0}")]
    InvariantBreach(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    top: Forest,
    bottom: Forest,
}

impl Diagram {
    pub fn new(top: Forest, bottom: Forest) -> Result<Diagram, DiagramError> {
        let (t, b) = (top.leaves(), bottom.leaves());
        if t != b {
            return Err(DiagramError::LeafMismatch { top: t, bottom: b });
        }
        Ok(Diagram { top, bottom })
    }

    pub fn top(&self) -> &Forest {
        &self.top
    }

    pub fn bottom(&self) -> &Forest {
        &self.bottom
    }

    pub fn leaves(&self) -> usize {
        self.top.leaves()
    }

    pub fn cells(&self) -> usize {
        cells(self)
    }

    /// Leaf offsets of all dipoles, ascending.
    pub fn dipoles(&self) -> Vec<usize> {
        let bottom = self.bottom.exposed_carets();
        self.top
            .exposed_carets()
            .into_iter()
            .filter(|k| bottom.binary_search(k).is_ok())
            .collect()
    }

    fn ends_in_common_edge(&self) -> bool {
        self.leaves() > 1
            && self.top.trees().last().is_some_and(Tree::is_leaf)
            && self.bottom.trees().last().is_some_and(Tree::is_leaf)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.top, self.bottom)
    }
}

impl FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser { bytes: s.trim().as_bytes(), at: 0 };
        let top = parser.forest()?;
        parser.expect(b'|')?;
        let bottom = parser.forest()?;
        if parser.at != parser.bytes.len() {
            return Err(parser.error("trailing input"));
        }
        Diagram::new(top, bottom)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> DiagramError {
        DiagramError::Parse { position: self.at, message: message.to_string() }
    }

    fn expect(&mut self, b: u8) -> Result<(), DiagramError> {
        if self.bytes.get(self.at) == Some(&b) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", b as char)))
        }
    }

    fn forest(&mut self) -> Result<Forest, DiagramError> {
        let mut trees = Vec::new();
        while matches!(self.bytes.get(self.at), Some(b'.') | Some(b'(')) {
            trees.push(self.tree()?);
        }
        Forest::new(trees).ok_or_else(|| self.error("empty forest"))
    }

    fn tree(&mut self) -> Result<Tree, DiagramError> {
        match self.bytes.get(self.at) {
            Some(b'.') => {
                self.at += 1;
                Ok(Tree::Leaf)
            }
            Some(b'(') => {
                self.at += 1;
                let l = self.tree()?;
                let r = self.tree()?;
                self.expect(b')')?;
                Ok(Tree::caret(l, r))
            }
            _ => Err(self.error("expected `.` or `(`")),
        }
    }
}

/// A reduced diagram that is not a sum of a diagram and an edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalDiagram(Diagram);

impl CanonicalDiagram {
    /// `.|.`, the identity of F.
    pub fn identity() -> CanonicalDiagram {
        let leaf = Forest::from_trees(vec![Tree::Leaf]);
        CanonicalDiagram(Diagram { top: leaf.clone(), bottom: leaf })
    }

    pub fn is_identity(&self) -> bool {
        self.0.top.trees() == [Tree::Leaf] && self.0.bottom.trees() == [Tree::Leaf]
    }

    pub fn as_diagram(&self) -> &Diagram {
        &self.0
    }

    pub fn into_diagram(self) -> Diagram {
        self.0
    }

    pub fn mirror(&self) -> CanonicalDiagram {
        CanonicalDiagram(mirror(&self.0))
    }

    /// Returns the first violated canonical-form invariant, if any.
    pub fn check(d: &Diagram) -> Result<(), DiagramError> {
        if let Some(&k) = d.dipoles().first() {
            return Err(DiagramError::HasDipole(k));
        }
        if d.ends_in_common_edge() {
            return Err(DiagramError::TrailingEdge);
        }
        Ok(())
    }

    /// Structural test for right divisibility by `X_i^sign`, read straight off
    /// the forests.
    ///
    /// `X_i^-1` divides iff root `i` of the bottom forest is a caret. `X_i`
    /// divides iff roots `i` and `i+1` of the bottom forest are single leaves
    /// that form an exposed caret of the top forest.
    pub fn has_right_divisor(&self, index: u32, sign: Sign) -> bool {
        let i = index as usize;
        let bottom = self.0.bottom.trees();
        match sign {
            Sign::Minus => bottom.get(i).is_some_and(|t| !t.is_leaf()),
            Sign::Plus => {
                if i + 1 >= bottom.len() || !bottom[i].is_leaf() || !bottom[i + 1].is_leaf() {
                    return false;
                }
                let k = self.0.bottom.root_offset(i);
                self.0.top.exposed_carets().binary_search(&k).is_ok()
            }
        }
    }
}

impl Deref for CanonicalDiagram {
    type Target = Diagram;

    fn deref(&self) -> &Diagram {
        &self.0
    }
}

impl TryFrom<Diagram> for CanonicalDiagram {
    type Error = DiagramError;

    fn try_from(d: Diagram) -> Result<Self, Self::Error> {
        CanonicalDiagram::check(&d)?;
        Ok(CanonicalDiagram(d))
    }
}

impl FromStr for CanonicalDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<Diagram>()?.try_into()
    }
}

impl fmt::Display for CanonicalDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `eps(x^k)`: `k` trivial trees on both sides, no cells.
pub fn epsilon(k: usize) -> Result<Diagram, DiagramError> {
    let f = Forest::trivial(k).ok_or(DiagramError::EmptyBase)?;
    Ok(Diagram { top: f.clone(), bottom: f })
}

/// The atomic diagram `X_i` (sign `+`) or its mirror image `X_i^-1`.
pub fn atomic(index: u32, sign: Sign) -> CanonicalDiagram {
    let i = index as usize;
    let mut top = vec![Tree::Leaf; i];
    top.push(Tree::cell());
    let top = Forest::from_trees(top);
    let bottom = Forest::from_trees(vec![Tree::Leaf; i + 2]);
    let d = Diagram { top, bottom };
    match sign {
        Sign::Plus => CanonicalDiagram(d),
        Sign::Minus => CanonicalDiagram(mirror(&d)),
    }
}

pub fn mirror(d: &Diagram) -> Diagram {
    Diagram { top: d.bottom.clone(), bottom: d.top.clone() }
}

/// Places `d2` to the right of `d1`.
pub fn sum(d1: &Diagram, d2: &Diagram) -> Diagram {
    let mut top = d1.top.clone();
    top.trees_mut().extend_from_slice(d2.top.trees());
    let mut bottom = d1.bottom.clone();
    bottom.trees_mut().extend_from_slice(d2.bottom.trees());
    Diagram { top, bottom }
}

pub fn cells(d: &Diagram) -> usize {
    d.top.carets() + d.bottom.carets()
}

/// Order in which [`reduce_dipoles_in_order`] cancels dipoles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CancelOrder {
    LeftFirst,
    RightFirst,
}

pub fn reduce_dipoles(d: &Diagram) -> Diagram {
    reduce_dipoles_in_order(d, CancelOrder::LeftFirst)
}

/// Cancels dipoles one at a time until none remain. The result does not
/// depend on the order.
pub fn reduce_dipoles_in_order(d: &Diagram, order: CancelOrder) -> Diagram {
    let mut d = d.clone();
    loop {
        let dipoles = d.dipoles();
        let next = match order {
            CancelOrder::LeftFirst => dipoles.first(),
            CancelOrder::RightFirst => dipoles.last(),
        };
        let Some(&k) = next else {
            return d;
        };
        let removed = d.top.collapse_at(k) && d.bottom.collapse_at(k);
        debug_assert!(removed);
    }
}

/// Drops the trailing common trivial edges of a dipole-free diagram.
pub fn canonicalize(d: &Diagram) -> Result<CanonicalDiagram, DiagramError> {
    if let Some(&k) = d.dipoles().first() {
        return Err(DiagramError::HasDipole(k));
    }
    Ok(trim(d.clone()))
}

fn trim(mut d: Diagram) -> CanonicalDiagram {
    while d.ends_in_common_edge() {
        d.top.trees_mut().pop();
        d.bottom.trees_mut().pop();
    }
    CanonicalDiagram(d)
}

/// The product `d1 ∘ d2` in F: pad the shorter interface with trivial edges,
/// glue along the common refinement of `bottom(d1)` and `top(d2)`, cancel
/// dipoles and trim.
pub fn concat_product(d1: &Diagram, d2: &Diagram) -> CanonicalDiagram {
    let (mut top, mut upper) = (d1.top.clone(), d1.bottom.clone());
    let (mut lower, mut bottom) = (d2.top.clone(), d2.bottom.clone());
    let (q, s) = (upper.roots(), lower.roots());
    if q < s {
        top.pad(s - q);
        upper.pad(s - q);
    } else if s < q {
        lower.pad(q - s);
        bottom.pad(q - s);
    }

    let mut upper_ext = Vec::new();
    let mut lower_ext = Vec::new();
    for (u, l) in upper.trees().iter().zip(lower.trees()) {
        let refined = u.union(l);
        u.extension_into(&refined, &mut upper_ext);
        l.extension_into(&refined, &mut lower_ext);
    }
    let glued = Diagram { top: top.graft(upper_ext), bottom: bottom.graft(lower_ext) };
    debug_assert_eq!(glued.top.leaves(), glued.bottom.leaves());
    trim(reduce_dipoles(&glued))
}

/// Product of the atomic diagrams of the letters of `w`.
pub fn word_to_diagram(w: &Word) -> CanonicalDiagram {
    w.letters().iter().fold(CanonicalDiagram::identity(), |acc, l| {
        concat_product(&acc, &atomic(l.index, l.sign))
    })
}

/// `X_{i1} ∘ ... ∘ X_{is} ∘ X_{jt}^-1 ∘ ... ∘ X_{j1}^-1`.
pub fn nf_to_diagram(a: &NormalForm) -> CanonicalDiagram {
    word_to_diagram(&a.to_word())
}

/// Recovers the normal form by peeling atomic right divisors: negative ones
/// with the smallest index first, then positive ones with the largest index.
pub fn diagram_to_nf(d: &CanonicalDiagram) -> Result<NormalForm, DiagramError> {
    let mut current = d.clone();
    let mut neg = Vec::new();
    while let Some(j) = (0..current.bottom.roots() as u32).find(|&j| current.has_right_divisor(j, Sign::Minus)) {
        current = peel(&current, Letter::neg(j))?;
        neg.push(j);
    }
    let mut pos = Vec::new();
    while let Some(i) = (0..current.bottom.roots() as u32).rev().find(|&i| current.has_right_divisor(i, Sign::Plus)) {
        current = peel(&current, Letter::pos(i))?;
        pos.push(i);
    }
    if !current.is_identity() {
        return Err(DiagramError::InvariantBreach(format!(
            "no atomic right divisor found for nontrivial diagram {current}"
        )));
    }
    pos.reverse();
    NormalForm::new(pos, neg).map_err(|e| DiagramError::InvariantBreach(e.to_string()))
}

fn peel(d: &CanonicalDiagram, divisor: Letter) -> Result<CanonicalDiagram, DiagramError> {
    let inverse = divisor.inverse();
    let next = concat_product(d, &atomic(inverse.index, inverse.sign));
    if next.cells() + 1 != d.cells() {
        return Err(DiagramError::InvariantBreach(format!(
            "peeling {divisor} from {d} did not remove a cell"
        )));
    }
    Ok(next)
}
