use std::fmt;

/// An ordered binary tree. Each caret is one `(x, x^2)`-cell of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Caret(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn caret(left: Tree, right: Tree) -> Tree {
        Tree::Caret(Box::new(left), Box::new(right))
    }

    /// A single caret over two leaves.
    pub fn cell() -> Tree {
        Tree::caret(Tree::Leaf, Tree::Leaf)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Caret(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn carets(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Caret(l, r) => 1 + l.carets() + r.carets(),
        }
    }

    /// Smallest tree containing every caret of both trees.
    pub(crate) fn union(&self, other: &Tree) -> Tree {
        match (self, other) {
            (Tree::Leaf, t) | (t, Tree::Leaf) => t.clone(),
            (Tree::Caret(a, b), Tree::Caret(c, d)) => Tree::caret(a.union(c), b.union(d)),
        }
    }

    /// For `refined` containing `self`, pushes the subtree of `refined` that
    /// hangs below each leaf of `self`, left to right.
    pub(crate) fn extension_into(&self, refined: &Tree, out: &mut Vec<Tree>) {
        match (self, refined) {
            (Tree::Leaf, t) => out.push(t.clone()),
            (Tree::Caret(a, b), Tree::Caret(c, d)) => {
                a.extension_into(c, out);
                b.extension_into(d, out);
            }
            (Tree::Caret(..), Tree::Leaf) => unreachable!("refinement lost a caret"),
        }
    }

    /// Replaces every leaf, left to right, with the next tree from `subtrees`.
    pub(crate) fn graft(&self, subtrees: &mut impl Iterator<Item = Tree>) -> Tree {
        match self {
            Tree::Leaf => subtrees.next().expect("graft: too few subtrees"),
            Tree::Caret(l, r) => {
                let l = l.graft(subtrees);
                let r = r.graft(subtrees);
                Tree::caret(l, r)
            }
        }
    }

    /// Leaf offsets `k` at which a caret has leaves `k` and `k+1` as its
    /// children.
    pub(crate) fn exposed_carets(&self, offset: usize, out: &mut Vec<usize>) {
        if let Tree::Caret(l, r) = self {
            if l.is_leaf() && r.is_leaf() {
                out.push(offset);
            } else {
                l.exposed_carets(offset, out);
                r.exposed_carets(offset + l.leaves(), out);
            }
        }
    }

    /// Collapses the exposed caret whose left leaf sits at `target`.
    /// Returns false if there is none.
    pub(crate) fn collapse_at(&mut self, offset: usize, target: usize) -> bool {
        let Tree::Caret(l, r) = self else {
            return false;
        };
        if l.is_leaf() && r.is_leaf() {
            if offset == target {
                *self = Tree::Leaf;
                return true;
            }
            return false;
        }
        let left_leaves = l.leaves();
        if target < offset + left_leaves {
            l.collapse_at(offset, target)
        } else {
            r.collapse_at(offset + left_leaves, target)
        }
    }

    /// Spans `(first_leaf, leaf_count)` of every caret, in preorder.
    pub(crate) fn caret_spans(&self, offset: usize, out: &mut Vec<(usize, usize)>) {
        if let Tree::Caret(l, r) = self {
            out.push((offset, self.leaves()));
            l.caret_spans(offset, out);
            r.caret_spans(offset + l.leaves(), out);
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("."),
            Tree::Caret(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// A nonempty ordered sequence of trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Forest(Vec<Tree>);

impl Forest {
    pub fn new(trees: Vec<Tree>) -> Option<Forest> {
        (!trees.is_empty()).then_some(Forest(trees))
    }

    pub(crate) fn from_trees(trees: Vec<Tree>) -> Forest {
        debug_assert!(!trees.is_empty());
        Forest(trees)
    }

    /// `k` single-leaf trees.
    pub fn trivial(k: usize) -> Option<Forest> {
        Forest::new(vec![Tree::Leaf; k])
    }

    pub fn trees(&self) -> &[Tree] {
        &self.0
    }

    pub fn roots(&self) -> usize {
        self.0.len()
    }

    pub fn leaves(&self) -> usize {
        self.0.iter().map(Tree::leaves).sum()
    }

    pub fn carets(&self) -> usize {
        self.0.iter().map(Tree::carets).sum()
    }

    pub(crate) fn trees_mut(&mut self) -> &mut Vec<Tree> {
        &mut self.0
    }

    pub(crate) fn pad(&mut self, extra: usize) {
        self.0.extend(std::iter::repeat_n(Tree::Leaf, extra));
    }

    pub(crate) fn graft(&self, subtrees: Vec<Tree>) -> Forest {
        let mut it = subtrees.into_iter();
        let trees = self.0.iter().map(|t| t.graft(&mut it)).collect();
        debug_assert!(it.next().is_none());
        Forest(trees)
    }

    pub(crate) fn exposed_carets(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut offset = 0;
        for t in &self.0 {
            t.exposed_carets(offset, &mut out);
            offset += t.leaves();
        }
        out
    }

    pub(crate) fn collapse_at(&mut self, target: usize) -> bool {
        let mut offset = 0;
        for t in &mut self.0 {
            let n = t.leaves();
            if target < offset + n {
                return t.collapse_at(offset, target);
            }
            offset += n;
        }
        false
    }

    /// Leaf offset of the first leaf of root `root`.
    pub(crate) fn root_offset(&self, root: usize) -> usize {
        self.0[..root].iter().map(Tree::leaves).sum()
    }

    pub(crate) fn caret_spans(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut offset = 0;
        for t in &self.0 {
            t.caret_spans(offset, &mut out);
            offset += t.leaves();
        }
        out
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|t| t.fmt(f))
    }
}
