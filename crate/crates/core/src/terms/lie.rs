use std::fmt;

use serde::Serialize;

use super::{Label, Shape};
use crate::Generator;

/// A Lie bracket monomial: a planar binary tree with labeled leaves.
///
/// Leaves are numbered 0.. in left-to-right order; internal vertices are
/// numbered 0.. in preorder (the outermost bracket is internal vertex 0).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LieExpr<L: Label = Generator> {
    Leaf(L),
    Bracket(Box<LieExpr<L>>, Box<LieExpr<L>>),
}

impl<L: Label> LieExpr<L> {
    pub fn leaf(l: L) -> Self {
        LieExpr::Leaf(l)
    }

    pub fn bracket(x: LieExpr<L>, y: LieExpr<L>) -> Self {
        LieExpr::Bracket(Box::new(x), Box::new(y))
    }

    /// `[[…[x1,x2],…],xn]`.
    pub fn left_normed(labels: &[L]) -> Option<Self> {
        let (first, rest) = labels.split_first()?;
        Some(rest.iter().fold(LieExpr::Leaf(first.clone()), |acc, l| {
            LieExpr::bracket(acc, LieExpr::Leaf(l.clone()))
        }))
    }

    /// `[x1,[x2,…[x(n-1),xn]]]`.
    pub fn right_normed(labels: &[L]) -> Option<Self> {
        let (last, rest) = labels.split_last()?;
        Some(rest.iter().rev().fold(LieExpr::Leaf(last.clone()), |acc, l| {
            LieExpr::bracket(LieExpr::Leaf(l.clone()), acc)
        }))
    }

    /// Leaf labels from left to right.
    pub fn leaves(&self) -> Vec<L> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<L>) {
        match self {
            LieExpr::Leaf(l) => out.push(l.clone()),
            LieExpr::Bracket(x, y) => {
                x.collect_leaves(out);
                y.collect_leaves(out);
            }
        }
    }

    pub fn internal_count(&self) -> usize {
        match self {
            LieExpr::Leaf(_) => 0,
            LieExpr::Bracket(x, y) => 1 + x.internal_count() + y.internal_count(),
        }
    }

    /// Leaf labels `x1…xn` if this is `[x1,[x2,…[x(n-1),xn]]]` (or a single leaf).
    pub fn right_normed_leaves(&self) -> Option<Vec<L>> {
        let mut out = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                LieExpr::Leaf(l) => {
                    out.push(l.clone());
                    return Some(out);
                }
                LieExpr::Bracket(x, y) => match x.as_ref() {
                    LieExpr::Leaf(l) => {
                        out.push(l.clone());
                        cur = y;
                    }
                    LieExpr::Bracket(..) => return None,
                },
            }
        }
    }

    pub fn map_labels<M: Label>(&self, f: &impl Fn(&L) -> M) -> LieExpr<M> {
        match self {
            LieExpr::Leaf(l) => LieExpr::Leaf(f(l)),
            LieExpr::Bracket(x, y) => LieExpr::bracket(x.map_labels(f), y.map_labels(f)),
        }
    }

    /// Replace the leaf labeled `target` by `replacement` (every occurrence).
    pub fn substitute(&self, target: &L, replacement: &LieExpr<L>) -> LieExpr<L> {
        match self {
            LieExpr::Leaf(l) if l == target => replacement.clone(),
            LieExpr::Leaf(l) => LieExpr::Leaf(l.clone()),
            LieExpr::Bracket(x, y) => {
                LieExpr::bracket(x.substitute(target, replacement), y.substitute(target, replacement))
            }
        }
    }
}

impl<L: Label> Shape for LieExpr<L> {
    type Label = L;

    fn labels(&self) -> Vec<L> {
        self.leaves()
    }
}

impl<L: Label> fmt::Display for LieExpr<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieExpr::Leaf(l) => write!(f, "{l}"),
            LieExpr::Bracket(x, y) => write!(f, "[{x},{y}]"),
        }
    }
}
