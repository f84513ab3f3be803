use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::{factorial, Label, Shape};
use crate::{Error, Generator, Result};

/// A vertex-labeled, rooted, non-planar tree.
///
/// Children are kept sorted, so equal values are exactly the isomorphic
/// labeled rooted trees. Vertices are addressed by their preorder index in
/// this canonical layout (the root is vertex 0).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RootedTree<L: Label = Generator> {
    label: L,
    children: Vec<RootedTree<L>>,
}

impl<L: Label> RootedTree<L> {
    pub fn leaf(label: L) -> Self {
        RootedTree {
            label,
            children: Vec::new(),
        }
    }

    pub fn new(label: L, mut children: Vec<RootedTree<L>>) -> Self {
        children.sort();
        RootedTree { label, children }
    }

    /// The ladder `w1(w2(...(wn)))`.
    pub fn ladder(labels: &[L]) -> Option<Self> {
        let (last, rest) = labels.split_last()?;
        let mut t = RootedTree::leaf(last.clone());
        for l in rest.iter().rev() {
            t = RootedTree {
                label: l.clone(),
                children: vec![t],
            };
        }
        Some(t)
    }

    pub fn label(&self) -> &L {
        &self.label
    }

    pub fn children(&self) -> &[RootedTree<L>] {
        &self.children
    }

    /// Number of label-preserving automorphisms fixing the root.
    pub fn automorphism_count(&self) -> BigInt {
        let mut count = BigInt::one();
        for group in self.children.chunk_by(|a, b| a == b) {
            count *= factorial(group.len()) * group[0].automorphism_count().pow(group.len() as u32);
        }
        count
    }

    /// `label(childkey,…)` with child keys sorted as strings; equal keys
    /// exactly for isomorphic labeled rooted trees.
    pub fn canonical_key(&self) -> String {
        if self.children.is_empty() {
            return self.label.to_string();
        }
        let mut keys: Vec<String> = self.children.iter().map(|c| c.canonical_key()).collect();
        keys.sort();
        format!("{}({})", self.label, keys.join(","))
    }

    /// Labels and parent pointers in preorder; `parents[0]` is `None`.
    pub fn preorder(&self) -> (Vec<L>, Vec<Option<usize>>) {
        fn walk<L: Label>(
            t: &RootedTree<L>,
            parent: Option<usize>,
            labels: &mut Vec<L>,
            parents: &mut Vec<Option<usize>>,
        ) {
            let me = labels.len();
            labels.push(t.label.clone());
            parents.push(parent);
            for c in &t.children {
                walk(c, Some(me), labels, parents);
            }
        }
        let mut labels = Vec::new();
        let mut parents = Vec::new();
        walk(self, None, &mut labels, &mut parents);
        (labels, parents)
    }

    /// Build from labels and parent pointers (any vertex numbering, exactly one root).
    pub fn from_parents(labels: &[L], parents: &[Option<usize>]) -> Result<Self> {
        let n = labels.len();
        if n == 0 || parents.len() != n {
            return Err(Error::EmptyGraph);
        }
        let mut kids = vec![Vec::new(); n];
        let mut root = None;
        for (v, p) in parents.iter().enumerate() {
            match p {
                None if root.is_none() => root = Some(v),
                None => return Err(Error::Disconnected),
                Some(p) if *p >= n => return Err(Error::EdgeOutOfRange(*p, v)),
                Some(p) if *p == v => return Err(Error::SelfLoop(v, v)),
                Some(p) => kids[*p].push(v),
            }
        }
        let root = root.ok_or(Error::Cyclic)?;
        fn build<L: Label>(v: usize, labels: &[L], kids: &[Vec<usize>], seen: &mut usize) -> RootedTree<L> {
            *seen += 1;
            let children = kids[v].iter().map(|&c| build(c, labels, kids, seen)).collect();
            RootedTree::new(labels[v].clone(), children)
        }
        let mut seen = 0;
        let t = build(root, labels, &kids, &mut seen);
        if seen != n {
            // unreached vertices sit on a parent cycle
            return Err(Error::Cyclic);
        }
        Ok(t)
    }

    /// Attach `branch` as a new child of preorder vertex `vertex`.
    pub fn graft_at(&self, vertex: usize, branch: &RootedTree<L>) -> Result<Self> {
        fn go<L: Label>(
            t: &RootedTree<L>,
            target: usize,
            counter: &mut usize,
            branch: &RootedTree<L>,
        ) -> RootedTree<L> {
            let me = *counter;
            *counter += 1;
            let mut children: Vec<_> = t.children.iter().map(|c| go(c, target, counter, branch)).collect();
            if me == target {
                children.push(branch.clone());
            }
            RootedTree::new(t.label.clone(), children)
        }
        let n = self.weight();
        if vertex >= n {
            return Err(Error::VertexOutOfRange { vertex, len: n });
        }
        Ok(go(self, vertex, &mut 0, branch))
    }

    /// One result per vertex `w`: this tree with `branch` attached below `w`.
    pub fn graft_everywhere(&self, branch: &RootedTree<L>) -> Vec<RootedTree<L>> {
        let mut out = Vec::with_capacity(self.weight());
        let mut children = self.children.clone();
        children.push(branch.clone());
        out.push(RootedTree::new(self.label.clone(), children));
        for (i, child) in self.children.iter().enumerate() {
            for grafted in child.graft_everywhere(branch) {
                let mut children = self.children.clone();
                children[i] = grafted;
                out.push(RootedTree::new(self.label.clone(), children));
            }
        }
        out
    }

    /// For every edge, the pair (component containing the root, branch above the edge).
    pub fn cut_edges(&self) -> Vec<(RootedTree<L>, RootedTree<L>)> {
        let mut out = Vec::new();
        for (i, child) in self.children.iter().enumerate() {
            let mut rest = self.children.clone();
            rest.remove(i);
            out.push((RootedTree::new(self.label.clone(), rest), child.clone()));
            for (root_side, branch) in child.cut_edges() {
                let mut children = self.children.clone();
                children[i] = root_side;
                out.push((RootedTree::new(self.label.clone(), children), branch));
            }
        }
        out
    }

    /// Root-to-leaf labels if every vertex has at most one child.
    pub fn ladder_labels(&self) -> Option<Vec<L>> {
        let mut labels = vec![self.label.clone()];
        let mut t = self;
        while let Some(next) = t.children.first() {
            if t.children.len() > 1 {
                return None;
            }
            labels.push(next.label.clone());
            t = next;
        }
        Some(labels)
    }

    pub fn map_labels<M: Label>(&self, f: &impl Fn(&L) -> M) -> RootedTree<M> {
        RootedTree::new(f(&self.label), self.children.iter().map(|c| c.map_labels(f)).collect())
    }

    /// True when no label repeats.
    pub fn is_simple(&self) -> bool {
        self.multidegree().is_multilinear()
    }
}

impl<L: Label> Shape for RootedTree<L> {
    type Label = L;

    fn labels(&self) -> Vec<L> {
        self.preorder().0
    }

    fn weight(&self) -> usize {
        1 + self.children.iter().map(|c| c.weight()).sum::<usize>()
    }
}

impl<L: Label> fmt::Display for RootedTree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
