use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::{factorial, Label, RootedTree, Shape};
use crate::{Error, Generator, Result};

/// Unvalidated vertex-labeled digraph, as read from input or built by an
/// operation before canonicalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph<L: Label = Generator> {
    pub labels: Vec<L>,
    pub edges: Vec<(usize, usize)>,
}

/// A vertex-labeled oriented tree: connected, acyclic as an undirected graph,
/// every edge carrying a direction.
///
/// Stored in canonical form: vertex labels sorted, and among all vertex
/// orders with sorted labels the one whose sorted edge list is
/// lexicographically smallest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrientedGraph<L: Label = Generator> {
    labels: Vec<L>,
    edges: Vec<(usize, usize)>,
}

impl<L: Label> LabeledDigraph<L> {
    pub fn new(labels: Vec<L>, edges: Vec<(usize, usize)>) -> Self {
        LabeledDigraph { labels, edges }
    }

    /// Checks the oriented-tree invariant without canonicalizing.
    pub fn validate(&self) -> Result<()> {
        let n = self.labels.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut uf = UnionFind::new(n);
        for &(s, t) in &self.edges {
            if s >= n || t >= n {
                return Err(Error::EdgeOutOfRange(s, t));
            }
            if s == t {
                return Err(Error::SelfLoop(s, t));
            }
            if !uf.union(s, t) {
                return Err(Error::Cyclic);
            }
        }
        if self.edges.len() + 1 != n {
            return Err(Error::Disconnected);
        }
        Ok(())
    }
}

/// Canonical representative of a labeled oriented tree.
///
/// Exhaustive minimization over the vertex orders that keep labels sorted
/// (only vertices sharing a label are permuted). Rejects input that is not an
/// oriented tree.
pub fn canonicalize_graph<L: Label>(g: &LabeledDigraph<L>) -> Result<OrientedGraph<L>> {
    g.validate()?;
    Ok(canonicalize_unchecked(&g.labels, &g.edges))
}

pub(crate) fn canonicalize_unchecked<L: Label>(labels: &[L], edges: &[(usize, usize)]) -> OrientedGraph<L> {
    let n = labels.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
    let sorted_labels: Vec<L> = order.iter().map(|&v| labels[v].clone()).collect();

    // class_start[p]: first position holding the same label as position p
    let mut class_start = vec![0; n];
    for p in 1..n {
        class_start[p] = if sorted_labels[p] == sorted_labels[p - 1] {
            class_start[p - 1]
        } else {
            p
        };
    }

    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut new_index = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut scratch = Vec::with_capacity(edges.len());
    search(
        0,
        &order,
        &class_start,
        edges,
        &mut new_index,
        &mut used,
        &mut scratch,
        &mut best,
    );
    OrientedGraph {
        labels: sorted_labels,
        edges: best.unwrap_or_default(),
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    pos: usize,
    order: &[usize],
    class_start: &[usize],
    edges: &[(usize, usize)],
    new_index: &mut [usize],
    used: &mut [bool],
    scratch: &mut Vec<(usize, usize)>,
    best: &mut Option<Vec<(usize, usize)>>,
) {
    let n = order.len();
    if pos == n {
        scratch.clear();
        scratch.extend(edges.iter().map(|&(s, t)| (new_index[s], new_index[t])));
        scratch.sort_unstable();
        if best.as_ref().is_none_or(|b| scratch.as_slice() < b.as_slice()) {
            *best = Some(scratch.clone());
        }
        return;
    }
    // candidates: old vertices carrying this position's label (the class in `order`)
    let start = class_start[pos];
    let mut end = pos + 1;
    while end < n && class_start[end] == start {
        end += 1;
    }
    for &v in &order[start..end] {
        if used[v] {
            continue;
        }
        used[v] = true;
        new_index[v] = pos;
        search(pos + 1, order, class_start, edges, new_index, used, scratch, best);
        used[v] = false;
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

impl<L: Label> OrientedGraph<L> {
    pub fn new(labels: Vec<L>, edges: Vec<(usize, usize)>) -> Result<Self> {
        canonicalize_graph(&LabeledDigraph::new(labels, edges))
    }

    pub fn single(label: L) -> Self {
        OrientedGraph {
            labels: vec![label],
            edges: Vec::new(),
        }
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn to_digraph(&self) -> LabeledDigraph<L> {
        LabeledDigraph::new(self.labels.clone(), self.edges.clone())
    }

    /// Number of label- and orientation-preserving automorphisms. Every
    /// automorphism fixes a center vertex, so this is the count for the tree
    /// rooted there.
    pub fn automorphism_count(&self) -> BigInt {
        let n = self.vertex_count();
        let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
        for &(s, t) in &self.edges {
            adj[s].push((t, true));
            adj[t].push((s, false));
        }
        // peel leaves until one or two vertices remain
        let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &(u, _) in &adj[v] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
            layer = next;
        }
        fn rooted<L: Label>(
            v: usize,
            from: Option<usize>,
            labels: &[L],
            adj: &[Vec<(usize, bool)>],
        ) -> (String, BigInt) {
            let mut kids: Vec<(String, BigInt)> = adj[v]
                .iter()
                .filter(|&&(u, _)| Some(u) != from)
                .map(|&(u, out)| {
                    let (key, count) = rooted(u, Some(v), labels, adj);
                    (format!("{}{key}", if out { '>' } else { '<' }), count)
                })
                .collect();
            kids.sort();
            let mut count = BigInt::one();
            for group in kids.chunk_by(|a, b| a.0 == b.0) {
                count *= factorial(group.len()) * group[0].1.pow(group.len() as u32);
            }
            let keys: Vec<&str> = kids.iter().map(|k| k.0.as_str()).collect();
            (format!("{}({})", labels[v], keys.join(",")), count)
        }
        rooted(layer[0], None, &self.labels, &adj).1
    }

    /// Disjoint union with one extra edge from vertex `from` of `self` to vertex `to` of `other`.
    pub fn join(&self, from: usize, other: &Self, to: usize) -> Self {
        let n = self.vertex_count();
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(s, t)| (s + n, t + n)));
        edges.push((from, to + n));
        canonicalize_unchecked(&labels, &edges)
    }

    /// For every edge, (component containing its source, component containing its target).
    pub fn cut_edges(&self) -> Vec<(Self, Self)> {
        (0..self.edges.len())
            .map(|k| {
                let side = self.component_without_edge(k, self.edges[k].0);
                (self.induced(&side), self.induced(&self.complement(&side)))
            })
            .collect()
    }

    fn complement(&self, side: &[bool]) -> Vec<bool> {
        side.iter().map(|b| !b).collect()
    }

    fn component_without_edge(&self, skip: usize, start: usize) -> Vec<bool> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for (k, &(s, t)) in self.edges.iter().enumerate() {
                if k == skip {
                    continue;
                }
                let w = if s == v {
                    t
                } else if t == v {
                    s
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    fn induced(&self, keep: &[bool]) -> Self {
        let mut index = vec![usize::MAX; self.vertex_count()];
        let mut labels = Vec::new();
        for (v, &k) in keep.iter().enumerate() {
            if k {
                index[v] = labels.len();
                labels.push(self.labels[v].clone());
            }
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(s, t)| keep[s] && keep[t])
            .map(|&(s, t)| (index[s], index[t]))
            .collect();
        canonicalize_unchecked(&labels, &edges)
    }

    /// The vertex every edge points away from, if there is one.
    pub fn root(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for &(_, t) in &self.edges {
            indeg[t] += 1;
        }
        if indeg.iter().any(|&d| d > 1) {
            return None;
        }
        let mut sources = (0..n).filter(|&v| indeg[v] == 0);
        let root = sources.next()?;
        sources.next().is_none().then_some(root)
    }

    /// Forget orientations of a rooted graph, keeping its root.
    pub fn to_rooted_tree(&self) -> Option<RootedTree<L>> {
        let root = self.root()?;
        let mut parents = vec![None; self.vertex_count()];
        for &(s, t) in &self.edges {
            parents[t] = Some(s);
        }
        debug_assert!(parents[root].is_none());
        RootedTree::from_parents(&self.labels, &parents).ok()
    }

    /// Orient every edge of a rooted tree away from its root.
    pub fn from_rooted_tree(t: &RootedTree<L>) -> Self {
        let (labels, parents) = t.preorder();
        let edges: Vec<_> = parents
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v)))
            .collect();
        canonicalize_unchecked(&labels, &edges)
    }

    /// A directed path through the given labels.
    pub fn path(labels: &[L]) -> Option<Self> {
        if labels.is_empty() {
            return None;
        }
        let edges: Vec<_> = (1..labels.len()).map(|i| (i - 1, i)).collect();
        Some(canonicalize_unchecked(labels, &edges))
    }

    pub fn map_labels<M: Label>(&self, f: impl Fn(&L) -> M) -> OrientedGraph<M> {
        let labels: Vec<M> = self.labels.iter().map(f).collect();
        canonicalize_unchecked(&labels, &self.edges)
    }

    /// Same graph with every edge reversed.
    pub fn reversed(&self) -> Self {
        let edges: Vec<_> = self.edges.iter().map(|&(s, t)| (t, s)).collect();
        canonicalize_unchecked(&self.labels, &edges)
    }
}

impl<L: Label> Shape for OrientedGraph<L> {
    type Label = L;

    fn labels(&self) -> Vec<L> {
        self.labels.clone()
    }

    fn weight(&self) -> usize {
        self.labels.len()
    }
}

/// `v1=a,v2=b; v1->v2` with 1-based vertex names in canonical order.
impl<L: Label> fmt::Display for OrientedGraph<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "v{}={}", i + 1, l)?;
        }
        if !self.edges.is_empty() {
            f.write_str("; ")?;
            for (i, (s, t)) in self.edges.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "v{}->v{}", s + 1, t + 1)?;
            }
        }
        Ok(())
    }
}
