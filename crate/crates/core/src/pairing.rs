//! The configuration pairing between dual words/trees/graphs and Lie expressions.
//!
//! Four independent algorithms are provided and must agree exactly:
//! reading a coefficient off the expansion, recursing through the cobracket,
//! summing over label-preserving vertex-to-leaf bijections, and (for
//! right-normed brackets against words) a signed shuffle count.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::cobracket::CobracketBasis;
use crate::freealg::{evaluate_bracket, evaluate_dual, mismatch, AlgebraBasis, Element};
use crate::terms::{Label, LieExpr, LinearCombo, OrientedGraph, RootedTree, Scalar, Shape, Side, Word};
use crate::{Error, Generator, Result};

/// Which pairing algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Expand,
    Recursive,
    Sigma,
    RightNormed,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Expand,
        Algorithm::Recursive,
        Algorithm::Sigma,
        Algorithm::RightNormed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Expand => "expand",
            Algorithm::Recursive => "recursive",
            Algorithm::Sigma => "sigma",
            Algorithm::RightNormed => "rightnormed",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown algorithm {s:?}")))
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

// ---------------------------------------------------------------------------
// Lie expression geometry

/// Leaf labels of a Lie expression together with, for every pair of leaf
/// positions, the internal vertex at which their paths to the root meet.
/// Internal vertices are numbered in preorder (root = 0), leaves left to right.
#[derive(Debug, Clone)]
pub struct LieGeometry<L: Label> {
    leaves: Vec<L>,
    meet: Vec<Vec<usize>>,
}

impl<L: Label> LieGeometry<L> {
    pub fn new(l: &LieExpr<L>) -> Self {
        let leaves = l.leaves();
        let n = leaves.len();
        let mut meet = vec![vec![usize::MAX; n]; n];
        let mut next_internal = 0;
        fill_meet(l, 0, &mut next_internal, &mut meet);
        LieGeometry { leaves, meet }
    }

    pub fn leaves(&self) -> &[L] {
        &self.leaves
    }

    pub fn internal_count(&self) -> usize {
        self.leaves.len() - 1
    }

    /// The deepest common ancestor of two distinct leaves.
    pub fn root_of(&self, p: usize, q: usize) -> Result<usize> {
        let n = self.leaves.len();
        for x in [p, q] {
            if x >= n {
                return Err(Error::LeafOutOfRange(x, n));
            }
        }
        if p == q {
            return Err(Error::SameLeaf(p));
        }
        Ok(self.meet[p][q])
    }

    /// `+1` iff the source leaf lies left of the target leaf.
    pub fn sign_of(&self, source: usize, target: usize) -> Result<i64> {
        self.root_of(source, target)?;
        Ok(if source < target { 1 } else { -1 })
    }
}

/// Returns the number of leaves under `l`, whose first leaf has index `first`.
#[allow(clippy::needless_range_loop)]
fn fill_meet<L: Label>(l: &LieExpr<L>, first: usize, next_internal: &mut usize, meet: &mut [Vec<usize>]) -> usize {
    match l {
        LieExpr::Leaf(_) => 1,
        LieExpr::Bracket(x, y) => {
            let id = *next_internal;
            *next_internal += 1;
            let nx = fill_meet(x, first, next_internal, meet);
            let ny = fill_meet(y, first + nx, next_internal, meet);
            for p in first..first + nx {
                for q in first + nx..first + nx + ny {
                    meet[p][q] = id;
                    meet[q][p] = id;
                }
            }
            nx + ny
        }
    }
}

pub fn root_of<L: Label>(l: &LieExpr<L>, p: usize, q: usize) -> Result<usize> {
    LieGeometry::new(l).root_of(p, q)
}

pub fn sign_of<L: Label>(l: &LieExpr<L>, source: usize, target: usize) -> Result<i64> {
    LieGeometry::new(l).sign_of(source, target)
}

// ---------------------------------------------------------------------------
// Expansion pairing

/// `⟨dual, ℓ⟩` for basis inputs: the coefficient of `dual` in the expansion of
/// `ℓ`, times the automorphism count of `dual` (1 for words and for distinct labels).
pub fn pair_expand_basis<B: AlgebraBasis>(dual: &B, l: &LieExpr<B::Label>) -> Scalar {
    if dual.weight() != l.weight() || dual.multidegree() != l.multidegree() {
        return Scalar::zero();
    }
    evaluate_bracket::<B>(l).coefficient_of(dual) * Scalar::from_integer(dual.automorphism_count())
}

/// Bilinear pairing by expansion: the dual evaluated on `p(ℓ)`.
pub fn pair_expand<B: AlgebraBasis>(dual: &LinearCombo<B>, l: &LinearCombo<LieExpr<B::Label>>) -> Scalar {
    let mut total = Scalar::zero();
    for (e, c) in l.iter() {
        let md = e.multidegree();
        if !dual.shapes().any(|s| s.multidegree() == md) {
            continue;
        }
        total += c * evaluate_dual(dual, &evaluate_bracket::<B>(e));
    }
    total
}

// ---------------------------------------------------------------------------
// Recursive pairing

/// Cobracket recursion with memoization over `(shape, subexpression)` pairs.
/// Reuse one instance across many pairings of the same family.
///
/// Shapes, subexpressions and sorted label lists are interned, so memo lookups
/// hash two integers and cuts with the wrong labels are skipped by comparing ids.
pub struct RecursivePairer<B: AlgebraBasis + CobracketBasis> {
    shape_ids: HashMap<B, usize>,
    shapes: Vec<InternedShape<B>>,
    expr_ids: HashMap<LieExpr<B::Label>, usize>,
    exprs: Vec<InternedExpr<B::Label>>,
    label_ids: HashMap<Vec<B::Label>, usize>,
    memo: HashMap<(usize, usize), Scalar>,
}

struct InternedShape<B> {
    shape: B,
    labels: usize,
    /// Cut pairs `(α, β)` as shape ids, filled on first use.
    cuts: Option<Arc<[(usize, usize)]>>,
}

enum InternedExpr<L> {
    Leaf(L),
    Bracket { x: usize, y: usize, labels: usize },
}

impl<B: AlgebraBasis + CobracketBasis> Default for RecursivePairer<B> {
    fn default() -> Self {
        RecursivePairer {
            shape_ids: HashMap::new(),
            shapes: Vec::new(),
            expr_ids: HashMap::new(),
            exprs: Vec::new(),
            label_ids: HashMap::new(),
            memo: HashMap::new(),
        }
    }
}

impl<B: AlgebraBasis + CobracketBasis> RecursivePairer<B> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pair_basis(&mut self, dual: &B, l: &LieExpr<B::Label>) -> Scalar {
        if dual.weight() != l.weight() || dual.multidegree() != l.multidegree() {
            return Scalar::zero();
        }
        let s = self.intern_shape(dual);
        let e = self.intern_expr(l);
        self.go(s, e)
    }

    pub fn pair(&mut self, dual: &LinearCombo<B>, l: &LinearCombo<LieExpr<B::Label>>) -> Scalar {
        let mut total = Scalar::zero();
        for (s, a) in dual.iter() {
            for (e, b) in l.iter() {
                let v = self.pair_basis(s, e);
                if !v.is_zero() {
                    total += a * b * v;
                }
            }
        }
        total
    }

    fn label_id(&mut self, mut labels: Vec<B::Label>) -> usize {
        labels.sort();
        let next = self.label_ids.len();
        *self.label_ids.entry(labels).or_insert(next)
    }

    fn intern_shape(&mut self, s: &B) -> usize {
        if let Some(&id) = self.shape_ids.get(s) {
            return id;
        }
        let labels = self.label_id(s.labels());
        let id = self.shapes.len();
        self.shapes.push(InternedShape {
            shape: s.clone(),
            labels,
            cuts: None,
        });
        self.shape_ids.insert(s.clone(), id);
        id
    }

    fn intern_expr(&mut self, l: &LieExpr<B::Label>) -> usize {
        if let Some(&id) = self.expr_ids.get(l) {
            return id;
        }
        let interned = match l {
            LieExpr::Leaf(g) => InternedExpr::Leaf(g.clone()),
            LieExpr::Bracket(x, y) => {
                let x = self.intern_expr(x);
                let y = self.intern_expr(y);
                InternedExpr::Bracket {
                    x,
                    y,
                    labels: self.label_id(l.leaves()),
                }
            }
        };
        let id = self.exprs.len();
        self.exprs.push(interned);
        self.expr_ids.insert(l.clone(), id);
        id
    }

    fn cuts(&mut self, s: usize) -> Arc<[(usize, usize)]> {
        if let Some(c) = &self.shapes[s].cuts {
            return c.clone();
        }
        let pairs = self.shapes[s].shape.cuts();
        let ids: Arc<[(usize, usize)]> = pairs
            .iter()
            .map(|(a, b)| (self.intern_shape(a), self.intern_shape(b)))
            .collect();
        self.shapes[s].cuts = Some(ids.clone());
        ids
    }

    /// Whether shape `s` can pair nonzero with expression `e` by labels alone.
    fn compatible(&self, s: usize, e: usize) -> bool {
        match &self.exprs[e] {
            InternedExpr::Leaf(g) => {
                let shape = &self.shapes[s].shape;
                shape.weight() == 1 && shape.labels()[0] == *g
            }
            InternedExpr::Bracket { labels, .. } => self.shapes[s].labels == *labels,
        }
    }

    fn go(&mut self, s: usize, e: usize) -> Scalar {
        let (x, y) = match self.exprs[e] {
            InternedExpr::Leaf(_) => {
                return if self.compatible(s, e) {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }
            InternedExpr::Bracket { x, y, .. } => (x, y),
        };
        if let Some(v) = self.memo.get(&(s, e)) {
            return v.clone();
        }
        let mut total = Scalar::zero();
        // ]s*[ = Σ (α ⊗ β − β ⊗ α) over the cuts (α, β)
        for &(alpha, beta) in self.cuts(s).iter() {
            if self.compatible(alpha, x) && self.compatible(beta, y) {
                let left = self.go(alpha, x);
                if !left.is_zero() {
                    total += left * self.go(beta, y);
                }
            }
            if self.compatible(beta, x) && self.compatible(alpha, y) {
                let left = self.go(beta, x);
                if !left.is_zero() {
                    total -= left * self.go(alpha, y);
                }
            }
        }
        self.memo.insert((s, e), total.clone());
        total
    }
}

/// Pairing by recursion through the cobracket.
pub fn pair_recursive<B: AlgebraBasis + CobracketBasis>(
    dual: &LinearCombo<B>,
    l: &LinearCombo<LieExpr<B::Label>>,
) -> Scalar {
    RecursivePairer::new().pair(dual, l)
}

// ---------------------------------------------------------------------------
// Sigma pairing

/// Shapes viewed as labeled vertices with directed edges (parent→child for
/// trees, source→target for graphs, successive letters for words).
pub trait EdgeShape: Shape {
    fn vertex_labels(&self) -> Vec<Self::Label>;
    fn directed_edges(&self) -> Vec<(usize, usize)>;
}

impl<L: Label> EdgeShape for Word<L> {
    /// The ladder of the word, i.e. the transport along `i_prelie`.
    fn vertex_labels(&self) -> Vec<L> {
        self.letters().to_vec()
    }

    fn directed_edges(&self) -> Vec<(usize, usize)> {
        (1..self.len()).map(|i| (i - 1, i)).collect()
    }
}

impl<L: Label> EdgeShape for RootedTree<L> {
    fn vertex_labels(&self) -> Vec<L> {
        self.preorder().0
    }

    fn directed_edges(&self) -> Vec<(usize, usize)> {
        let (_, parents) = self.preorder();
        parents
            .iter()
            .enumerate()
            .filter_map(|(child, p)| p.map(|p| (p, child)))
            .collect()
    }
}

impl<L: Label> EdgeShape for OrientedGraph<L> {
    fn vertex_labels(&self) -> Vec<L> {
        self.labels().to_vec()
    }

    fn directed_edges(&self) -> Vec<(usize, usize)> {
        self.edges().to_vec()
    }
}

/// A bijection from the vertices of a shape to the leaf positions of a Lie expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexLeafBijection {
    leaf_of: Vec<usize>,
}

impl VertexLeafBijection {
    pub fn new(leaf_of: Vec<usize>) -> Result<Self> {
        let n = leaf_of.len();
        let mut seen = vec![false; n];
        for &p in &leaf_of {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotBijective);
            }
        }
        Ok(VertexLeafBijection { leaf_of })
    }

    pub fn leaf_of(&self, vertex: usize) -> usize {
        self.leaf_of[vertex]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.leaf_of
    }

    /// Whether every vertex maps to a leaf carrying the same generator.
    pub fn preserves_labels<L: Label>(&self, vertex_labels: &[L], leaves: &[L]) -> bool {
        self.leaf_of
            .iter()
            .enumerate()
            .all(|(v, &p)| vertex_labels[v] == leaves[p])
    }
}

/// `⟨|R|, |T|⟩_σ`: the product of edge signs if every internal vertex of `T`
/// is hit by some edge, else 0.
pub fn sigma_value<S: EdgeShape>(shape: &S, l: &LieExpr<S::Label>, sigma: &VertexLeafBijection) -> Result<i64> {
    let n = l.weight();
    if shape.weight() != n || sigma.leaf_of.len() != n {
        return Err(Error::LabelCount {
            expected: n.to_string(),
            found: sigma.leaf_of.len(),
        });
    }
    let geo = LieGeometry::new(l);
    Ok(edge_product(&shape.directed_edges(), sigma.as_slice(), &geo))
}

fn edge_product<L: Label>(edges: &[(usize, usize)], leaf_of: &[usize], geo: &LieGeometry<L>) -> i64 {
    let mut hit = vec![false; geo.internal_count()];
    let mut sign = 1;
    for &(s, t) in edges {
        let (p, q) = (leaf_of[s], leaf_of[t]);
        let v = geo.meet[p][q];
        if std::mem::replace(&mut hit[v], true) {
            return 0;
        }
        if p > q {
            sign = -sign;
        }
    }
    if hit.iter().all(|&h| h) {
        sign
    } else {
        0
    }
}

/// Enumerates label-preserving bijections with a nonzero σ-value.
struct SigmaSearch<'a, L: Label> {
    geo: &'a LieGeometry<L>,
    labels: Vec<L>,
    order: Vec<usize>,
    /// For each vertex, the edges (other endpoint, vertex is source) to vertices earlier in `order`.
    back_edges: Vec<Vec<(usize, bool)>>,
    leaf_of: Vec<usize>,
    leaf_used: Vec<bool>,
    hit: Vec<bool>,
}

impl<'a, L: Label> SigmaSearch<'a, L> {
    fn new(labels: Vec<L>, edges: &[(usize, usize)], geo: &'a LieGeometry<L>) -> Self {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(s, t) in edges {
            adj[s].push(t);
            adj[t].push(s);
        }
        // breadth-first order so every vertex after the first closes an edge
        let mut order = vec![0];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut i = 0;
        while i < order.len() {
            for &u in &adj[order[i]] {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
            i += 1;
        }
        let mut rank = vec![0; n];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        let mut back_edges = vec![Vec::new(); n];
        for &(s, t) in edges {
            if rank[s] > rank[t] {
                back_edges[s].push((t, true));
            } else {
                back_edges[t].push((s, false));
            }
        }
        SigmaSearch {
            geo,
            labels,
            order,
            back_edges,
            leaf_of: vec![usize::MAX; n],
            leaf_used: vec![false; n],
            hit: vec![false; n.saturating_sub(1)],
        }
    }

    fn run(&mut self, visit: &mut impl FnMut(&[usize], i64)) {
        self.step(0, 1, visit);
    }

    fn step(&mut self, depth: usize, sign: i64, visit: &mut impl FnMut(&[usize], i64)) {
        if depth == self.order.len() {
            visit(&self.leaf_of, sign);
            return;
        }
        let v = self.order[depth];
        for p in 0..self.leaf_used.len() {
            if self.leaf_used[p] || self.geo.leaves[p] != self.labels[v] {
                continue;
            }
            let mut s = sign;
            let mut marked = Vec::with_capacity(self.back_edges[v].len());
            let mut ok = true;
            for &(u, v_is_source) in &self.back_edges[v] {
                let q = self.leaf_of[u];
                let m = self.geo.meet[p][q];
                if self.hit[m] {
                    ok = false;
                    break;
                }
                self.hit[m] = true;
                marked.push(m);
                let (src, tgt) = if v_is_source { (p, q) } else { (q, p) };
                if src > tgt {
                    s = -s;
                }
            }
            if ok {
                self.leaf_used[p] = true;
                self.leaf_of[v] = p;
                self.step(depth + 1, s, visit);
                self.leaf_used[p] = false;
                self.leaf_of[v] = usize::MAX;
            }
            for m in marked {
                self.hit[m] = false;
            }
        }
    }
}

/// All label-preserving bijections σ with nonzero `⟨|R|,|T|⟩_σ`, with their values.
pub fn sigma_terms<S: EdgeShape>(shape: &S, l: &LieExpr<S::Label>) -> Vec<(VertexLeafBijection, i64)> {
    let mut out = Vec::new();
    if shape.multidegree() != l.multidegree() {
        return out;
    }
    let geo = LieGeometry::new(l);
    let edges = shape.directed_edges();
    let mut search = SigmaSearch::new(shape.vertex_labels(), &edges, &geo);
    search.run(&mut |leaf_of, sign| {
        out.push((
            VertexLeafBijection {
                leaf_of: leaf_of.to_vec(),
            },
            sign,
        ))
    });
    out
}

/// `Σ_σ ⟨|R|,|T|⟩_σ` over label-preserving σ, for basis inputs.
pub fn pair_sigma_basis<S: EdgeShape>(shape: &S, l: &LieExpr<S::Label>) -> Scalar {
    pair_sigma_prepared(shape, &LieGeometry::new(l))
}

/// As [`pair_sigma_basis`] with the Lie geometry computed once by the caller.
pub fn pair_sigma_prepared<S: EdgeShape>(shape: &S, geo: &LieGeometry<S::Label>) -> Scalar {
    let labels = shape.vertex_labels();
    if labels.len() != geo.leaves.len() {
        return Scalar::zero();
    }
    let mut a = labels.clone();
    let mut b = geo.leaves.clone();
    a.sort();
    b.sort();
    if a != b {
        return Scalar::zero();
    }
    let edges = shape.directed_edges();
    let mut total: i64 = 0;
    SigmaSearch::new(labels, &edges, geo).run(&mut |_, sign| total += sign);
    Scalar::from_integer(total.into())
}

/// Bilinear σ-pairing. Words are paired through their ladders (`i_prelie`).
pub fn pair_sigma<S: EdgeShape>(dual: &LinearCombo<S>, l: &LinearCombo<LieExpr<S::Label>>) -> Scalar {
    let mut total = Scalar::zero();
    for (e, b) in l.iter() {
        let geo = LieGeometry::new(e);
        for (s, a) in dual.iter() {
            let v = pair_sigma_prepared(s, &geo);
            if !v.is_zero() {
                total += a * b * v;
            }
        }
    }
    total
}

/// The edge splitting of `⟨R, [T₁,T₂]⟩_σ`: for each edge `e` of `R`, the term
/// `⟨R₁,T₁⟩_σ⟨R₂,T₂⟩_σ − ⟨R₂,T₁⟩_σ⟨R₁,T₂⟩_σ` where `R₁` is the component of
/// `R − e` containing the source of `e`. `None` when `ℓ` is a single leaf.
pub fn edge_split_terms<S: EdgeShape>(
    shape: &S,
    l: &LieExpr<S::Label>,
    sigma: &VertexLeafBijection,
) -> Option<Vec<i64>> {
    let LieExpr::Bracket(t1, t2) = l else {
        return None;
    };
    let edges = shape.directed_edges();
    let n = shape.weight();
    let n1 = t1.weight();
    let in_t1 = |v: usize| sigma.leaf_of[v] < n1;
    let g1 = LieGeometry::new(t1);
    let g2 = LieGeometry::new(t2);
    let mut out = Vec::with_capacity(edges.len());
    for (cut, &(s, _)) in edges.iter().enumerate() {
        let rest: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != cut)
            .map(|(_, &e)| e)
            .collect();
        let source_side = component(n, &rest, s);
        let r1: Vec<usize> = (0..n).filter(|&v| source_side[v]).collect();
        let r2: Vec<usize> = (0..n).filter(|&v| !source_side[v]).collect();
        let value = |part: &[usize], left: bool| -> i64 {
            if part.iter().any(|&v| in_t1(v) != left) || part.len() != if left { n1 } else { n - n1 } {
                return 0;
            }
            let (geo, offset) = if left { (&g1, 0) } else { (&g2, n1) };
            let mut local = vec![usize::MAX; n];
            for &v in part {
                local[v] = sigma.leaf_of[v] - offset;
            }
            let sub: Vec<(usize, usize)> = rest
                .iter()
                .copied()
                .filter(|&(a, b)| local[a] != usize::MAX && local[b] != usize::MAX)
                .collect();
            edge_product(&sub, &local, geo)
        };
        out.push(value(&r1, true) * value(&r2, false) - value(&r2, true) * value(&r1, false));
    }
    Some(out)
}

fn component(n: usize, edges: &[(usize, usize)], start: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen
}

// ---------------------------------------------------------------------------
// Right-normed shortcut

/// `⟨w*, [a₁,[a₂,[…,[a_{n−1},a_n]]]]⟩` as a signed count: reading `w` must
/// traverse `a₁…a_{n−1}` as an interleaving of an increasing run of positions
/// `1..k−1` and a decreasing run `n..k+1`, ending at `a_n = w_k`; each such
/// way contributes `(−1)^{n−k}`.
pub fn pair_right_normed_basis<L: Label>(w: &Word<L>, l: &LieExpr<L>) -> Result<Scalar> {
    let a = l
        .right_normed_leaves()
        .ok_or_else(|| Error::NotRightNormed(l.to_string()))?;
    let w = w.letters();
    let n = a.len();
    if w.len() != n {
        return Ok(Scalar::zero());
    }
    let mut total: i64 = 0;
    for k in 1..=n {
        if w[k - 1] != a[n - 1] {
            continue;
        }
        // ways[i]: a₁..a_j read using the increasing positions 1..i and the
        // decreasing positions n..n−(j−i)+1
        let mut ways = vec![0i64; k];
        ways[0] = 1;
        for j in 1..n {
            let mut next = vec![0i64; k];
            for (i, &c) in ways.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let used_dec = j - 1 - i;
                if i + 1 < k && w[i] == a[j - 1] {
                    next[i + 1] += c;
                }
                if used_dec < n - k && w[n - 1 - used_dec] == a[j - 1] {
                    next[i] += c;
                }
            }
            ways = next;
        }
        let count = ways[k - 1];
        total += if (n - k) % 2 == 0 { count } else { -count };
    }
    Ok(Scalar::from_integer(total.into()))
}

/// Bilinear extension of [`pair_right_normed_basis`]; every Lie term must be right-normed.
pub fn pair_right_normed<L: Label>(dual: &LinearCombo<Word<L>>, l: &LinearCombo<LieExpr<L>>) -> Result<Scalar> {
    let mut total = Scalar::zero();
    for (e, b) in l.iter() {
        for (w, a) in dual.iter() {
            total += a * b * pair_right_normed_basis(w, e)?;
        }
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// Side dispatch

/// Pair a dual element of the named side with a combination of Lie expressions.
pub fn pair_element(
    algorithm: Algorithm,
    side: Side,
    dual: &Element<Generator>,
    l: &LinearCombo<LieExpr>,
) -> Result<Scalar> {
    if dual.side() != side {
        return Err(mismatch(side, dual.side()));
    }
    Ok(match (algorithm, dual) {
        (Algorithm::Expand, Element::Assoc(d)) => pair_expand(d, l),
        (Algorithm::Expand, Element::PreLie(d)) => pair_expand(d, l),
        (Algorithm::Expand, Element::Graph(d)) => pair_expand(d, l),
        (Algorithm::Recursive, Element::Assoc(d)) => pair_recursive(d, l),
        (Algorithm::Recursive, Element::PreLie(d)) => pair_recursive(d, l),
        (Algorithm::Recursive, Element::Graph(d)) => pair_recursive(d, l),
        (Algorithm::Sigma, Element::Assoc(d)) => pair_sigma(d, l),
        (Algorithm::Sigma, Element::PreLie(d)) => pair_sigma(d, l),
        (Algorithm::Sigma, Element::Graph(d)) => pair_sigma(d, l),
        (Algorithm::RightNormed, Element::Assoc(d)) => pair_right_normed(d, l)?,
        (Algorithm::RightNormed, other) => return Err(mismatch(Side::Assoc, other.side())),
    })
}
