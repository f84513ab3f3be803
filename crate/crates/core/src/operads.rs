//! The associative, Lie, preLie and graph operads: arity-`n` spaces spanned by
//! shapes labeled bijectively by `1..=n`, partial compositions `∘ᵢ`, the
//! quotient maps `Q_prelie`, `Q_graph` and the inclusions `U_•` of the Lie operad.

use std::fmt;

use num_traits::One;

use crate::envelope::{expand_assoc, expand_graph, expand_prelie, q_graph, q_prelie};
use crate::liedual::Echelon;
use crate::terms::enumerate::{distinct_permutations, graphs_of, trees_of, words_of};
use crate::terms::{LieExpr, LinearCombo, Multidegree, OrientedGraph, RootedTree, Scalar, Shape, Word};
use crate::{Error, Result};

/// Largest arity the enumeration-based operations accept.
pub const MAX_ARITY: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Assoc,
    Lie,
    PreLie,
    Graph,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Assoc, Family::Lie, Family::PreLie, Family::Graph];

    pub fn name(self) -> &'static str {
        match self {
            Family::Assoc => "assoc",
            Family::Lie => "lie",
            Family::PreLie => "prelie",
            Family::Graph => "graph",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown operad {s:?}")))
    }
}

/// Shapes labeled by `1..=n` that compose as operations.
pub trait OperadShape: Shape<Label = usize> {
    const FAMILY: Family;

    /// `self ∘ᵢ other` on basis shapes, labels already shifted by the caller's convention.
    fn compose_basis(&self, i: usize, other: &Self) -> LinearCombo<Self>;

    fn relabel(&self, f: &impl Fn(usize) -> usize) -> Self;
}

/// Labels of `x` after inserting an arity-`m` operation at slot `i`.
fn shift_outer(j: usize, i: usize, m: usize) -> usize {
    if j > i {
        j + m - 1
    } else {
        j
    }
}

impl OperadShape for Word<usize> {
    const FAMILY: Family = Family::Assoc;

    /// Substitute the (shifted) permutation `other` for the letter `i`.
    fn compose_basis(&self, i: usize, other: &Self) -> LinearCombo<Self> {
        let m = other.len();
        let mut letters = Vec::with_capacity(self.len() + m - 1);
        for &j in self.letters() {
            if j == i {
                letters.extend(other.letters().iter().map(|&k| k + i - 1));
            } else {
                letters.push(shift_outer(j, i, m));
            }
        }
        LinearCombo::basis(Word::new(letters).expect("non-empty"))
    }

    fn relabel(&self, f: &impl Fn(usize) -> usize) -> Self {
        self.map_labels(|&l| f(l))
    }
}

impl OperadShape for LieExpr<usize> {
    const FAMILY: Family = Family::Lie;

    /// Substitute the (shifted) bracket `other` for the leaf `i`.
    fn compose_basis(&self, i: usize, other: &Self) -> LinearCombo<Self> {
        let m = other.weight();
        let inner = other.map_labels(&|&k| k + i - 1);
        let marker = usize::MAX;
        let outer = self.map_labels(&|&j| if j == i { marker } else { shift_outer(j, i, m) });
        LinearCombo::basis(outer.substitute(&marker, &inner))
    }

    fn relabel(&self, f: &impl Fn(usize) -> usize) -> Self {
        self.map_labels(&|&l| f(l))
    }
}

impl OperadShape for RootedTree<usize> {
    const FAMILY: Family = Family::PreLie;

    /// Replace vertex `i` by `other`: the incoming edge goes to the root of
    /// `other`, and every outgoing edge of `i` is summed over all new sources in `other`.
    fn compose_basis(&self, i: usize, other: &Self) -> LinearCombo<Self> {
        let m = other.weight();
        let (r_labels, r_parents) = self.preorder();
        let (t_labels, t_parents) = other.preorder();
        let vi = r_labels.iter().position(|&l| l == i).expect("label present");
        // new indices: r vertices other than vi keep their order, then t's vertices
        let mut index = vec![usize::MAX; r_labels.len()];
        let mut labels = Vec::new();
        for (v, &l) in r_labels.iter().enumerate() {
            if v != vi {
                index[v] = labels.len();
                labels.push(shift_outer(l, i, m));
            }
        }
        let t_base = labels.len();
        labels.extend(t_labels.iter().map(|&k| k + i - 1));
        let mut parents: Vec<Option<usize>> = vec![None; labels.len()];
        let mut orphans = Vec::new();
        for (v, p) in r_parents.iter().enumerate() {
            if v == vi {
                continue;
            }
            match p {
                Some(p) if *p == vi => orphans.push(index[v]),
                Some(p) => parents[index[v]] = Some(index[*p]),
                None => {}
            }
        }
        for (v, p) in t_parents.iter().enumerate() {
            parents[t_base + v] = match p {
                Some(p) => Some(t_base + p),
                None => r_parents[vi].map(|p| index[p]),
            };
        }
        let mut out = LinearCombo::zero();
        for_each_assignment(orphans.len(), m, |choice| {
            let mut ps = parents.clone();
            for (&o, &c) in orphans.iter().zip(choice) {
                ps[o] = Some(t_base + c);
            }
            let t = RootedTree::from_parents(&labels, &ps).expect("composition of trees is a tree");
            out.add_term(t, Scalar::one());
        });
        out
    }

    fn relabel(&self, f: &impl Fn(usize) -> usize) -> Self {
        self.map_labels(&|&l| f(l))
    }
}

impl OperadShape for OrientedGraph<usize> {
    const FAMILY: Family = Family::Graph;

    /// Replace vertex `i` by `other`, summing over new endpoints in `other`
    /// for every edge incident to `i`.
    fn compose_basis(&self, i: usize, other: &Self) -> LinearCombo<Self> {
        let m = other.vertex_count();
        let vi = self.labels().iter().position(|&l| l == i).expect("label present");
        let mut index = vec![usize::MAX; self.vertex_count()];
        let mut labels = Vec::new();
        for (v, &l) in self.labels().iter().enumerate() {
            if v != vi {
                index[v] = labels.len();
                labels.push(shift_outer(l, i, m));
            }
        }
        let h_base = labels.len();
        labels.extend(other.labels().iter().map(|&k| k + i - 1));
        let mut edges: Vec<(usize, usize)> = other.edges().iter().map(|&(s, t)| (h_base + s, h_base + t)).collect();
        // incident edges as (other endpoint, i is the source)
        let mut incident = Vec::new();
        for &(s, t) in self.edges() {
            if s == vi {
                incident.push((index[t], true));
            } else if t == vi {
                incident.push((index[s], false));
            } else {
                edges.push((index[s], index[t]));
            }
        }
        let mut out = LinearCombo::zero();
        for_each_assignment(incident.len(), m, |choice| {
            let mut es = edges.clone();
            for (&(u, i_is_source), &c) in incident.iter().zip(choice) {
                es.push(if i_is_source { (h_base + c, u) } else { (u, h_base + c) });
            }
            let g = OrientedGraph::new(labels.clone(), es).expect("composition of oriented trees is one");
            out.add_term(g, Scalar::one());
        });
        out
    }

    fn relabel(&self, f: &impl Fn(usize) -> usize) -> Self {
        self.map_labels(|&l| f(l))
    }
}

/// Calls `f` on every sequence in `0..m` of length `k`.
fn for_each_assignment(k: usize, m: usize, mut f: impl FnMut(&[usize])) {
    let mut choice = vec![0; k];
    loop {
        f(&choice);
        let mut pos = 0;
        loop {
            if pos == k {
                return;
            }
            choice[pos] += 1;
            if choice[pos] < m {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Linear extension of [`OperadShape::compose_basis`].
pub fn compose_combo<S: OperadShape>(x: &LinearCombo<S>, i: usize, y: &LinearCombo<S>) -> LinearCombo<S> {
    x.bilinear(y, |a, b| a.compose_basis(i, b))
}

/// A combination of shapes of one family, each labeled bijectively by `1..=arity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperadElement {
    Assoc(usize, LinearCombo<Word<usize>>),
    Lie(usize, LinearCombo<LieExpr<usize>>),
    PreLie(usize, LinearCombo<RootedTree<usize>>),
    Graph(usize, LinearCombo<OrientedGraph<usize>>),
}

fn check_arity<S: Shape<Label = usize>>(arity: usize, combo: &LinearCombo<S>) -> Result<()> {
    if arity == 0 {
        return Err(Error::Operad("arity must be at least 1".into()));
    }
    let expected = Multidegree::from_labels(1..=arity);
    for s in combo.shapes() {
        if s.multidegree() != expected {
            return Err(Error::Operad(format!("{s} is not labeled by 1..={arity}")));
        }
    }
    Ok(())
}

impl OperadElement {
    pub fn assoc(arity: usize, combo: LinearCombo<Word<usize>>) -> Result<Self> {
        check_arity(arity, &combo)?;
        Ok(OperadElement::Assoc(arity, combo))
    }

    pub fn lie(arity: usize, combo: LinearCombo<LieExpr<usize>>) -> Result<Self> {
        check_arity(arity, &combo)?;
        Ok(OperadElement::Lie(arity, combo))
    }

    pub fn prelie(arity: usize, combo: LinearCombo<RootedTree<usize>>) -> Result<Self> {
        check_arity(arity, &combo)?;
        Ok(OperadElement::PreLie(arity, combo))
    }

    pub fn graph(arity: usize, combo: LinearCombo<OrientedGraph<usize>>) -> Result<Self> {
        check_arity(arity, &combo)?;
        Ok(OperadElement::Graph(arity, combo))
    }

    pub fn family(&self) -> Family {
        match self {
            OperadElement::Assoc(..) => Family::Assoc,
            OperadElement::Lie(..) => Family::Lie,
            OperadElement::PreLie(..) => Family::PreLie,
            OperadElement::Graph(..) => Family::Graph,
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            OperadElement::Assoc(n, _)
            | OperadElement::Lie(n, _)
            | OperadElement::PreLie(n, _)
            | OperadElement::Graph(n, _) => *n,
        }
    }

    /// `self ∘ᵢ other`, of arity `n + m − 1`.
    pub fn compose(&self, i: usize, other: &OperadElement) -> Result<OperadElement> {
        let (n, m) = (self.arity(), other.arity());
        if i == 0 || i > n {
            return Err(Error::Operad(format!("position {i} outside 1..={n}")));
        }
        let arity = n + m - 1;
        Ok(match (self, other) {
            (OperadElement::Assoc(_, x), OperadElement::Assoc(_, y)) => {
                OperadElement::Assoc(arity, compose_combo(x, i, y))
            }
            (OperadElement::Lie(_, x), OperadElement::Lie(_, y)) => OperadElement::Lie(arity, compose_combo(x, i, y)),
            (OperadElement::PreLie(_, x), OperadElement::PreLie(_, y)) => {
                OperadElement::PreLie(arity, compose_combo(x, i, y))
            }
            (OperadElement::Graph(_, x), OperadElement::Graph(_, y)) => {
                OperadElement::Graph(arity, compose_combo(x, i, y))
            }
            _ => {
                return Err(Error::Operad(format!(
                    "cannot compose {} with {}",
                    self.family(),
                    other.family()
                )))
            }
        })
    }

    /// The symmetric group action: label `j` becomes `perm[j − 1]`.
    pub fn permute(&self, perm: &[usize]) -> Result<OperadElement> {
        let n = self.arity();
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return Err(Error::Operad(format!("{perm:?} is not a permutation of 1..={n}")));
        }
        let f = |j: usize| perm[j - 1];
        Ok(match self {
            OperadElement::Assoc(n, x) => OperadElement::Assoc(*n, x.map_basis(|s| s.relabel(&f))),
            OperadElement::Lie(n, x) => OperadElement::Lie(*n, x.map_basis(|s| s.relabel(&f))),
            OperadElement::PreLie(n, x) => OperadElement::PreLie(*n, x.map_basis(|s| s.relabel(&f))),
            OperadElement::Graph(n, x) => OperadElement::Graph(*n, x.map_basis(|s| s.relabel(&f))),
        })
    }

    /// Ladders go to their root-to-leaf permutation; other trees to 0.
    pub fn q_prelie(&self) -> Result<OperadElement> {
        match self {
            OperadElement::PreLie(n, x) => Ok(OperadElement::Assoc(*n, x.map_linear(q_prelie))),
            other => Err(family_mismatch(Family::PreLie, other.family())),
        }
    }

    /// Rooted graphs go to their trees; other graphs to 0.
    pub fn q_graph(&self) -> Result<OperadElement> {
        match self {
            OperadElement::Graph(n, x) => Ok(OperadElement::PreLie(*n, x.map_linear(q_graph))),
            other => Err(family_mismatch(Family::Graph, other.family())),
        }
    }

    pub fn u_assoc(&self) -> Result<OperadElement> {
        match self {
            OperadElement::Lie(n, x) => Ok(OperadElement::Assoc(*n, x.map_linear(expand_assoc))),
            other => Err(family_mismatch(Family::Lie, other.family())),
        }
    }

    pub fn u_prelie(&self) -> Result<OperadElement> {
        match self {
            OperadElement::Lie(n, x) => Ok(OperadElement::PreLie(*n, x.map_linear(expand_prelie))),
            other => Err(family_mismatch(Family::Lie, other.family())),
        }
    }

    pub fn u_graph(&self) -> Result<OperadElement> {
        match self {
            OperadElement::Lie(n, x) => Ok(OperadElement::Graph(*n, x.map_linear(expand_graph))),
            other => Err(family_mismatch(Family::Lie, other.family())),
        }
    }

    /// Equality in the operad. Bracket expressions are compared through their
    /// (injective) associative expansions, so anti-symmetry and Jacobi are respected.
    pub fn equivalent(&self, other: &OperadElement) -> bool {
        match (self, other) {
            (OperadElement::Lie(n, _), OperadElement::Lie(m, _)) => {
                n == m && self.u_assoc().ok() == other.u_assoc().ok()
            }
            _ => self == other,
        }
    }
}

fn family_mismatch(expected: Family, found: Family) -> Error {
    Error::Operad(format!("expected a {expected} element, found {found}"))
}

impl fmt::Display for OperadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperadElement::Assoc(_, x) => write!(f, "{x}"),
            OperadElement::Lie(_, x) => write!(f, "{x}"),
            OperadElement::PreLie(_, x) => write!(f, "{x}"),
            OperadElement::Graph(_, x) => write!(f, "{x}"),
        }
    }
}

fn check_bound(n: usize) -> Result<()> {
    if (1..=MAX_ARITY).contains(&n) {
        Ok(())
    } else {
        Err(Error::Operad(format!("arity {n} outside 1..={MAX_ARITY}")))
    }
}

fn multilinear(n: usize) -> Multidegree<usize> {
    Multidegree::from_labels(1..=n)
}

/// A basis of the arity-`n` space. For the Lie operad: the left-normed
/// brackets starting with 1.
pub fn basis(family: Family, n: usize) -> Result<Vec<OperadElement>> {
    check_bound(n)?;
    let md = multilinear(n);
    Ok(match family {
        Family::Assoc => words_of(&md)
            .into_iter()
            .map(|w| OperadElement::Assoc(n, LinearCombo::basis(w)))
            .collect(),
        Family::PreLie => trees_of(&md)
            .into_iter()
            .map(|t| OperadElement::PreLie(n, LinearCombo::basis(t)))
            .collect(),
        Family::Graph => graphs_of(&md)
            .into_iter()
            .map(|g| OperadElement::Graph(n, LinearCombo::basis(g)))
            .collect(),
        Family::Lie => {
            let rest = Multidegree::from_labels(2..=n);
            let perms = if n == 1 {
                vec![vec![]]
            } else {
                distinct_permutations(&rest)
            };
            perms
                .into_iter()
                .map(|mut p| {
                    p.insert(0, 1);
                    OperadElement::Lie(n, LinearCombo::basis(LieExpr::left_normed(&p).expect("non-empty")))
                })
                .collect()
        }
    })
}

/// Dimension of the arity-`n` space. Shape families are counted; the Lie
/// operad's dimension is the rank of all left-normed brackets under `U_assoc`.
pub fn dims(family: Family, n: usize) -> Result<usize> {
    check_bound(n)?;
    let md = multilinear(n);
    Ok(match family {
        Family::Assoc => words_of(&md).len(),
        Family::PreLie => trees_of(&md).len(),
        Family::Graph => graphs_of(&md).len(),
        Family::Lie => {
            let mut e = Echelon::new();
            for p in distinct_permutations(&md) {
                e.insert(expand_assoc(&LieExpr::left_normed(&p).expect("non-empty")));
            }
            e.rank()
        }
    })
}

/// Coordinates used for linear independence: Lie elements through `U_assoc`.
enum Coords {
    Words(LinearCombo<Word<usize>>),
    Trees(LinearCombo<RootedTree<usize>>),
    Graphs(LinearCombo<OrientedGraph<usize>>),
}

struct Span {
    words: Echelon<Word<usize>>,
    trees: Echelon<RootedTree<usize>>,
    graphs: Echelon<OrientedGraph<usize>>,
}

impl Span {
    fn new() -> Self {
        Span {
            words: Echelon::new(),
            trees: Echelon::new(),
            graphs: Echelon::new(),
        }
    }

    fn insert(&mut self, x: &OperadElement) -> bool {
        match coords(x) {
            Coords::Words(c) => self.words.insert(c),
            Coords::Trees(c) => self.trees.insert(c),
            Coords::Graphs(c) => self.graphs.insert(c),
        }
    }

    fn rank(&self) -> usize {
        self.words.rank() + self.trees.rank() + self.graphs.rank()
    }
}

fn coords(x: &OperadElement) -> Coords {
    match x {
        OperadElement::Assoc(_, c) => Coords::Words(c.clone()),
        OperadElement::Lie(_, c) => Coords::Words(c.map_linear(expand_assoc)),
        OperadElement::PreLie(_, c) => Coords::Trees(c.clone()),
        OperadElement::Graph(_, c) => Coords::Graphs(c.clone()),
    }
}

/// Dimension of the part of arity `n` generated by iterated compositions of
/// arity-2 elements, closed under the symmetric group action.
pub fn binary_generated_dim(family: Family, n: usize) -> Result<usize> {
    check_bound(n)?;
    if n == 1 {
        return Ok(1);
    }
    let binary = basis(family, 2)?;
    let mut level = binary.clone();
    let mut rank = level.len();
    for k in 3..=n {
        let perms = distinct_permutations(&multilinear(k));
        let mut span = Span::new();
        let mut next = Vec::new();
        for b in &level {
            for g in &binary {
                for i in 1..k {
                    let composite = b.compose(i, g)?;
                    for p in &perms {
                        let moved = composite.permute(p)?;
                        if span.insert(&moved) {
                            next.push(moved);
                        }
                    }
                }
            }
        }
        rank = span.rank();
        level = next;
    }
    Ok(rank)
}
