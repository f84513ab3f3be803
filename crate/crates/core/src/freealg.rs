//! Products of the free associative, preLie and graph algebras, their
//! commutator brackets, shuffles and Lyndon words.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::terms::{Label, LieExpr, LinearCombo, OrientedGraph, RootedTree, Scalar, Shape, Side, Word};
use crate::{Error, Generator, Result};

/// Basis shapes of one of the three free algebras a Lie expression expands into.
pub trait AlgebraBasis: Shape {
    const SIDE: Side;

    /// The shape of a single generator.
    fn generator(label: Self::Label) -> Self;

    /// Product of two basis shapes.
    fn product(&self, rhs: &Self) -> LinearCombo<Self>;

    /// Label-preserving automorphisms; the starred basis element `s*` takes
    /// this value on `s`.
    fn automorphism_count(&self) -> BigInt;
}

impl<L: Label> AlgebraBasis for Word<L> {
    const SIDE: Side = Side::Assoc;

    fn generator(label: L) -> Self {
        Word::letter(label)
    }

    fn product(&self, rhs: &Self) -> LinearCombo<Self> {
        LinearCombo::basis(self.concat(rhs))
    }

    fn automorphism_count(&self) -> BigInt {
        BigInt::one()
    }
}

impl<L: Label> AlgebraBasis for RootedTree<L> {
    const SIDE: Side = Side::PreLie;

    fn generator(label: L) -> Self {
        RootedTree::leaf(label)
    }

    /// `x ◁ y`: attach the root of `y` below each vertex of `x` in turn.
    fn product(&self, rhs: &Self) -> LinearCombo<Self> {
        self.graft_everywhere(rhs)
            .into_iter()
            .map(|t| (t, Scalar::one()))
            .collect()
    }

    fn automorphism_count(&self) -> BigInt {
        RootedTree::automorphism_count(self)
    }
}

impl<L: Label> AlgebraBasis for OrientedGraph<L> {
    const SIDE: Side = Side::Graph;

    fn generator(label: L) -> Self {
        OrientedGraph::single(label)
    }

    /// Sum over all ways of adding one edge from a vertex of `self` to a vertex of `rhs`.
    fn product(&self, rhs: &Self) -> LinearCombo<Self> {
        let mut out = LinearCombo::zero();
        for u in 0..self.vertex_count() {
            for v in 0..rhs.vertex_count() {
                out.add_term(self.join(u, rhs, v), Scalar::one());
            }
        }
        out
    }

    fn automorphism_count(&self) -> BigInt {
        OrientedGraph::automorphism_count(self)
    }
}

/// Bilinear extension of the side's product.
pub fn product<B: AlgebraBasis>(x: &LinearCombo<B>, y: &LinearCombo<B>) -> LinearCombo<B> {
    x.bilinear(y, |a, b| a.product(b))
}

/// The dual functional `dual` evaluated on `x`: `Σ dual(s)·x(s)·|Aut s|`.
pub fn evaluate_dual<B: AlgebraBasis>(dual: &LinearCombo<B>, x: &LinearCombo<B>) -> Scalar {
    let (small, large) = if dual.len() <= x.len() { (dual, x) } else { (x, dual) };
    small
        .iter()
        .map(|(s, c)| {
            let d = large.coefficient_of(s);
            if d.is_zero() {
                d
            } else {
                c * d * Scalar::from_integer(s.automorphism_count())
            }
        })
        .sum()
}

/// `xy − yx` for the side's product.
pub fn commutator<B: AlgebraBasis>(x: &LinearCombo<B>, y: &LinearCombo<B>) -> LinearCombo<B> {
    let mut out = product(x, y);
    out -= &product(y, x);
    out
}

pub fn concat<L: Label>(u: &Word<L>, v: &Word<L>) -> Word<L> {
    u.concat(v)
}

pub fn prelie_product<L: Label>(
    x: &LinearCombo<RootedTree<L>>,
    y: &LinearCombo<RootedTree<L>>,
) -> LinearCombo<RootedTree<L>> {
    product(x, y)
}

pub fn graph_product<L: Label>(
    x: &LinearCombo<OrientedGraph<L>>,
    y: &LinearCombo<OrientedGraph<L>>,
) -> LinearCombo<OrientedGraph<L>> {
    product(x, y)
}

/// The shuffle product: every interleaving of `u` and `v`, with multiplicity.
pub fn shuffle<L: Label>(u: &Word<L>, v: &Word<L>) -> LinearCombo<Word<L>> {
    fn go<L: Label>(u: &[L], v: &[L], prefix: &mut Vec<L>, out: &mut LinearCombo<Word<L>>) {
        match (u.split_first(), v.split_first()) {
            (None, None) => {
                let w = Word::new(prefix.clone()).expect("non-empty inputs");
                out.add_term(w, Scalar::one());
            }
            (Some((a, rest)), None) | (None, Some((a, rest))) => {
                prefix.push(a.clone());
                go(rest, &[], prefix, out);
                prefix.pop();
            }
            (Some((a, ur)), Some((b, vr))) => {
                prefix.push(a.clone());
                go(ur, v, prefix, out);
                prefix.pop();
                prefix.push(b.clone());
                go(u, vr, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = LinearCombo::zero();
    go(u.letters(), v.letters(), &mut Vec::new(), &mut out);
    out
}

/// A combination on one of the three sides, for side-dispatched callers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element<L: Label = Generator> {
    Assoc(LinearCombo<Word<L>>),
    PreLie(LinearCombo<RootedTree<L>>),
    Graph(LinearCombo<OrientedGraph<L>>),
}

impl<L: Label> Element<L> {
    pub fn side(&self) -> Side {
        match self {
            Element::Assoc(_) => Side::Assoc,
            Element::PreLie(_) => Side::PreLie,
            Element::Graph(_) => Side::Graph,
        }
    }

    pub fn generator(side: Side, label: L) -> Self {
        match side {
            Side::Assoc => Element::Assoc(LinearCombo::basis(Word::letter(label))),
            Side::PreLie => Element::PreLie(LinearCombo::basis(RootedTree::leaf(label))),
            Side::Graph => Element::Graph(LinearCombo::basis(OrientedGraph::single(label))),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Assoc(c) => c.is_zero(),
            Element::PreLie(c) => c.is_zero(),
            Element::Graph(c) => c.is_zero(),
        }
    }
}

impl<L: Label> std::fmt::Display for Element<L> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Element::Assoc(c) => write!(f, "{c}"),
            Element::PreLie(c) => write!(f, "{c}"),
            Element::Graph(c) => write!(f, "{c}"),
        }
    }
}

pub(crate) fn mismatch(expected: Side, found: Side) -> Error {
    Error::SideMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

/// Commutator of the named side's product; both arguments must live on that side.
pub fn bracket<L: Label>(side: Side, x: &Element<L>, y: &Element<L>) -> Result<Element<L>> {
    for e in [x, y] {
        if e.side() != side {
            return Err(mismatch(side, e.side()));
        }
    }
    Ok(match (x, y) {
        (Element::Assoc(a), Element::Assoc(b)) => Element::Assoc(commutator(a, b)),
        (Element::PreLie(a), Element::PreLie(b)) => Element::PreLie(commutator(a, b)),
        (Element::Graph(a), Element::Graph(b)) => Element::Graph(commutator(a, b)),
        _ => unreachable!("sides checked above"),
    })
}

/// Evaluate a Lie expression with the bracket of a free algebra (the expansion of `ℓ`).
pub fn evaluate_bracket<B: AlgebraBasis>(expr: &LieExpr<B::Label>) -> LinearCombo<B> {
    match expr {
        LieExpr::Leaf(l) => LinearCombo::basis(B::generator(l.clone())),
        LieExpr::Bracket(x, y) => commutator(&evaluate_bracket::<B>(x), &evaluate_bracket::<B>(y)),
    }
}

/// Strictly smaller than every nontrivial rotation.
pub fn is_lyndon<L: Label>(w: &Word<L>) -> bool {
    let letters = w.letters();
    let n = letters.len();
    (1..n).all(|k| {
        let rotated = letters[k..].iter().chain(&letters[..k]);
        letters.iter().lt(rotated)
    })
}

/// All Lyndon words of length `1..=max_len` over the (sorted, deduplicated)
/// alphabet, in lexicographic order. Duval's generation algorithm.
pub fn lyndon_words<L: Label>(alphabet: &[L], max_len: usize) -> Vec<Word<L>> {
    let mut letters: Vec<L> = alphabet.to_vec();
    letters.sort();
    letters.dedup();
    let k = letters.len();
    let mut out = Vec::new();
    if k == 0 || max_len == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    while !w.is_empty() {
        out.push(Word::new(w.iter().map(|&i| letters[i].clone()).collect()).expect("non-empty"));
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out
}
