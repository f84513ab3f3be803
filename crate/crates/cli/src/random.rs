//! Seeded random shapes for the self-test and axiom sampling.

use configpair::operads::{basis, Family, OperadElement};
use configpair::terms::scalar;
use configpair::{Generator, Label, LieExpr, LinearCombo, OrientedGraph, RootedTree, Scalar, Word};
use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::Rng;

pub fn letters(names: &str) -> Vec<Generator> {
    names
        .chars()
        .map(|c| Generator::new(&c.to_string()).expect("letter"))
        .collect()
}

fn labels<L: Label>(rng: &mut StdRng, alphabet: &[L], n: usize) -> Vec<L> {
    (0..n)
        .map(|_| alphabet.choose(rng).expect("non-empty alphabet").clone())
        .collect()
}

/// Vertex `i > 0` hangs below a uniformly chosen earlier vertex.
fn parents(rng: &mut StdRng, n: usize) -> Vec<Option<usize>> {
    (0..n)
        .map(|i| if i == 0 { None } else { Some(rng.random_range(0..i)) })
        .collect()
}

pub fn word<L: Label>(rng: &mut StdRng, alphabet: &[L], n: usize) -> Word<L> {
    Word::new(labels(rng, alphabet, n)).expect("n ≥ 1")
}

pub fn tree<L: Label>(rng: &mut StdRng, alphabet: &[L], n: usize) -> RootedTree<L> {
    let ls = labels(rng, alphabet, n);
    tree_on(rng, ls)
}

/// A random tree whose vertices carry exactly `ls`.
pub fn tree_on<L: Label>(rng: &mut StdRng, ls: Vec<L>) -> RootedTree<L> {
    let ps = parents(rng, ls.len());
    RootedTree::from_parents(&ls, &ps).expect("parent array")
}

pub fn graph<L: Label>(rng: &mut StdRng, alphabet: &[L], n: usize) -> OrientedGraph<L> {
    let ls = labels(rng, alphabet, n);
    graph_on(rng, ls)
}

/// A random oriented tree whose vertices carry exactly `ls`.
pub fn graph_on<L: Label>(rng: &mut StdRng, ls: Vec<L>) -> OrientedGraph<L> {
    let n = ls.len();
    let edges = parents(rng, n)
        .into_iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| if rng.random_bool(0.5) { (p, i) } else { (i, p) }))
        .collect();
    OrientedGraph::new(ls, edges).expect("tree")
}

/// A uniformly split binary bracketing of `n` random leaves.
pub fn lie<L: Label>(rng: &mut StdRng, alphabet: &[L], n: usize) -> LieExpr<L> {
    if n == 1 {
        return LieExpr::leaf(alphabet.choose(rng).expect("non-empty alphabet").clone());
    }
    let k = rng.random_range(1..n);
    LieExpr::bracket(lie(rng, alphabet, k), lie(rng, alphabet, n - k))
}

pub fn coefficient(rng: &mut StdRng) -> Scalar {
    let n = rng.random_range(1..=3) * if rng.random_bool(0.5) { 1 } else { -1 };
    if rng.random_bool(0.2) {
        Scalar::new(n.into(), 2.into())
    } else {
        scalar(n)
    }
}

pub fn combo<B: Ord + Clone>(
    rng: &mut StdRng,
    terms: usize,
    mut shape: impl FnMut(&mut StdRng) -> B,
) -> LinearCombo<B> {
    let mut out = LinearCombo::zero();
    for _ in 0..terms {
        let s = shape(rng);
        let c = coefficient(rng);
        out.add_term(s, c);
    }
    out
}

/// A combination of a few basis elements of the arity-`n` space.
pub fn operad_element(rng: &mut StdRng, family: Family, n: usize) -> OperadElement {
    let parts = basis(family, n).expect("arity in range");
    let mut acc: Option<OperadElement> = None;
    for _ in 0..rng.random_range(1..=3) {
        let e = parts.choose(rng).expect("non-empty basis");
        let scaled = scale(e, &coefficient(rng));
        acc = Some(match acc {
            None => scaled,
            Some(a) => add(&a, &scaled),
        });
    }
    acc.expect("at least one term")
}

fn scale(e: &OperadElement, c: &Scalar) -> OperadElement {
    match e {
        OperadElement::Assoc(n, x) => OperadElement::Assoc(*n, x.scale(c)),
        OperadElement::Lie(n, x) => OperadElement::Lie(*n, x.scale(c)),
        OperadElement::PreLie(n, x) => OperadElement::PreLie(*n, x.scale(c)),
        OperadElement::Graph(n, x) => OperadElement::Graph(*n, x.scale(c)),
    }
}

fn add(a: &OperadElement, b: &OperadElement) -> OperadElement {
    match (a, b) {
        (OperadElement::Assoc(n, x), OperadElement::Assoc(_, y)) => OperadElement::Assoc(*n, x + y),
        (OperadElement::Lie(n, x), OperadElement::Lie(_, y)) => OperadElement::Lie(*n, x + y),
        (OperadElement::PreLie(n, x), OperadElement::PreLie(_, y)) => OperadElement::PreLie(*n, x + y),
        (OperadElement::Graph(n, x), OperadElement::Graph(_, y)) => OperadElement::Graph(*n, x + y),
        _ => unreachable!("same family"),
    }
}
