#![allow(dead_code)]

use configpair::terms::canonicalize_graph;
use configpair::terms::{scalar, LabeledDigraph};
use configpair::{Generator, LieExpr, LinearCombo, OrientedGraph, RootedTree, Word};
use proptest::prelude::*;

pub fn gen(i: u8) -> Generator {
    Generator::new(&((b'a' + i) as char).to_string()).unwrap()
}

pub fn letter(k: u8) -> impl Strategy<Value = Generator> {
    (0..k).prop_map(gen)
}

pub fn word(k: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(k), 1..=max_len).prop_map(|ls| Word::new(ls).unwrap())
}

/// Parent of vertex i is drawn from 0..i, so every draw is a tree.
fn parents(n: usize) -> Vec<std::ops::Range<usize>> {
    (1..n).map(|i| 0..i).collect()
}

pub fn tree(k: u8, max_weight: usize) -> impl Strategy<Value = RootedTree> {
    prop::collection::vec(letter(k), 1..=max_weight).prop_flat_map(|labels| {
        let n = labels.len();
        (Just(labels), parents(n)).prop_map(|(labels, ps)| {
            let parents: Vec<Option<usize>> = std::iter::once(None).chain(ps.into_iter().map(Some)).collect();
            RootedTree::from_parents(&labels, &parents).unwrap()
        })
    })
}

pub fn graph(k: u8, max_weight: usize) -> impl Strategy<Value = OrientedGraph> {
    prop::collection::vec(letter(k), 1..=max_weight).prop_flat_map(|labels| {
        let n = labels.len();
        let flips = prop::collection::vec(any::<bool>(), n - 1);
        (Just(labels), parents(n), flips).prop_map(|(labels, ps, flips)| {
            let edges = ps
                .into_iter()
                .zip(flips)
                .enumerate()
                .map(|(i, (p, f))| if f { (i + 1, p) } else { (p, i + 1) })
                .collect();
            canonicalize_graph(&LabeledDigraph::new(labels, edges)).unwrap()
        })
    })
}

pub fn lie(k: u8, max_weight: usize) -> impl Strategy<Value = LieExpr> {
    letter(k)
        .prop_map(LieExpr::leaf)
        .prop_recursive(5, max_weight as u32, 2, |inner| {
            (inner.clone(), inner).prop_map(|(x, y)| LieExpr::bracket(x, y))
        })
        .prop_filter("weight bound", move |l| l.leaves().len() <= max_weight)
}

pub fn combo<B: Ord + Clone + std::fmt::Debug>(
    shape: impl Strategy<Value = B>,
    max_terms: usize,
) -> impl Strategy<Value = LinearCombo<B>> {
    prop::collection::vec((-3i64..=3, shape), 0..=max_terms)
        .prop_map(|terms| terms.into_iter().map(|(c, s)| (s, scalar(c))).collect())
}
