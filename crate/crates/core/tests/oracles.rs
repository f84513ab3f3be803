//! Library results checked against brute-force oracles written independently here.

mod common;

use std::collections::{BTreeMap, HashMap};

use common::gen;
use configpair::envelope::expand_assoc;
use configpair::freealg::{is_lyndon, lyndon_words, shuffle};
use configpair::syntax::parse_lie;
use configpair::terms::canonicalize_graph;
use configpair::terms::{scalar, LabeledDigraph};
use configpair::{Generator, LieExpr, RootedTree, Word};
use proptest::prelude::*;

/// A planar tree; isomorphism is decided by searching child bijections.
#[derive(Clone, Debug)]
struct Raw {
    label: u8,
    children: Vec<Raw>,
}

fn raw_from_parents(labels: &[u8], parents: &[Option<usize>]) -> Raw {
    fn build(v: usize, labels: &[u8], parents: &[Option<usize>]) -> Raw {
        let children = (0..labels.len())
            .filter(|&c| parents[c] == Some(v))
            .map(|c| build(c, labels, parents))
            .collect();
        Raw {
            label: labels[v],
            children,
        }
    }
    build(0, labels, parents)
}

fn isomorphic(x: &Raw, y: &Raw) -> bool {
    fn match_children(xs: &[Raw], ys: &[Raw], used: &mut Vec<bool>) -> bool {
        let Some((first, rest)) = xs.split_first() else {
            return true;
        };
        for j in 0..ys.len() {
            if !used[j] && isomorphic(first, &ys[j]) {
                used[j] = true;
                if match_children(rest, ys, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    x.label == y.label
        && x.children.len() == y.children.len()
        && match_children(&x.children, &y.children, &mut vec![false; y.children.len()])
}

/// Every parent array with parent(i) < i, i.e. every labeled tree with vertex 0 as root
/// whose preorder-like numbering increases away from the root.
fn parent_arrays(n: usize) -> Vec<Vec<Option<usize>>> {
    let mut out = vec![vec![None]];
    for i in 1..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..i).map(move |q| {
                    let mut p = p.clone();
                    p.push(Some(q));
                    p
                })
            })
            .collect();
    }
    out
}

fn labelings(n: usize, k: u8) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|l| (0..k).map(move |c| [l.clone(), vec![c]].concat()))
            .collect();
    }
    out
}

#[test]
fn canonical_key_separates_exactly_the_isomorphism_classes() {
    for n in 1..=6 {
        let mut classes: BTreeMap<String, Vec<Raw>> = BTreeMap::new();
        for labels in labelings(n, 2) {
            let names: Vec<Generator> = labels.iter().map(|&c| gen(c)).collect();
            for parents in parent_arrays(n) {
                let key = RootedTree::from_parents(&names, &parents).unwrap().canonical_key();
                classes
                    .entry(key)
                    .or_default()
                    .push(raw_from_parents(&labels, &parents));
            }
        }
        let reps: Vec<&Raw> = classes.values().map(|members| &members[0]).collect();
        for members in classes.values() {
            assert!(members.iter().all(|m| isomorphic(m, &members[0])));
        }
        for (i, x) in reps.iter().enumerate() {
            for y in &reps[i + 1..] {
                assert!(!isomorphic(x, y));
            }
        }
        let unlabeled_rooted = [1, 1, 2, 4, 9, 20];
        assert!(classes.len() >= unlabeled_rooted[n - 1]);
    }
}

#[test]
fn canonical_key_example() {
    let t = RootedTree::new(gen(0), vec![RootedTree::leaf(gen(2)), RootedTree::leaf(gen(1))]);
    assert_eq!(t.canonical_key(), "a(b,c)");
    assert_eq!(RootedTree::leaf(gen(0)).canonical_key(), "a");
}

/// The lexicographically least (labels, sorted edges) over all vertex orders.
type Encoding = (Vec<u8>, Vec<(usize, usize)>);

fn brute_canonical(labels: &[u8], edges: &[(usize, usize)]) -> Encoding {
    let n = labels.len();
    let mut best: Option<Encoding> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        // perm[old] = new position
        let mut ls = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            ls[new] = labels[old];
        }
        let mut es: Vec<(usize, usize)> = edges.iter().map(|&(s, t)| (perm[s], perm[t])).collect();
        es.sort();
        let cand = (ls, es);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn check_graph(labels: &[u8], edges: &[(usize, usize)]) {
    let names: Vec<Generator> = labels.iter().map(|&c| gen(c)).collect();
    let g = canonicalize_graph(&LabeledDigraph::new(names, edges.to_vec())).unwrap();
    let (ls, es) = brute_canonical(labels, edges);
    let expected: Vec<Generator> = ls.iter().map(|&c| gen(c)).collect();
    assert_eq!(g.labels(), expected.as_slice());
    assert_eq!(g.edges(), es.as_slice());
    assert_eq!(canonicalize_graph(&g.to_digraph()).unwrap(), g);
}

#[test]
fn graph_canonical_form_is_the_permutation_minimum() {
    for n in 1..=5 {
        for labels in labelings(n, 2) {
            for parents in parent_arrays(n) {
                for flips in 0..1u32 << (n - 1) {
                    let edges: Vec<(usize, usize)> = (1..n)
                        .map(|i| {
                            let p = parents[i].unwrap();
                            if flips >> (i - 1) & 1 == 1 {
                                (i, p)
                            } else {
                                (p, i)
                            }
                        })
                        .collect();
                    check_graph(&labels, &edges);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph_canonical_form_weight_six(
        labels in prop::collection::vec(0u8..2, 6),
        parents in (1..6usize).map(|i| 0..i).collect::<Vec<_>>(),
        flips in prop::collection::vec(any::<bool>(), 5),
        shuffle_seed in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let edges: Vec<(usize, usize)> = parents.iter().zip(&flips).enumerate()
            .map(|(i, (&p, &f))| if f { (i + 1, p) } else { (p, i + 1) })
            .collect();
        check_graph(&labels, &edges);
        // relabeling the vertices gives the same representative
        let mut relabeled = [0; 6];
        for (old, &new) in shuffle_seed.iter().enumerate() {
            relabeled[new] = labels[old];
        }
        let moved: Vec<(usize, usize)> = edges.iter().map(|&(s, t)| (shuffle_seed[s], shuffle_seed[t])).collect();
        let a = canonicalize_graph(&LabeledDigraph::new(labels.iter().map(|&c| gen(c)).collect(), edges)).unwrap();
        let b = canonicalize_graph(&LabeledDigraph::new(relabeled.iter().map(|&c| gen(c)).collect(), moved)).unwrap();
        prop_assert_eq!(a, b);
    }
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut result, mut p) = (n, 1, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

#[test]
fn lyndon_counts_match_the_witt_formula() {
    for k in 1..=3u8 {
        let alphabet: Vec<Generator> = (0..k).map(gen).collect();
        let words = lyndon_words(&alphabet, 7);
        for n in 1..=7usize {
            let witt: i64 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| mobius(d) * (k as i64).pow((n / d) as u32))
                .sum::<i64>()
                / n as i64;
            let count = words.iter().filter(|w| w.len() == n).count() as i64;
            assert_eq!(count, witt, "k={k} n={n}");
        }
    }
}

#[test]
fn lyndon_test_is_the_rotation_test() {
    for n in 1..=6 {
        for labels in labelings(n, 2) {
            let rotations_larger = (1..n).all(|r| {
                let rotated: Vec<u8> = labels[r..].iter().chain(&labels[..r]).copied().collect();
                labels < rotated
            });
            let w = Word::new(labels.iter().map(|&c| gen(c)).collect()).unwrap();
            assert_eq!(is_lyndon(&w), rotations_larger);
        }
    }
}

/// Associative expansion computed on plain strings.
fn string_expansion(l: &LieExpr) -> HashMap<String, i64> {
    match l {
        LieExpr::Leaf(g) => HashMap::from([(g.name().to_string(), 1)]),
        LieExpr::Bracket(x, y) => {
            let (x, y) = (string_expansion(x), string_expansion(y));
            let mut out: HashMap<String, i64> = HashMap::new();
            for (u, a) in &x {
                for (v, b) in &y {
                    *out.entry(format!("{u}{v}")).or_default() += a * b;
                    *out.entry(format!("{v}{u}")).or_default() -= a * b;
                }
            }
            out.retain(|_, c| *c != 0);
            out
        }
    }
}

#[test]
fn worked_coefficient_by_string_expansion() {
    let l = parse_lie("[[[b,a],b],[a,b]]").unwrap();
    assert_eq!(string_expansion(&l)["abbba"], 2);
    let l = parse_lie("[a,[b,[b,[b,a]]]]").unwrap();
    assert_eq!(string_expansion(&l)["abbab"], -3);
}

proptest! {
    #[test]
    fn assoc_expansion_matches_string_oracle(l in common::lie(3, 6)) {
        let lib = expand_assoc(&l);
        let oracle = string_expansion(&l);
        prop_assert_eq!(lib.len(), oracle.len());
        for (w, c) in lib.iter() {
            prop_assert_eq!(c, &scalar(oracle[&w.to_string()]));
        }
    }

    #[test]
    fn shuffle_matches_interleaving_count(u in common::word(3, 4), v in common::word(3, 3)) {
        let (n, m) = (u.len(), v.len());
        let mut oracle: HashMap<String, i64> = HashMap::new();
        // each subset of positions for the letters of u
        for mask in 0u32..1 << (n + m) {
            if mask.count_ones() as usize != n {
                continue;
            }
            let (mut i, mut j, mut s) = (0, 0, String::new());
            for pos in 0..n + m {
                if mask >> pos & 1 == 1 {
                    s.push_str(u.letters()[i].name());
                    i += 1;
                } else {
                    s.push_str(v.letters()[j].name());
                    j += 1;
                }
            }
            *oracle.entry(s).or_default() += 1;
        }
        let lib = shuffle(&u, &v);
        prop_assert_eq!(lib.len(), oracle.len());
        for (w, c) in lib.iter() {
            prop_assert_eq!(c, &scalar(oracle[&w.to_string()]));
        }
    }
}

fn brute_automorphisms(labels: &[u8], edges: &[(usize, usize)]) -> u64 {
    let n = labels.len();
    let mut sorted = edges.to_vec();
    sorted.sort();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        if (0..n).all(|v| labels[perm[v]] == labels[v]) {
            let mut moved: Vec<(usize, usize)> = edges.iter().map(|&(s, t)| (perm[s], perm[t])).collect();
            moved.sort();
            count += (moved == sorted) as u64;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    count
}

#[test]
fn automorphism_counts_match_brute_force() {
    for n in 1..=6 {
        for labels in labelings(n, 2) {
            let names: Vec<Generator> = labels.iter().map(|&c| gen(c)).collect();
            for parents in parent_arrays(n) {
                let edges: Vec<(usize, usize)> = (1..n).map(|i| (parents[i].unwrap(), i)).collect();
                let t = RootedTree::from_parents(&names, &parents).unwrap();
                // a rooted tree's automorphisms are those of its downward-oriented graph
                let expected = brute_automorphisms(&labels, &edges);
                assert_eq!(t.automorphism_count(), expected.into());
                if n <= 5 {
                    for flips in 0..1u32 << (n - 1) {
                        let e: Vec<(usize, usize)> = edges
                            .iter()
                            .enumerate()
                            .map(|(i, &(p, c))| if flips >> i & 1 == 1 { (c, p) } else { (p, c) })
                            .collect();
                        let g = canonicalize_graph(&LabeledDigraph::new(names.clone(), e.clone())).unwrap();
                        assert_eq!(g.automorphism_count(), brute_automorphisms(&labels, &e).into());
                    }
                }
            }
        }
    }
}
