//! Enumeration of every basis shape with a given label content.

use std::collections::{BTreeSet, HashMap};

use super::{Label, Multidegree, OrientedGraph, RootedTree, Word};

/// Distinct orderings of a multiset, in lexicographic order.
pub fn distinct_permutations<L: Label>(md: &Multidegree<L>) -> Vec<Vec<L>> {
    fn go<L: Label>(remaining: &mut Vec<(L, usize)>, prefix: &mut Vec<L>, total: usize, out: &mut Vec<Vec<L>>) {
        if prefix.len() == total {
            out.push(prefix.clone());
            return;
        }
        for i in 0..remaining.len() {
            if remaining[i].1 == 0 {
                continue;
            }
            remaining[i].1 -= 1;
            prefix.push(remaining[i].0.clone());
            go(remaining, prefix, total, out);
            prefix.pop();
            remaining[i].1 += 1;
        }
    }
    let mut remaining: Vec<(L, usize)> = md.iter().map(|(l, c)| (l.clone(), c)).collect();
    let mut out = Vec::new();
    let total = md.total();
    if total > 0 {
        go(&mut remaining, &mut Vec::new(), total, &mut out);
    }
    out
}

pub fn words_of<L: Label>(md: &Multidegree<L>) -> Vec<Word<L>> {
    distinct_permutations(md)
        .into_iter()
        .filter_map(|letters| Word::new(letters).ok())
        .collect()
}

/// Every rooted tree with the given label content, sorted.
///
/// Removing a non-root leaf from a tree of weight n ≥ 2 leaves a tree of
/// weight n−1, so attaching one labeled leaf everywhere to the smaller trees
/// reaches every tree.
pub fn trees_of<L: Label>(md: &Multidegree<L>) -> Vec<RootedTree<L>> {
    let mut memo = HashMap::new();
    trees_memo(md, &mut memo).into_iter().collect()
}

fn trees_memo<L: Label>(
    md: &Multidegree<L>,
    memo: &mut HashMap<Multidegree<L>, BTreeSet<RootedTree<L>>>,
) -> BTreeSet<RootedTree<L>> {
    if let Some(hit) = memo.get(md) {
        return hit.clone();
    }
    let mut out = BTreeSet::new();
    if md.total() == 1 {
        let l = md.support().next().expect("weight one").clone();
        out.insert(RootedTree::leaf(l));
    } else if md.total() > 1 {
        let support: Vec<L> = md.support().cloned().collect();
        for l in support {
            let smaller = md.without_one(&l).expect("label in support");
            let leaf = RootedTree::leaf(l.clone());
            for t in trees_memo(&smaller, memo) {
                out.extend(t.graft_everywhere(&leaf));
            }
        }
    }
    memo.insert(md.clone(), out.clone());
    out
}

/// Every oriented tree with the given label content, sorted.
pub fn graphs_of<L: Label>(md: &Multidegree<L>) -> Vec<OrientedGraph<L>> {
    let mut memo = HashMap::new();
    graphs_memo(md, &mut memo).into_iter().collect()
}

fn graphs_memo<L: Label>(
    md: &Multidegree<L>,
    memo: &mut HashMap<Multidegree<L>, BTreeSet<OrientedGraph<L>>>,
) -> BTreeSet<OrientedGraph<L>> {
    if let Some(hit) = memo.get(md) {
        return hit.clone();
    }
    let mut out = BTreeSet::new();
    if md.total() == 1 {
        let l = md.support().next().expect("weight one").clone();
        out.insert(OrientedGraph::single(l));
    } else if md.total() > 1 {
        let support: Vec<L> = md.support().cloned().collect();
        for l in support {
            let smaller = md.without_one(&l).expect("label in support");
            let vertex = OrientedGraph::single(l.clone());
            for g in graphs_memo(&smaller, memo) {
                for v in 0..g.vertex_count() {
                    out.insert(g.join(v, &vertex, 0));
                    out.insert(vertex.join(0, &g, v));
                }
            }
        }
    }
    memo.insert(md.clone(), out.clone());
    out
}

/// All multidegrees over `alphabet` with total weight in `1..=max_weight`.
pub fn multidegrees_up_to<L: Label>(alphabet: &[L], max_weight: usize) -> Vec<Multidegree<L>> {
    fn go<L: Label>(alphabet: &[L], i: usize, left: usize, acc: &mut Vec<(L, usize)>, out: &mut Vec<Multidegree<L>>) {
        if i == alphabet.len() {
            let md = Multidegree::from_counts(acc.iter().cloned());
            if md.total() > 0 {
                out.push(md);
            }
            return;
        }
        for c in 0..=left {
            acc.push((alphabet[i].clone(), c));
            go(alphabet, i + 1, left - c, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(alphabet, 0, max_weight, &mut Vec::new(), &mut out);
    out.sort_by_key(|md| md.total());
    out
}
