//! Enveloping polynomials of Lie expressions and the maps between the three
//! presentations: `q_prelie`, `q_graph` and their duals `i_prelie`, `i_graph`.

use crate::freealg::evaluate_bracket;
use crate::terms::{Label, LieExpr, LinearCombo, OrientedGraph, RootedTree, Word};

/// `p_A`: the associative polynomial of a Lie expression.
pub fn expand_assoc<L: Label>(l: &LieExpr<L>) -> LinearCombo<Word<L>> {
    evaluate_bracket(l)
}

/// `p_p`: the preLie polynomial, a combination of rooted trees.
pub fn expand_prelie<L: Label>(l: &LieExpr<L>) -> LinearCombo<RootedTree<L>> {
    evaluate_bracket(l)
}

/// `p_G`: the graph polynomial, a combination of oriented trees.
pub fn expand_graph<L: Label>(l: &LieExpr<L>) -> LinearCombo<OrientedGraph<L>> {
    evaluate_bracket(l)
}

/// Linear extension of an expansion to combinations of Lie expressions.
pub fn expand_combo<B: Ord + Clone, L: Label>(
    l: &LinearCombo<LieExpr<L>>,
    expand: impl Fn(&LieExpr<L>) -> LinearCombo<B>,
) -> LinearCombo<B> {
    l.map_linear(|e| expand(e))
}

/// Ladder trees go to their root-to-leaf word; every other tree to 0.
pub fn q_prelie<L: Label>(t: &RootedTree<L>) -> LinearCombo<Word<L>> {
    match t.ladder_labels() {
        Some(letters) => LinearCombo::basis(Word::new(letters).expect("trees are non-empty")),
        None => LinearCombo::zero(),
    }
}

/// Rooted graphs (all edges pointing away from one vertex) go to their tree; others to 0.
pub fn q_graph<L: Label>(g: &OrientedGraph<L>) -> LinearCombo<RootedTree<L>> {
    match g.to_rooted_tree() {
        Some(t) => LinearCombo::basis(t),
        None => LinearCombo::zero(),
    }
}

pub fn q_prelie_combo<L: Label>(x: &LinearCombo<RootedTree<L>>) -> LinearCombo<Word<L>> {
    x.map_linear(q_prelie)
}

pub fn q_graph_combo<L: Label>(x: &LinearCombo<OrientedGraph<L>>) -> LinearCombo<RootedTree<L>> {
    x.map_linear(q_graph)
}

/// The ladder `w₁(w₂(…(w_n)))`.
pub fn i_prelie<L: Label>(w: &Word<L>) -> RootedTree<L> {
    RootedTree::ladder(w.letters()).expect("words are non-empty")
}

/// The tree with every edge directed away from the root.
pub fn i_graph<L: Label>(t: &RootedTree<L>) -> OrientedGraph<L> {
    OrientedGraph::from_rooted_tree(t)
}

pub fn i_prelie_combo<L: Label>(x: &LinearCombo<Word<L>>) -> LinearCombo<RootedTree<L>> {
    x.map_basis(i_prelie)
}

pub fn i_graph_combo<L: Label>(x: &LinearCombo<RootedTree<L>>) -> LinearCombo<OrientedGraph<L>> {
    x.map_basis(i_graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_combo, parse_graph, parse_lie, parse_tree, parse_word};
    use crate::terms::{scalar, Shape};

    fn lie(s: &str) -> LieExpr {
        parse_lie(s).unwrap()
    }

    #[test]
    fn assoc_expansions() {
        assert_eq!(expand_assoc(&lie("[a,b]")).to_string(), "ab - ba");
        assert_eq!(
            expand_assoc(&lie("[[a,b],c]")),
            parse_combo("abc - bac - cab + cba").unwrap()
        );
        // abb|ba contributes (−1)(−1) and ab|bba contributes −(1)(−1)
        let e = expand_assoc(&lie("[[[b,a],b],[a,b]]"));
        assert_eq!(e.coefficient_of(&parse_word("abbba").unwrap()), scalar(2));
    }

    #[test]
    fn prelie_expansions() {
        assert_eq!(expand_prelie(&lie("[a,b]")), parse_combo("a(b) - b(a)").unwrap());
        let expected = parse_combo("a(b,c) + a(b(c)) - b(a,c) - b(a(c)) - c(a(b)) + c(b(a))").unwrap();
        assert_eq!(expand_prelie(&lie("[[a,b],c]")), expected);
        let l = lie("[[a,[b,c]],[d,a]]");
        assert!(expand_prelie(&l).shapes().all(|t| t.weight() == 5));
    }

    #[test]
    fn graph_expansions() {
        assert_eq!(expand_graph(&lie("[a,b]")), parse_combo("a->b - b->a").unwrap());
        let expected = parse_combo(
            "(a->b, a->c) + (a->b, b->c) - (b->a, a->c) - (b->a, b->c) \
             - (c->a, a->b) - (c->b, a->b) + (c->a, b->a) + (c->b, b->a)",
        )
        .unwrap();
        let got = expand_graph(&lie("[[a,b],c]"));
        assert_eq!(got.len(), 8);
        assert_eq!(got, expected);
        assert!(got.shapes().all(|g| g.edges().len() == 2));
    }

    #[test]
    fn quotient_maps() {
        assert_eq!(q_prelie(&parse_tree("a(b(c))").unwrap()), parse_combo("abc").unwrap());
        assert!(q_prelie(&parse_tree("a(b,c)").unwrap()).is_zero());
        assert_eq!(
            q_graph(&parse_graph("a->b, a->c").unwrap()),
            LinearCombo::basis(parse_tree("a(b,c)").unwrap())
        );
        assert!(q_graph(&parse_graph("a->b, c->b").unwrap()).is_zero());
        let w = parse_word("abcd").unwrap();
        let back = q_prelie_combo(&q_graph(&i_graph(&i_prelie(&w))));
        assert_eq!(back, LinearCombo::basis(w));
    }

    #[test]
    fn inclusion_maps() {
        assert_eq!(i_prelie(&parse_word("abc").unwrap()), parse_tree("a(b(c))").unwrap());
        assert_eq!(
            i_graph(&parse_tree("a(b,c)").unwrap()),
            parse_graph("a->b, a->c").unwrap()
        );
        assert_eq!(
            i_graph(&i_prelie(&parse_word("ab").unwrap())),
            parse_graph("a->b").unwrap()
        );
    }

    #[test]
    fn numeric_labels_expand() {
        let l = LieExpr::left_normed(&[1usize, 2, 3]).unwrap();
        assert_eq!(expand_assoc(&l).len(), 4);
    }
}
