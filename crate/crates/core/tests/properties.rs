//! Algebraic identities on randomized inputs.

mod common;

use common::{combo, gen, graph, lie, tree, word};
use configpair::cobracket::{cobracket, cobracket_basis, map_tensor};
use configpair::envelope::{
    expand_assoc, expand_graph, expand_prelie, i_graph, i_graph_combo, i_prelie, i_prelie_combo, q_graph_combo,
    q_prelie_combo,
};
use configpair::freealg::{commutator, product, shuffle, AlgebraBasis};
use configpair::pairing::{edge_split_terms, pair_expand_basis, sigma_value, EdgeShape, VertexLeafBijection};
use configpair::syntax::{parse, parse_combo, Parse};
use configpair::terms::{scalar, swap_tensor};
use configpair::{LieExpr, LinearCombo, OrientedGraph, RootedTree, Scalar, Shape, Word};
use proptest::prelude::*;

fn associator<B: AlgebraBasis>(x: &LinearCombo<B>, y: &LinearCombo<B>, z: &LinearCombo<B>) -> LinearCombo<B> {
    product(&product(x, y), z) - product(x, &product(y, z))
}

fn jacobi<B: AlgebraBasis>(x: &LinearCombo<B>, y: &LinearCombo<B>, z: &LinearCombo<B>) -> LinearCombo<B> {
    commutator(&commutator(x, y), z) + commutator(&commutator(y, z), x) + commutator(&commutator(z, x), y)
}

fn bracket_laws<B: AlgebraBasis>(
    x: &LinearCombo<B>,
    y: &LinearCombo<B>,
    z: &LinearCombo<B>,
) -> Result<(), TestCaseError> {
    prop_assert!((commutator(x, y) + commutator(y, x)).is_zero());
    prop_assert!(jacobi(x, y, z).is_zero());
    Ok(())
}

/// A Lie expression with exactly `n` leaves, all labelled by one letter.
fn lie_of_weight(n: usize) -> BoxedStrategy<LieExpr> {
    if n == 1 {
        return Just(LieExpr::leaf(gen(0))).boxed();
    }
    (1..n)
        .prop_flat_map(move |k| (lie_of_weight(k), lie_of_weight(n - k)))
        .prop_map(|(x, y)| LieExpr::bracket(x, y))
        .boxed()
}

/// Grafting one edge between graphs is not preLie: on three single vertices the
/// associator has a term with two arrows into the last factor that the swapped
/// associator lacks.
#[test]
fn graph_associator_is_not_symmetric_in_the_last_two_slots() {
    let v = |i| LinearCombo::basis(OrientedGraph::single(gen(i)));
    let (p, q, r) = (v(0), v(1), v(2));
    let lhs = associator(&p, &q, &r);
    let into_r = OrientedGraph::new(vec![gen(0), gen(1), gen(2)], vec![(0, 2), (1, 2)]).unwrap();
    assert_eq!(lhs.coefficient_of(&into_r), scalar(-1));
    assert_ne!(lhs, associator(&p, &r, &q));
    assert_ne!(lhs, associator(&q, &p, &r));
}

fn one_letter_tree(n: usize) -> impl Strategy<Value = RootedTree> {
    (1..n).map(|i| 0..i).collect::<Vec<_>>().prop_map(move |ps| {
        let parents: Vec<Option<usize>> = std::iter::once(None).chain(ps.into_iter().map(Some)).collect();
        RootedTree::from_parents(&vec![gen(0); n], &parents).unwrap()
    })
}

fn check_split<S>(shape: &S, l: &LieExpr, sigma: &VertexLeafBijection) -> Result<(), TestCaseError>
where
    S: EdgeShape<Label = configpair::Generator>,
{
    let terms = edge_split_terms(shape, l, sigma).unwrap();
    prop_assert!(terms.iter().filter(|&&t| t != 0).count() <= 1, "terms {:?}", terms);
    prop_assert_eq!(terms.iter().sum::<i64>(), sigma_value(shape, l, sigma).unwrap());
    Ok(())
}

fn round_trip<B: Parse + Ord + Clone + std::fmt::Display + std::fmt::Debug>(x: &B) -> Result<(), TestCaseError> {
    let printed = x.to_string();
    prop_assert_eq!(&parse::<B>(&printed).unwrap(), x, "printed as {}", printed);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn combo_arithmetic_laws(
        x in combo(word(2, 3), 4),
        y in combo(word(2, 3), 4),
        z in combo(word(2, 3), 4),
        k in -4i64..=4,
    ) {
        let k = scalar(k);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!((&x + &y).scale(&k), x.scale(&k) + y.scale(&k));
        prop_assert!((&x - &x).is_zero());
        prop_assert!(x.iter().all(|(_, c)| *c != Scalar::from_integer(0.into())));
        // the product is distributive over addition
        prop_assert_eq!(product(&x, &(&y + &z)), product(&x, &y) + product(&x, &z));
    }

    #[test]
    fn shuffle_is_commutative_and_associative(u in word(3, 3), v in word(3, 2), w in word(3, 2)) {
        prop_assert_eq!(shuffle(&u, &v), shuffle(&v, &u));
        let left = shuffle(&u, &v).map_linear(|s| shuffle(s, &w));
        let right = shuffle(&v, &w).map_linear(|s| shuffle(&u, s));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tree_product_is_prelie(x in tree(2, 2), y in tree(2, 2), z in tree(2, 1)) {
        let (x, y, z) = (LinearCombo::basis(x), LinearCombo::basis(y), LinearCombo::basis(z));
        prop_assert_eq!(associator(&x, &y, &z), associator(&x, &z, &y));
    }

    #[test]
    fn graph_product_is_lie_admissible(x in graph(2, 2), y in graph(2, 2), z in graph(2, 2)) {
        let (x, y, z) = (LinearCombo::basis(x), LinearCombo::basis(y), LinearCombo::basis(z));
        let total = associator(&x, &y, &z) - associator(&x, &z, &y) - associator(&y, &x, &z)
            + associator(&y, &z, &x) + associator(&z, &x, &y) - associator(&z, &y, &x);
        prop_assert!(total.is_zero());
    }

    #[test]
    fn bracket_is_a_lie_bracket_on_every_side(
        w in prop::collection::vec(combo(word(2, 2), 2), 3),
        t in prop::collection::vec(combo(tree(2, 2), 2), 3),
        g in prop::collection::vec(combo(graph(2, 2), 2), 3),
    ) {
        bracket_laws(&w[0], &w[1], &w[2])?;
        bracket_laws(&t[0], &t[1], &t[2])?;
        bracket_laws(&g[0], &g[1], &g[2])?;
    }

    #[test]
    fn expansions_factor_through_the_projections(l in lie(3, 6)) {
        prop_assert_eq!(expand_assoc(&l), q_prelie_combo(&expand_prelie(&l)));
        prop_assert_eq!(expand_prelie(&l), q_graph_combo(&expand_graph(&l)));
    }

    #[test]
    fn expansions_respect_antisymmetry_and_jacobi(x in lie(2, 2), y in lie(2, 2), z in lie(2, 2)) {
        let b = LieExpr::bracket;
        let xy = b(x.clone(), y.clone());
        let yx = b(y.clone(), x.clone());
        prop_assert!((expand_graph(&xy) + expand_graph(&yx)).is_zero());
        prop_assert!((expand_prelie(&xy) + expand_prelie(&yx)).is_zero());
        prop_assert!((expand_assoc(&xy) + expand_assoc(&yx)).is_zero());
        let cyc = [
            b(b(x.clone(), y.clone()), z.clone()),
            b(b(y.clone(), z.clone()), x.clone()),
            b(b(z.clone(), x.clone()), y.clone()),
        ];
        prop_assert!(cyc.iter().map(expand_graph).fold(LinearCombo::zero(), |a, c| a + c).is_zero());
        prop_assert!(cyc.iter().map(expand_prelie).fold(LinearCombo::zero(), |a, c| a + c).is_zero());
        prop_assert!(cyc.iter().map(expand_assoc).fold(LinearCombo::zero(), |a, c| a + c).is_zero());
    }

    #[test]
    fn cobracket_is_co_antisymmetric(
        w in combo(word(3, 5), 3),
        t in combo(tree(3, 5), 3),
        g in combo(graph(3, 5), 3),
    ) {
        let minus = scalar(-1);
        prop_assert_eq!(swap_tensor(&cobracket(&w)), cobracket(&w).scale(&minus));
        prop_assert_eq!(swap_tensor(&cobracket(&t)), cobracket(&t).scale(&minus));
        prop_assert_eq!(swap_tensor(&cobracket(&g)), cobracket(&g).scale(&minus));
    }

    #[test]
    fn inclusions_are_coalgebra_maps(w in combo(word(3, 5), 3), t in combo(tree(3, 5), 3)) {
        let lhs = map_tensor(&cobracket(&w), i_prelie);
        prop_assert_eq!(lhs, cobracket(&i_prelie_combo(&w)));
        let lhs = map_tensor(&cobracket(&t), i_graph);
        prop_assert_eq!(lhs, cobracket(&i_graph_combo(&t)));
    }

    #[test]
    fn cobracket_is_compatible_with_pairing(x in lie(3, 3), y in lie(3, 3), seed in prop::collection::vec(-3i64..=3, 16)) {
        let l = LieExpr::bracket(x.clone(), y.clone());
        // weight the support of each expansion with arbitrary coefficients so the
        // check is not vacuous
        fn reweight<B: Ord + Clone>(c: LinearCombo<B>, seed: &[i64]) -> LinearCombo<B> {
            c.shapes().cloned().zip(seed.iter().cycle()).map(|(s, &k)| (s, scalar(k))).collect()
        }
        fn check<B: AlgebraBasis + configpair::cobracket::CobracketBasis>(
            phi: &LinearCombo<B>, x: &LieExpr<B::Label>, y: &LieExpr<B::Label>, l: &LieExpr<B::Label>,
        ) -> Result<(), TestCaseError> {
            let lhs: Scalar = phi.iter().map(|(s, c)| c * pair_expand_basis(s, l)).sum();
            let rhs: Scalar = phi
                .iter()
                .flat_map(|(s, c)| cobracket_basis(s).iter().map(move |((a, b), k)| c * k * pair_expand_basis(a, x) * pair_expand_basis(b, y)).collect::<Vec<_>>())
                .sum();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        }
        check(&reweight(expand_assoc(&l), &seed), &x, &y, &l)?;
        check(&reweight(expand_prelie(&l), &seed), &x, &y, &l)?;
        check(&reweight(expand_graph(&l), &seed), &x, &y, &l)?;
    }

    #[test]
    fn edge_split_has_at_most_one_live_term(
        (t, l, sigma) in (2usize..=6).prop_flat_map(|n| (
            one_letter_tree(n),
            lie_of_weight(n),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )),
        flips in prop::collection::vec(any::<bool>(), 5),
    ) {
        let sigma = VertexLeafBijection::new(sigma).unwrap();
        check_split(&t, &l, &sigma)?;
        check_split(&Word::new(vec![gen(0); t.labels().len()]).unwrap(), &l, &sigma)?;
        // the same underlying tree with some arrows reversed
        let d = OrientedGraph::from_rooted_tree(&t).to_digraph();
        let edges = d.edges.iter().zip(flips.iter().cycle()).map(|(&(a, b), &f)| if f { (b, a) } else { (a, b) }).collect();
        let g = configpair::terms::canonicalize_graph(&configpair::terms::LabeledDigraph::new(d.labels.clone(), edges)).unwrap();
        check_split(&g, &l, &sigma)?;
    }

    #[test]
    fn print_parse_round_trip(
        w in word(4, 6),
        t in tree(4, 6),
        g in graph(4, 6),
        l in lie(4, 6),
        c in combo(tree(3, 4), 4),
        d in combo(graph(3, 4), 4),
    ) {
        round_trip(&w)?;
        round_trip(&t)?;
        round_trip(&g)?;
        round_trip(&l)?;
        prop_assert_eq!(parse_combo::<RootedTree>(&c.to_string()).unwrap(), c);
        prop_assert_eq!(parse_combo::<OrientedGraph>(&d.to_string()).unwrap(), d);
    }
}
