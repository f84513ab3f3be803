//! Operad axioms, the projections between families and the binary-generation count.

use configpair::freealg::product;
use configpair::liedual::Echelon;
use configpair::operads::{basis, binary_generated_dim, dims, Family, OperadElement};
use configpair::terms::scalar;
use configpair::{LinearCombo, OrientedGraph, RootedTree, Shape};
use proptest::prelude::*;

fn combine(family: Family, n: usize, coeffs: &[i64]) -> OperadElement {
    let parts = basis(family, n).unwrap();
    let pick = |e: &OperadElement, c: i64| (e.clone(), scalar(c));
    let terms: Vec<(OperadElement, _)> = parts
        .iter()
        .zip(coeffs.iter().cycle())
        .map(|(e, &c)| pick(e, c))
        .collect();
    macro_rules! sum {
        ($variant:ident) => {{
            let mut total = LinearCombo::zero();
            for (e, c) in &terms {
                let OperadElement::$variant(_, x) = e else {
                    unreachable!()
                };
                total.add_scaled(x, c);
            }
            OperadElement::$variant(n, total)
        }};
    }
    match family {
        Family::Assoc => sum!(Assoc),
        Family::Lie => sum!(Lie),
        Family::PreLie => sum!(PreLie),
        Family::Graph => sum!(Graph),
    }
}

fn element(family: Family) -> impl Strategy<Value = OperadElement> {
    (1usize..=3, prop::collection::vec(-2i64..=2, 1..8)).prop_map(move |(n, cs)| combine(family, n, &cs))
}

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative_and_commutes_on_disjoint_slots(
        (x, y, z) in family().prop_flat_map(|f| (element(f), element(f), element(f))),
    ) {
        let (n, m) = (x.arity(), y.arity());
        for i in 1..=n {
            for j in 1..=m {
                let lhs = x.compose(i, &y).unwrap().compose(i + j - 1, &z).unwrap();
                let rhs = x.compose(i, &y.compose(j, &z).unwrap()).unwrap();
                prop_assert!(lhs.equivalent(&rhs), "sequential {} {}", i, j);
            }
            for k in i + 1..=n {
                let lhs = x.compose(i, &y).unwrap().compose(k + m - 1, &z).unwrap();
                let rhs = x.compose(k, &z).unwrap().compose(i, &y).unwrap();
                prop_assert!(lhs.equivalent(&rhs), "parallel {} {}", i, k);
            }
        }
    }

    #[test]
    fn projections_commute_with_composition(x in element(Family::Graph), y in element(Family::Graph)) {
        for i in 1..=x.arity() {
            let composed = x.compose(i, &y).unwrap();
            let qg = composed.q_graph().unwrap();
            prop_assert_eq!(&qg, &x.q_graph().unwrap().compose(i, &y.q_graph().unwrap()).unwrap());
            let (px, py) = (x.q_graph().unwrap(), y.q_graph().unwrap());
            prop_assert_eq!(qg.q_prelie().unwrap(), px.q_prelie().unwrap().compose(i, &py.q_prelie().unwrap()).unwrap());
        }
    }

    #[test]
    fn enveloping_maps_commute_with_composition(x in element(Family::Lie), y in element(Family::Lie)) {
        for i in 1..=x.arity() {
            let composed = x.compose(i, &y).unwrap();
            prop_assert_eq!(composed.u_graph().unwrap(), x.u_graph().unwrap().compose(i, &y.u_graph().unwrap()).unwrap());
            prop_assert_eq!(composed.u_assoc().unwrap(), x.u_assoc().unwrap().compose(i, &y.u_assoc().unwrap()).unwrap());
        }
    }

    #[test]
    fn symmetric_action_is_an_action(
        x in element(Family::Graph),
        p in Just(vec![1usize, 2, 3]).prop_shuffle(),
        q in Just(vec![1usize, 2, 3]).prop_shuffle(),
    ) {
        let n = x.arity();
        let restrict = |p: &[usize]| -> Vec<usize> { p.iter().copied().filter(|&v| v <= n).collect() };
        let (p, q) = (restrict(&p), restrict(&q));
        let pq: Vec<usize> = (1..=n).map(|j| p[q[j - 1] - 1]).collect();
        prop_assert_eq!(x.permute(&q).unwrap().permute(&p).unwrap(), x.permute(&pq).unwrap());
    }
}

#[test]
fn projections_of_the_enveloping_maps() {
    for n in 1..=4 {
        for l in basis(Family::Lie, n).unwrap() {
            let ua = l.u_assoc().unwrap();
            assert_eq!(l.u_prelie().unwrap().q_prelie().unwrap(), ua);
            assert_eq!(l.u_graph().unwrap().q_graph().unwrap().q_prelie().unwrap(), ua);
        }
    }
}

#[test]
fn compose_matches_the_free_products() {
    let mu_tree = OperadElement::prelie(2, LinearCombo::basis(configpair::syntax::parse("1(2)").unwrap())).unwrap();
    let mu_graph = OperadElement::graph(2, LinearCombo::basis(configpair::syntax::parse("1->2").unwrap())).unwrap();
    for n in 1..=3 {
        for m in 1..=2 {
            for (x, y) in basis(Family::PreLie, n)
                .unwrap()
                .iter()
                .zip(basis(Family::PreLie, m).unwrap().iter().cycle())
            {
                let (OperadElement::PreLie(_, xs), OperadElement::PreLie(_, ys)) = (x, y) else {
                    unreachable!()
                };
                let shifted = ys.map_basis(|t: &RootedTree<usize>| t.map_labels(&|j| j + n));
                let via_operad = mu_tree.compose(2, y).unwrap().compose(1, x).unwrap();
                assert_eq!(via_operad, OperadElement::PreLie(n + m, product(xs, &shifted)));
            }
            for (x, y) in basis(Family::Graph, n)
                .unwrap()
                .iter()
                .zip(basis(Family::Graph, m).unwrap().iter().cycle())
            {
                let (OperadElement::Graph(_, xs), OperadElement::Graph(_, ys)) = (x, y) else {
                    unreachable!()
                };
                let shifted = ys.map_basis(|g: &OrientedGraph<usize>| g.map_labels(|j| j + n));
                let via_operad = mu_graph.compose(2, y).unwrap().compose(1, x).unwrap();
                assert_eq!(via_operad, OperadElement::Graph(n + m, product(xs, &shifted)));
            }
        }
    }
}

#[test]
fn dimensions_follow_the_closed_forms() {
    let fact = |n: usize| (1..=n).product::<usize>();
    for n in 1..=5 {
        assert_eq!(dims(Family::Assoc, n).unwrap(), fact(n));
        assert_eq!(dims(Family::Lie, n).unwrap(), fact(n - 1));
        assert_eq!(dims(Family::PreLie, n).unwrap(), n.pow(n as u32 - 1));
        let graphs = if n == 1 { 1 } else { n.pow(n as u32 - 2) << (n - 1) };
        assert_eq!(dims(Family::Graph, n).unwrap(), graphs);
    }
}

/// The span of every two-fold product of the vertices 1, 2, 3 in the free graph algebra.
#[test]
fn graph_arity_three_is_not_binary_generated() {
    let v = |i: usize| LinearCombo::basis(OrientedGraph::single(i));
    let mut span = Echelon::new();
    for p in [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]] {
        let (a, b, c) = (v(p[0]), v(p[1]), v(p[2]));
        span.insert(product(&product(&a, &b), &c));
        span.insert(product(&a, &product(&b, &c)));
    }
    assert_eq!(span.rank(), 11);
    assert_eq!(binary_generated_dim(Family::Graph, 3).unwrap(), span.rank());
    assert!(span.rank() < dims(Family::Graph, 3).unwrap());
    assert!(basis(Family::Graph, 3).unwrap().iter().all(|g| match g {
        OperadElement::Graph(_, x) => x.shapes().all(|s| s.weight() == 3),
        _ => false,
    }));
}

#[test]
fn other_families_are_binary_generated_in_arity_three() {
    for family in [Family::Assoc, Family::Lie, Family::PreLie] {
        assert_eq!(
            binary_generated_dim(family, 3).unwrap(),
            dims(family, 3).unwrap(),
            "{family}"
        );
    }
}
