//! The pairing algorithms agree with each other and factor through the inclusions.

mod common;

use common::{gen, lie, word};
use configpair::cobracket::CobracketBasis;
use configpair::envelope::{i_graph, i_prelie};
use configpair::freealg::{evaluate_bracket, evaluate_dual, AlgebraBasis};
use configpair::liedual::SpanningBracketSet;
use configpair::pairing::{
    pair_expand_basis, pair_right_normed_basis, pair_sigma_basis, pair_sigma_prepared, EdgeShape, LieGeometry,
    RecursivePairer,
};
use configpair::syntax::{parse, parse_lie};
use configpair::terms::enumerate::{graphs_of, multidegrees_up_to, trees_of, words_of};
use configpair::terms::scalar;
use configpair::{Generator, LieExpr, LinearCombo, Multidegree, Word};
use proptest::prelude::*;

fn agree<B>(shapes: Vec<B>, brackets: &[LieExpr]) -> usize
where
    B: AlgebraBasis<Label = Generator> + CobracketBasis + EdgeShape,
{
    let mut rec = RecursivePairer::new();
    let mut count = 0;
    for l in brackets {
        let expansion = evaluate_bracket::<B>(l);
        let geometry = LieGeometry::new(l);
        for s in &shapes {
            let e = evaluate_dual(&LinearCombo::basis(s.clone()), &expansion);
            assert_eq!(e, rec.pair_basis(s, l), "recursive {s} {l}");
            assert_eq!(e, pair_sigma_prepared(s, &geometry), "sigma {s} {l}");
            count += 1;
        }
    }
    count
}

#[test]
fn all_algorithms_agree_up_to_weight_five() {
    let mut count = 0;
    for md in multidegrees_up_to(&[gen(0), gen(1), gen(2)], 5) {
        let brackets = SpanningBracketSet::new(&md).brackets().to_vec();
        count += agree(words_of(&md), &brackets);
        count += agree(trees_of(&md), &brackets);
        count += agree(graphs_of(&md), &brackets);
        for w in words_of(&md) {
            for l in &brackets {
                let right = LieExpr::right_normed(&l.leaves()).unwrap();
                assert_eq!(
                    pair_right_normed_basis(&w, &right).unwrap(),
                    pair_expand_basis(&w, &right)
                );
            }
        }
    }
    assert!(count > 1000, "{count}");
}

#[test]
fn worked_values() {
    let w: Word = parse("abcdef").unwrap();
    for (l, v) in [
        ("[a,[f,[b,[e,[c,d]]]]]", 1),
        ("[f,[a,[e,[b,[d,c]]]]]", -1),
        ("[f,[e,[a,[c,[b,d]]]]]", 0),
    ] {
        let l = parse_lie(l).unwrap();
        assert_eq!(pair_right_normed_basis(&w, &l).unwrap(), scalar(v));
        assert_eq!(pair_expand_basis(&w, &l), scalar(v));
        assert_eq!(pair_sigma_basis(&w, &l), scalar(v));
    }
    let l = parse_lie("[a,[b,[b,[b,a]]]]").unwrap();
    let w: Word = parse("abbab").unwrap();
    assert_eq!(pair_right_normed_basis(&w, &l).unwrap(), scalar(-3));
    assert_eq!(RecursivePairer::new().pair_basis(&w, &l), scalar(-3));
    // the expansion of [[[b,a],b],[a,b]] has abbba with coefficient 2
    let l = parse_lie("[[[b,a],b],[a,b]]").unwrap();
    let w: Word = parse("abbba").unwrap();
    assert_eq!(pair_expand_basis(&w, &l), scalar(2));
    assert_eq!(RecursivePairer::new().pair_basis(&w, &l), scalar(2));
    assert_eq!(pair_sigma_basis(&w, &l), scalar(2));
}

#[test]
fn repeated_labels_count_automorphisms() {
    // b(a,a) appears once in the expansion of [[b,a],a] but has two symmetries
    let l = parse_lie("[[b,a],a]").unwrap();
    let t: configpair::RootedTree = parse("b(a,a)").unwrap();
    assert_eq!(pair_expand_basis(&t, &l), scalar(2));
    assert_eq!(pair_sigma_basis(&t, &l), scalar(2));
    assert_eq!(RecursivePairer::new().pair_basis(&t, &l), scalar(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pairing_factors_through_the_inclusions(w in word(2, 6), l in lie(2, 6)) {
        let t = i_prelie(&w);
        let g = i_graph(&t);
        let v = pair_expand_basis(&w, &l);
        prop_assert_eq!(&v, &pair_expand_basis(&t, &l));
        prop_assert_eq!(&v, &pair_expand_basis(&g, &l));
        prop_assert_eq!(&v, &pair_sigma_basis(&g, &l));
    }

    #[test]
    fn random_weight_six_instances_agree(l in lie(3, 6), seed in any::<prop::sample::Index>()) {
        let md = Multidegree::from_labels(l.leaves());
        let trees = trees_of(&md);
        let t = seed.get(&trees);
        prop_assert_eq!(pair_expand_basis(t, &l), pair_sigma_basis(t, &l));
        prop_assert_eq!(pair_expand_basis(t, &l), RecursivePairer::new().pair_basis(t, &l));
        let graphs = graphs_of(&md);
        let g = seed.get(&graphs);
        prop_assert_eq!(pair_expand_basis(g, &l), pair_sigma_basis(g, &l));
        prop_assert_eq!(pair_expand_basis(g, &l), RecursivePairer::new().pair_basis(g, &l));
    }
}
