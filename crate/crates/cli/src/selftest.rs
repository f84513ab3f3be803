//! The acceptance suite: ten numbered criteria, each reduced to pass/fail
//! with a one-line summary of what was checked.

use std::fmt;

use configpair::cobracket::{cobracket, CobracketBasis};
use configpair::envelope::{expand_graph, expand_prelie, i_graph, i_prelie};
use configpair::freealg::{evaluate_bracket, evaluate_dual, product, shuffle, AlgebraBasis};
use configpair::liedual::{
    graft_kernel, kernel_generators, kernel_member, kernel_member_element, lie_dual_rank, long_graph_reduce,
    Attachment, SpanningBracketSet,
};
use configpair::operads::{basis, binary_generated_dim, dims, Family};
use configpair::pairing::{
    pair_expand, pair_expand_basis, pair_right_normed_basis, pair_sigma_basis, pair_sigma_prepared, EdgeShape,
    LieGeometry, RecursivePairer,
};
use configpair::syntax::{parse, parse_combo, Parse};
use configpair::terms::enumerate::{graphs_of, multidegrees_up_to, trees_of, words_of};
use configpair::terms::scalar;
use configpair::{Generator, LieExpr, LinearCombo, Multidegree, OrientedGraph, RootedTree, Scalar, Side, Word};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::random;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {:>2}. {}: {}", self.number, self.title, self.detail)
    }
}

type Check = fn() -> (bool, String);

pub const CRITERIA: [(&str, Check); 10] = [
    ("worked pairing values", worked_values),
    ("pinned expansions and products", pinned_expansions),
    ("algorithm agreement up to weight 6", algorithm_agreement),
    ("cobracket compatibility", cobracket_compatibility),
    ("factorization through the inclusions", factorization),
    ("kernel suite", kernel_suite),
    ("long-graph normal form", long_graphs),
    ("rank audit", rank_audit),
    ("operads", operads),
    ("command-line goldens and round trips", cli_goldens),
];

pub fn run_one(number: usize) -> CriterionResult {
    let (title, check) = CRITERIA[number - 1];
    let (passed, detail) = check();
    CriterionResult {
        number,
        title,
        passed,
        detail,
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA.len()).map(run_one).collect()
}

fn lie(s: &str) -> LieExpr {
    parse(s).expect("fixed expression")
}

fn combo<B: Parse + Ord + Clone>(s: &str) -> LinearCombo<B> {
    parse_combo(s).expect("fixed combination")
}

fn letters(n: usize) -> Vec<Generator> {
    random::letters(&"abcdef"[..n])
}

/// Collects labeled failures and renders a summary.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, summary: impl fmt::Display) -> (bool, String) {
        if self.failures.is_empty() {
            (true, format!("{summary}; {} checks", self.checks))
        } else {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            (
                false,
                format!(
                    "{} of {} checks failed: {}",
                    self.failures.len(),
                    self.checks,
                    shown.join("; ")
                ),
            )
        }
    }
}

fn worked_values() -> (bool, String) {
    let cases = [
        ("abbba", "[[[b,a],b],[a,b]]", -2),
        ("abcdef", "[a,[f,[b,[e,[c,d]]]]]", 1),
        ("abcdef", "[f,[a,[e,[b,[d,c]]]]]", -1),
        ("abcdef", "[f,[e,[a,[c,[b,d]]]]]", 0),
        ("abbab", "[a,[b,[b,[b,a]]]]", -3),
    ];
    let mut t = Tally::default();
    for (w, l, expected) in cases {
        let (w, l, expected): (Word, _, _) = (parse(w).unwrap(), lie(l), scalar(expected));
        let tree = i_prelie(&w);
        let graph = i_graph(&tree);
        let mut got = vec![
            ("expand/assoc", pair_expand_basis(&w, &l)),
            ("recursive/assoc", RecursivePairer::new().pair_basis(&w, &l)),
            ("sigma/assoc", pair_sigma_basis(&w, &l)),
            ("expand/prelie", pair_expand_basis(&tree, &l)),
            ("recursive/prelie", RecursivePairer::new().pair_basis(&tree, &l)),
            ("sigma/prelie", pair_sigma_basis(&tree, &l)),
            ("expand/graph", pair_expand_basis(&graph, &l)),
            ("recursive/graph", RecursivePairer::new().pair_basis(&graph, &l)),
            ("sigma/graph", pair_sigma_basis(&graph, &l)),
        ];
        if l.right_normed_leaves().is_some() {
            got.push(("rightnormed", pair_right_normed_basis(&w, &l).expect("lengths match")));
        }
        for (algo, v) in got {
            t.check(v == expected, || {
                format!("<{w}*,{l}> by {algo} is {v}, expected {expected}")
            });
        }
    }
    t.finish("5 values by every applicable algorithm on words, ladders and long graphs")
}

fn pinned_expansions() -> (bool, String) {
    let mut t = Tally::default();
    let mut same = |name: &str, ok: bool| t.check(ok, || format!("{name} differs"));
    same("p_p([a,b])", expand_prelie(&lie("[a,b]")) == combo("a(b) - b(a)"));
    same(
        "p_p([[a,b],c])",
        expand_prelie(&lie("[[a,b],c]")) == combo("a(b,c) + a(b(c)) - b(a,c) - b(a(c)) - c(a(b)) + c(b(a))"),
    );
    same("p_G([a,b])", expand_graph(&lie("[a,b]")) == combo("(a->b) - (b->a)"));
    same(
        "p_G([[a,b],c])",
        expand_graph(&lie("[[a,b],c]"))
            == combo(
                "(a->b, a->c) + (a->b, b->c) - (b->a, b->c) - (b->a, a->c) \
                 - (c->a, a->b) - (c->b, a->b) + (c->b, b->a) + (c->a, b->a)",
            ),
    );
    same(
        "a(b,c) * d(e)",
        product::<RootedTree>(&combo("a(b,c)"), &combo("d(e)")) == combo("a(b,c,d(e)) + a(b(d(e)),c) + a(b,c(d(e)))"),
    );
    same(
        "(a->b->c) * (d->e)",
        product::<OrientedGraph>(&combo("a->b, b->c"), &combo("d->e"))
            == combo(
                "(a->b, b->c, a->d, d->e) + (a->b, b->c, a->e, d->e) + (a->b, b->c, b->d, d->e) \
                 + (a->b, b->c, b->e, d->e) + (a->b, b->c, c->d, d->e) + (a->b, b->c, c->e, d->e)",
            ),
    );
    t.finish("2 + 6 + 2 + 8 + 3 + 6 terms match")
}

/// Expansion, recursion and σ-sums on every dual shape against every bracket.
fn agree<B>(shapes: &[B], brackets: &[LieExpr], t: &mut Tally)
where
    B: AlgebraBasis<Label = Generator> + CobracketBasis + EdgeShape,
{
    let mut rec = RecursivePairer::new();
    for l in brackets {
        let expansion = evaluate_bracket::<B>(l);
        let geometry = LieGeometry::new(l);
        for s in shapes {
            let e = evaluate_dual(&LinearCombo::basis(s.clone()), &expansion);
            let r = rec.pair_basis(s, l);
            let g = pair_sigma_prepared(s, &geometry);
            t.check(e == r && r == g, || {
                format!("<{s}*,{l}>: expand {e}, recursive {r}, sigma {g}")
            });
        }
    }
}

fn algorithm_agreement() -> (bool, String) {
    let mut t = Tally::default();
    for md in multidegrees_up_to(&letters(3), 6) {
        let brackets = SpanningBracketSet::compact(&md).brackets().to_vec();
        agree(&words_of(&md), &brackets, &mut t);
        agree(&trees_of(&md), &brackets, &mut t);
        agree(&graphs_of(&md), &brackets, &mut t);
    }
    let ok = t.checks >= 10_000;
    let (passed, detail) = t.finish("every multidegree over {a,b,c}, all three sides");
    if ok {
        (passed, detail)
    } else {
        (false, format!("only {detail}"))
    }
}

/// A random combination of shapes that all carry the labels `ls`.
fn dual_on<B: Ord + Clone>(
    rng: &mut StdRng,
    ls: &[Generator],
    shape: impl Fn(&mut StdRng, Vec<Generator>) -> B,
) -> LinearCombo<B> {
    let terms = rng.random_range(1..=3);
    random::combo(rng, terms, |rng| {
        let mut ls = ls.to_vec();
        ls.shuffle(rng);
        shape(rng, ls)
    })
}

fn compatible<B: AlgebraBasis<Label = Generator> + CobracketBasis>(
    phi: &LinearCombo<B>,
    x: &LieExpr,
    y: &LieExpr,
) -> (bool, bool) {
    let lhs = pair_expand(phi, &LinearCombo::basis(LieExpr::bracket(x.clone(), y.clone())));
    let rhs: Scalar = cobracket(phi)
        .iter()
        .map(|((a, b), c)| c * pair_expand_basis(a, x) * pair_expand_basis(b, y))
        .sum();
    (lhs == rhs, lhs != scalar(0))
}

fn cobracket_compatibility() -> (bool, String) {
    let mut rng = StdRng::seed_from_u64(4);
    let alphabet = letters(3);
    let mut t = Tally::default();
    let mut nonzero = 0;
    for side in Side::ALL {
        for _ in 0..500 {
            let (m, n) = (rng.random_range(1..=3), rng.random_range(1..=3));
            let x = random::lie(&mut rng, &alphabet, m);
            let y = random::lie(&mut rng, &alphabet, n);
            let ls: Vec<Generator> = x.leaves().into_iter().chain(y.leaves()).collect();
            let (ok, live, phi) = match side {
                Side::Assoc => {
                    let phi = dual_on(&mut rng, &ls, |_, ls| Word::new(ls).expect("non-empty"));
                    let (ok, live) = compatible(&phi, &x, &y);
                    (ok, live, phi.to_string())
                }
                Side::PreLie => {
                    let phi = dual_on(&mut rng, &ls, random::tree_on);
                    let (ok, live) = compatible(&phi, &x, &y);
                    (ok, live, phi.to_string())
                }
                Side::Graph => {
                    let phi = dual_on(&mut rng, &ls, random::graph_on);
                    let (ok, live) = compatible(&phi, &x, &y);
                    (ok, live, phi.to_string())
                }
            };
            nonzero += usize::from(live);
            t.check(ok, || format!("{side}: phi = {phi}, x = {x}, y = {y}"));
        }
    }
    t.finish(format!("500 triples per side, {nonzero} with a nonzero pairing"))
}

fn factorization() -> (bool, String) {
    let mut t = Tally::default();
    for md in multidegrees_up_to(&letters(2), 6) {
        let brackets = SpanningBracketSet::new(&md);
        for w in words_of(&md) {
            let tree = i_prelie(&w);
            let graph = i_graph(&tree);
            for l in brackets.brackets() {
                let a = pair_expand_basis(&w, l);
                let p = pair_expand_basis(&tree, l);
                let g = pair_expand_basis(&graph, l);
                let s = pair_sigma_basis(&graph, l);
                t.check(a == p && p == g && g == s, || {
                    format!("{w} against {l}: {a}, {p}, {g}, {s}")
                });
            }
        }
    }
    t.finish("every word of length <= 6 over {a,b} against a spanning set")
}

/// Reverse one edge of a graph with distinct labels.
fn flip_edge(g: &OrientedGraph, k: usize) -> OrientedGraph {
    let mut edges = g.edges().to_vec();
    edges[k] = (edges[k].1, edges[k].0);
    OrientedGraph::new(g.labels().to_vec(), edges).expect("still a tree")
}

fn kernel_suite() -> (bool, String) {
    let mut t = Tally::default();
    let abc = letters(3);
    for labels in [&abc[..2], &abc[..]] {
        for side in Side::ALL {
            for k in kernel_generators(side, labels).expect("two or three labels") {
                t.check(kernel_member_element(&k), || format!("generator {k}"));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(6);
    for _ in 0..50 {
        let n = rng.random_range(2..=5);
        let g = random::graph_on(&mut rng, letters(n));
        let k = rng.random_range(0..n - 1);
        let sum = LinearCombo::basis(g.clone()) + LinearCombo::basis(flip_edge(&g, k));
        t.check(kernel_member(&sum), || format!("arrow reversal {sum}"));
    }
    let displays = [
        "1(2(3(4))) + 2(1,3(4))",
        "1(2(3(4))) + 2(3(1,4)) + 3(1(2),4)",
        "1(2(3(4))) - 3(2(1),4)",
        "1(2(3(4))) + 1(3(2,4)) - 1(2,3(4))",
        "1(2,3(4)) + 2(1,3(4)) + 3(1,2,4)",
        "1(2(3(4))) + 4(3(2(1)))",
    ];
    for d in displays {
        t.check(kernel_member(&combo::<RootedTree<usize>>(d)), || format!("display {d}"));
    }
    let anti = combo::<RootedTree<usize>>("1(2) + 2(1)");
    let grafted = graft_kernel(&anti, &parse("3(4)").expect("tree"), &Attachment::AtLabel(2));
    t.check(grafted.as_ref().is_ok_and(kernel_member), || {
        "anti-symmetry grafted at 2".into()
    });
    let words: Vec<Word> = multidegrees_up_to(&letters(2), 5).iter().flat_map(words_of).collect();
    for u in &words {
        for v in words.iter().filter(|v| u.len() + v.len() <= 6) {
            t.check(kernel_member(&shuffle(u, v)), || format!("sh({u},{v})"));
        }
    }
    let w = Word::new(letters(5)).expect("five letters");
    let rev = LinearCombo::basis(w.clone()) - LinearCombo::basis(w.reversed());
    t.check(kernel_member(&rev), || format!("{rev}"));
    let relations = t.checks;
    for _ in 0..60 {
        let n = rng.random_range(2..=6);
        let mut ls = letters(n);
        ls.shuffle(&mut rng);
        let w = Word::new(ls.clone()).expect("non-empty");
        t.check(!kernel_member(&LinearCombo::basis(w.clone())), || {
            format!("control {w}")
        });
        let tree = random::tree_on(&mut rng, ls.clone());
        t.check(!kernel_member(&LinearCombo::basis(tree.clone())), || {
            format!("control {tree}")
        });
        let g = random::graph_on(&mut rng, ls);
        t.check(!kernel_member(&LinearCombo::basis(g.clone())), || {
            format!("control {g}")
        });
    }
    let controls = t.checks - relations;
    t.finish(format!(
        "{relations} relations in the kernel, {controls} distinct-label basis duals outside it"
    ))
}

fn long_graphs() -> (bool, String) {
    let mut t = Tally::default();
    for n in 2..=6 {
        let ls = letters(n);
        let md = Multidegree::from_labels(ls.clone());
        let brackets = SpanningBracketSet::with_base(&md, &ls[0]).expect("base occurs");
        for y in brackets.brackets() {
            let expansion = evaluate_bracket::<OrientedGraph>(y);
            for x in brackets.brackets() {
                let long = OrientedGraph::path(&x.leaves()).expect("non-empty");
                let v = evaluate_dual(&LinearCombo::basis(long), &expansion);
                let expected = if x == y { scalar(1) } else { scalar(0) };
                t.check(v == expected, || format!("<long({x}),{y}> = {v}"));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.random_range(2..=5);
        let ls = letters(n);
        let gamma = dual_on(&mut rng, &ls, random::graph_on);
        let reduced = long_graph_reduce(&gamma, &ls[0]).expect("distinct labels");
        t.check(kernel_member(&(&gamma - &reduced)), || {
            format!("{gamma} reduces to {reduced}")
        });
    }
    t.finish("identity matrices for n <= 6 and 200 random reductions")
}

/// Necklace count: `(1/n) Σ_{d | gcd} μ(d) (n/d)! / Π (kᵢ/d)!`.
fn lyndon_count(counts: &[usize]) -> usize {
    fn mobius(n: usize) -> i64 {
        let primes: Vec<usize> = (2..=n)
            .filter(|p| n.is_multiple_of(*p) && (2..*p).all(|q| p % q != 0))
            .collect();
        if primes.iter().any(|p| n.is_multiple_of(p * p)) {
            0
        } else if primes.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
    let fact = |n: usize| (1..=n as i64).product::<i64>();
    let n: usize = counts.iter().sum();
    let sum: i64 = (1..=n)
        .filter(|d| counts.iter().all(|k| k % d == 0))
        .map(|d| mobius(d) * fact(n / d) / counts.iter().map(|k| fact(k / d)).product::<i64>())
        .sum();
    (sum / n as i64) as usize
}

fn rank_audit() -> (bool, String) {
    let mut t = Tally::default();
    let mds = multidegrees_up_to(&letters(3), 6);
    for md in &mds {
        let counts: Vec<usize> = md.iter().map(|(_, k)| k).collect();
        let expected = lyndon_count(&counts);
        for side in Side::ALL {
            let r = lie_dual_rank(side, md);
            t.check(r == expected, || {
                format!("{md} on {side}: rank {r}, expected {expected}")
            });
        }
    }
    t.finish(format!("{} multidegrees of weight <= 6 over {{a,b,c}}", mds.len()))
}

fn operads() -> (bool, String) {
    let mut t = Tally::default();
    for n in 1..=5usize {
        let closed = [
            (Family::Assoc, (1..=n).product::<usize>()),
            (Family::PreLie, n.pow(n as u32 - 1)),
            (
                Family::Graph,
                if n == 1 {
                    1
                } else {
                    n.pow(n as u32 - 2) * 2usize.pow(n as u32 - 1)
                },
            ),
        ];
        for (f, expected) in closed {
            let d = dims(f, n).expect("arity in range");
            t.check(d == expected, || format!("dims({f},{n}) = {d}, expected {expected}"));
        }
    }
    let mut rng = StdRng::seed_from_u64(9);
    for f in Family::ALL {
        let (checks, failures) = crate::check_axioms(&mut rng, f, 30);
        t.checks += checks - 1;
        t.check(failures.is_empty(), || format!("{f} axioms: {}", failures.join(", ")));
    }
    for n in 1..=4 {
        for l in basis(Family::Lie, n).expect("arity in range") {
            let ua = l.u_assoc().expect("lie element");
            let via_prelie = l.u_prelie().and_then(|x| x.q_prelie());
            let via_graph = l.u_graph().and_then(|x| x.q_graph()).and_then(|x| x.q_prelie());
            t.check(via_prelie.as_ref() == Ok(&ua) && via_graph.as_ref() == Ok(&ua), || {
                format!("U/Q on {l}")
            });
        }
    }
    let (b, d) = (binary_generated_dim(Family::Graph, 3), dims(Family::Graph, 3));
    t.check(matches!((&b, &d), (Ok(b), Ok(d)) if b < d), || {
        format!("binary part {b:?} vs {d:?}")
    });
    let detail = match (b, d) {
        (Ok(b), Ok(d)) => {
            format!("closed forms for n <= 5, axioms, U/Q identities, binary part of graph(3) is {b} < {d}")
        }
        _ => "binary dimension unavailable".into(),
    };
    t.finish(detail)
}

fn round_trips(t: &mut Tally) {
    fn same<B: Parse + fmt::Display + PartialEq>(t: &mut Tally, x: &B) {
        let text = x.to_string();
        let back = parse::<B>(&text);
        t.check(back.as_ref() == Ok(x), || format!("{text} round trip"));
    }
    let mut rng = StdRng::seed_from_u64(10);
    let alphabet = letters(3);
    for _ in 0..200 {
        let n = rng.random_range(1..=6);
        same(t, &random::word(&mut rng, &alphabet, n));
        same(t, &random::tree(&mut rng, &alphabet, n));
        same(t, &random::graph(&mut rng, &alphabet, n));
        same(t, &random::lie(&mut rng, &alphabet, n));
        let terms = rng.random_range(1..=3);
        let c = random::combo(&mut rng, terms, |rng| random::tree(rng, &alphabet, n));
        let text = c.to_string();
        t.check(parse_combo(&text).as_ref() == Ok(&c), || format!("{text} round trip"));
    }
}

fn cli_goldens() -> (bool, String) {
    let goldens: [(&[&str], &str); 3] = [
        (
            &[
                "pair",
                "--algo",
                "expand",
                "--side",
                "assoc",
                "abbba",
                "[[[b,a],b],[a,b]]",
            ],
            "-2\n",
        ),
        (
            &["expand", "--side", "prelie", "[[a,b],c]"],
            "a(b,c) + a(b(c)) - b(a,c) - b(a(c)) - c(a(b)) + c(b(a))\n",
        ),
        (
            &[
                "kernel-check",
                "--side",
                "graph",
                "1*(v1=a,v2=b; v1->v2) + 1*(v1=a,v2=b; v2->v1)",
            ],
            "true\n",
        ),
    ];
    let mut t = Tally::default();
    for (args, expected) in goldens {
        let out = crate::run(std::iter::once("configpair").chain(args.iter().copied()));
        t.check(out.code == 0 && out.stdout == expected, || {
            format!(
                "`{}` printed {:?} with status {}, expected {expected:?}",
                args[0], out.stdout, out.code
            )
        });
    }
    round_trips(&mut t);
    t.finish("3 goldens and 1000 print/parse round trips")
}
