//! Presentations of the dual of the free Lie algebra: kernel generators,
//! grafting, kernel membership, the long-graph normal form and rank audits.
//!
//! Kernel membership is decided semantically: a homogeneous dual lies in the
//! kernel iff it pairs to zero with a spanning set of left-normed brackets of
//! its multidegree.

use num_traits::{One, Zero};

use crate::freealg::{evaluate_bracket, evaluate_dual, shuffle, AlgebraBasis, Element};
use crate::terms::enumerate::distinct_permutations;
use crate::terms::{Label, LieExpr, LinearCombo, Multidegree, OrientedGraph, RootedTree, Scalar, Side, Word};
use crate::{Error, Result};

/// Left-normed brackets `[[…[x₁,x₂],…],x_n]` over every distinct ordering of a multidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningBracketSet<L: Label> {
    multidegree: Multidegree<L>,
    brackets: Vec<LieExpr<L>>,
}

impl<L: Label> SpanningBracketSet<L> {
    pub fn new(md: &Multidegree<L>) -> Self {
        let brackets = distinct_permutations(md)
            .iter()
            .filter_map(|p| LieExpr::left_normed(p))
            .collect();
        SpanningBracketSet {
            multidegree: md.clone(),
            brackets,
        }
    }

    /// Only the orderings that start with `base`.
    pub fn with_base(md: &Multidegree<L>, base: &L) -> Result<Self> {
        let rest = md
            .without_one(base)
            .ok_or_else(|| Error::BaseAbsent(base.to_string()))?;
        let brackets = if rest.total() == 0 {
            vec![LieExpr::leaf(base.clone())]
        } else {
            distinct_permutations(&rest)
                .into_iter()
                .filter_map(|mut p| {
                    p.insert(0, base.clone());
                    LieExpr::left_normed(&p)
                })
                .collect()
        };
        Ok(SpanningBracketSet {
            multidegree: md.clone(),
            brackets,
        })
    }

    /// The orderings that start with the least label. Any left-normed bracket
    /// is a specialization of a multilinear one, and multilinear brackets are
    /// spanned by those with a fixed first letter, so this still spans.
    pub fn compact(md: &Multidegree<L>) -> Self {
        match md.support().next() {
            Some(first) => Self::with_base(md, &first.clone()).expect("label present"),
            None => SpanningBracketSet {
                multidegree: md.clone(),
                brackets: Vec::new(),
            },
        }
    }

    pub fn multidegree(&self) -> &Multidegree<L> {
        &self.multidegree
    }

    pub fn brackets(&self) -> &[LieExpr<L>] {
        &self.brackets
    }

    pub fn len(&self) -> usize {
        self.brackets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.brackets.is_empty()
    }
}

fn check_labels<L: Label>(labels: &[L], allowed: &[usize]) -> Result<()> {
    if allowed.contains(&labels.len()) {
        Ok(())
    } else {
        let expected = allowed.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(" or ");
        Err(Error::LabelCount {
            expected,
            found: labels.len(),
        })
    }
}

/// The local kernel relations on the given labels: anti-symmetry (two
/// labels) or Arnold-type relations (three labels).
///
/// * prelie: `1(2)+2(1)`; `1(2(3))+2(3(1))+3(1(2))` and `1(2(3))+2(1,3)`
/// * graph: `(1→2)+(2→1)`; `(1→2,2→3)+(2→3,3→1)+(1→2,3→1)`
/// * assoc: the shuffles `sh(1,2)`; `sh(1,23)` and `sh(12,3)`
pub fn kernel_generators<L: Label>(side: Side, labels: &[L]) -> Result<Vec<Element<L>>> {
    check_labels(labels, &[2, 3])?;
    let ladder = |ix: &[usize]| {
        let ls: Vec<L> = ix.iter().map(|&i| labels[i].clone()).collect();
        LinearCombo::basis(RootedTree::ladder(&ls).expect("non-empty"))
    };
    let word = |ix: &[usize]| Word::new(ix.iter().map(|&i| labels[i].clone()).collect()).expect("non-empty");
    let graph = |edges: &[(usize, usize)]| {
        LinearCombo::basis(OrientedGraph::new(labels.to_vec(), edges.to_vec()).expect("oriented tree"))
    };
    Ok(match (side, labels.len()) {
        (Side::PreLie, 2) => vec![Element::PreLie(&ladder(&[0, 1]) + &ladder(&[1, 0]))],
        (Side::PreLie, _) => {
            let star = RootedTree::new(
                labels[1].clone(),
                vec![RootedTree::leaf(labels[0].clone()), RootedTree::leaf(labels[2].clone())],
            );
            vec![
                Element::PreLie(&(&ladder(&[0, 1, 2]) + &ladder(&[1, 2, 0])) + &ladder(&[2, 0, 1])),
                Element::PreLie(&ladder(&[0, 1, 2]) + &LinearCombo::basis(star)),
            ]
        }
        (Side::Graph, 2) => vec![Element::Graph(&graph(&[(0, 1)]) + &graph(&[(1, 0)]))],
        (Side::Graph, _) => vec![Element::Graph(
            &(&graph(&[(0, 1), (1, 2)]) + &graph(&[(1, 2), (2, 0)])) + &graph(&[(0, 1), (2, 0)]),
        )],
        (Side::Assoc, 2) => vec![Element::Assoc(shuffle(&word(&[0]), &word(&[1])))],
        (Side::Assoc, _) => vec![
            Element::Assoc(shuffle(&word(&[0]), &word(&[1, 2]))),
            Element::Assoc(shuffle(&word(&[0, 1]), &word(&[2]))),
        ],
    })
}

/// Where to graft in [`graft_kernel`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Attachment<L> {
    /// Attach `t` below the vertex carrying this label in every `rᵢ`: `Σ (rᵢ ᵥᵢ◁ t)*`.
    AtLabel(L),
    /// Graft every `rᵢ` onto the vertex of `t` with this preorder index: `Σ (t ᵥ◁ rᵢ)*`.
    OntoVertex(usize),
}

/// Grafting a tree onto a kernel element of simple trees.
pub fn graft_kernel<L: Label>(
    kernel: &LinearCombo<RootedTree<L>>,
    t: &RootedTree<L>,
    at: &Attachment<L>,
) -> Result<LinearCombo<RootedTree<L>>> {
    if let Some(r) = kernel.shapes().find(|r| !r.is_simple()) {
        return Err(Error::NotSimple(r.to_string()));
    }
    let mut out = LinearCombo::zero();
    match at {
        Attachment::AtLabel(label) => {
            for (r, c) in kernel.iter() {
                let (labels, _) = r.preorder();
                let v = labels
                    .iter()
                    .position(|l| l == label)
                    .ok_or_else(|| Error::Graft(format!("no vertex labeled {label} in {r}")))?;
                out.add_term(r.graft_at(v, t)?, c.clone());
            }
        }
        Attachment::OntoVertex(v) => {
            let mut roots = kernel.shapes().map(|r| r.label());
            if let Some(first) = roots.next() {
                if roots.any(|l| l != first) {
                    return Err(Error::Graft("the roots do not share one label".into()));
                }
            }
            for (r, c) in kernel.iter() {
                out.add_term(t.graft_at(*v, r)?, c.clone());
            }
        }
    }
    Ok(out)
}

/// Whether the dual pairs to zero with every Lie expression. Inhomogeneous
/// input is split by multidegree.
pub fn kernel_member<B: AlgebraBasis>(dual: &LinearCombo<B>) -> bool {
    dual.split_by_multidegree().iter().all(|(md, part)| {
        SpanningBracketSet::compact(md)
            .brackets()
            .iter()
            .all(|l| evaluate_dual(part, &evaluate_bracket::<B>(l)).is_zero())
    })
}

pub fn kernel_member_element<L: Label>(dual: &Element<L>) -> bool {
    match dual {
        Element::Assoc(d) => kernel_member(d),
        Element::PreLie(d) => kernel_member(d),
        Element::Graph(d) => kernel_member(d),
    }
}

/// Rewrite a graph dual with distinct labels as a combination of long graphs
/// `base→w₂→…→w_n`, congruent to the input modulo the kernel. The coefficient
/// of each long graph is the pairing with `[[…[base,w₂],…],w_n]`.
pub fn long_graph_reduce<L: Label>(
    gamma: &LinearCombo<OrientedGraph<L>>,
    base: &L,
) -> Result<LinearCombo<OrientedGraph<L>>> {
    let mut out = LinearCombo::zero();
    for (md, part) in gamma.split_by_multidegree() {
        if !md.is_multilinear() {
            return Err(Error::RepeatedLabel(md.to_string()));
        }
        for l in SpanningBracketSet::with_base(&md, base)?.brackets() {
            let c = evaluate_dual(&part, &evaluate_bracket::<OrientedGraph<L>>(l));
            if !c.is_zero() {
                let path = OrientedGraph::path(&l.leaves()).expect("non-empty");
                out.add_term(path, c);
            }
        }
    }
    Ok(out)
}

/// Row-echelon accumulator over exact rationals; rows are kept with a unit
/// coefficient at their smallest basis element.
#[derive(Debug, Clone)]
pub struct Echelon<B: Ord + Clone> {
    pivots: std::collections::BTreeMap<B, LinearCombo<B>>,
}

impl<B: Ord + Clone> Default for Echelon<B> {
    fn default() -> Self {
        Echelon {
            pivots: Default::default(),
        }
    }
}

impl<B: Ord + Clone> Echelon<B> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a row; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, mut row: LinearCombo<B>) -> bool {
        loop {
            let Some((lead, c)) = row.iter().next().map(|(b, c)| (b.clone(), c.clone())) else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => row.add_scaled(p, &-c),
                None => {
                    let inv = Scalar::one() / c;
                    self.pivots.insert(lead, row.scale(&inv));
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Rank of a family of vectors, by sparse Gaussian elimination.
pub fn rank<B: Ord + Clone>(rows: impl IntoIterator<Item = LinearCombo<B>>) -> usize {
    let mut e = Echelon::new();
    for row in rows {
        e.insert(row);
    }
    e.rank()
}

fn rank_for<B: AlgebraBasis>(md: &Multidegree<B::Label>) -> usize {
    rank(
        SpanningBracketSet::compact(md)
            .brackets()
            .iter()
            .map(evaluate_bracket::<B>),
    )
}

/// Rank of the pairing matrix between the dual basis shapes of a multidegree
/// and the spanning brackets; this is the dimension of the Lie component.
/// The matrix has the expansion coefficients as its columns, so its rank is
/// the rank of the expansions.
pub fn lie_dual_rank<L: Label>(side: Side, md: &Multidegree<L>) -> usize {
    if md.total() == 0 {
        return 0;
    }
    match side {
        Side::Assoc => rank_for::<Word<L>>(md),
        Side::PreLie => rank_for::<RootedTree<L>>(md),
        Side::Graph => rank_for::<OrientedGraph<L>>(md),
    }
}
