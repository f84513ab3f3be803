//! Cobrackets on dual words, dual rooted trees and dual graphs.
//!
//! Duals are represented by the combination of their starred basis shapes.

use std::fmt::{self, Display, Write};

use num_traits::{One, Signed};

use crate::terms::{Label, LinearCombo, OrientedGraph, RootedTree, Scalar, TensorCombo, Word};

/// Shapes whose duals carry a cobracket `]s*[ = Σ (l* ⊗ r* − r* ⊗ l*)`.
pub trait CobracketBasis: Ord + Clone {
    /// The `(l, r)` pairs of the unsymmetrized cut coproduct.
    fn cuts(&self) -> Vec<(Self, Self)>;
}

impl<L: Label> CobracketBasis for Word<L> {
    /// Every split `w = lr` into two non-empty words.
    fn cuts(&self) -> Vec<(Self, Self)> {
        let letters = self.letters();
        (1..letters.len())
            .map(|k| {
                (
                    Word::new(letters[..k].to_vec()).expect("non-empty"),
                    Word::new(letters[k..].to_vec()).expect("non-empty"),
                )
            })
            .collect()
    }
}

impl<L: Label> CobracketBasis for RootedTree<L> {
    /// `(root tree, branch)` for each edge.
    fn cuts(&self) -> Vec<(Self, Self)> {
        self.cut_edges()
    }
}

impl<L: Label> CobracketBasis for OrientedGraph<L> {
    /// `(source component, target component)` for each edge.
    fn cuts(&self) -> Vec<(Self, Self)> {
        self.cut_edges()
    }
}

/// The cobracket of a single starred basis shape.
pub fn cobracket_basis<B: CobracketBasis>(s: &B) -> TensorCombo<B> {
    let mut out = TensorCombo::zero();
    for (l, r) in s.cuts() {
        out.add_term((l.clone(), r.clone()), Scalar::one());
        out.add_term((r, l), -Scalar::one());
    }
    out
}

/// Linear extension of [`cobracket_basis`].
pub fn cobracket<B: CobracketBasis>(dual: &LinearCombo<B>) -> TensorCombo<B> {
    dual.map_linear(cobracket_basis)
}

pub fn cobracket_assoc<L: Label>(psi: &LinearCombo<Word<L>>) -> TensorCombo<Word<L>> {
    cobracket(psi)
}

pub fn cobracket_prelie<L: Label>(phi: &LinearCombo<RootedTree<L>>) -> TensorCombo<RootedTree<L>> {
    cobracket(phi)
}

pub fn cobracket_graph<L: Label>(gamma: &LinearCombo<OrientedGraph<L>>) -> TensorCombo<OrientedGraph<L>> {
    cobracket(gamma)
}

/// Apply a basis map to both tensor factors.
pub fn map_tensor<B: Ord + Clone, C: Ord + Clone>(t: &TensorCombo<B>, f: impl Fn(&B) -> C) -> TensorCombo<C> {
    t.map_basis(|(l, r)| (f(l), f(r)))
}

/// Display adapter for tensors: `a ⊗ b - b ⊗ a`.
pub struct TensorDisplay<'a, B: Ord>(pub &'a TensorCombo<B>);

impl<B: Ord + Clone + Display> Display for TensorDisplay<'_, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, ((l, r), c)) in self.0.iter().enumerate() {
            let mut buf = String::new();
            if i == 0 {
                if c.is_negative() {
                    buf.push('-');
                }
            } else {
                buf.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(buf, "{abs}*")?;
            }
            write!(buf, "{} ⊗ {}", factor(l), factor(r))?;
            f.write_str(&buf)?;
        }
        Ok(())
    }
}

fn factor<B: Display>(s: &B) -> String {
    let text = s.to_string();
    if text.contains(['+', '-', ' ', ';', '=', '*', '/']) {
        format!("({text})")
    } else {
        text
    }
}
