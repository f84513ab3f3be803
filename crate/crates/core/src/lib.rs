//! Exact symbolic algebra for free Lie algebras and their enveloping presentations.
//!
//! A Lie bracket expression can be expanded into the free associative algebra
//! (words), the free preLie algebra (rooted trees) or the graph algebra
//! (oriented trees). Coefficients of those expansions define a pairing between
//! dual words/trees/graphs and Lie expressions, which this crate computes by
//! several independent routes:
//!
//! * [`pairing::pair_expand`]: evaluate the dual on the expansion,
//! * [`pairing::pair_recursive`]: recurse through the cobracket,
//! * [`pairing::pair_sigma`]: sum signed vertex-to-leaf bijections,
//! * [`pairing::pair_right_normed`]: a signed shuffle count for right-normed brackets.
//!
//! [`liedual`] decides membership in the kernel of the induced map onto the
//! dual of the free Lie algebra, and [`operads`] provides the arity-graded
//! versions of all four families with their partial compositions.
//!
//! All arithmetic is exact ([`Scalar`] is an arbitrary precision rational).

pub mod cobracket;
pub mod envelope;
pub mod error;
pub mod freealg;
pub mod liedual;
pub mod operads;
pub mod pairing;
pub mod syntax;
pub mod terms;

pub use error::{Error, Result};
pub use terms::{
    Generator, Label, LieExpr, LinearCombo, Multidegree, OrientedGraph, RootedTree, Scalar, Shape, Side, TensorCombo,
    Word,
};
