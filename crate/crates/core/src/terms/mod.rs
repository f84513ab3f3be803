//! Basis shapes, multidegrees and exact linear combinations.
//!
//! Every basis shape is stored in canonical form, so structural equality of
//! two values coincides with equality of the (non-planar, where applicable)
//! labeled shapes they denote. Shapes are generic over their label type: the
//! free algebras use [`Generator`] labels, the operads use vertex/leaf numbers.

mod combo;
pub mod enumerate;
pub(crate) mod generator;
mod graph;
mod lie;
mod multidegree;
mod tree;
mod word;

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use combo::{swap_tensor, LinearCombo, TensorCombo};
pub use generator::Generator;
pub use graph::{canonicalize_graph, LabeledDigraph, OrientedGraph};
pub use lie::LieExpr;
pub use multidegree::Multidegree;
pub use tree::RootedTree;
pub use word::Word;

/// Exact rational coefficient.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Anything usable as a vertex or leaf decoration.
pub trait Label: Clone + Ord + Hash + Debug + Display + Send + Sync + 'static {}

impl<T> Label for T where T: Clone + Ord + Hash + Debug + Display + Send + Sync + 'static {}

/// A labeled basis shape.
pub trait Shape: Clone + Ord + Hash + Debug + Display + Send + Sync {
    type Label: Label;

    /// Labels with multiplicity, in the shape's canonical vertex order.
    fn labels(&self) -> Vec<Self::Label>;

    fn weight(&self) -> usize {
        self.labels().len()
    }

    fn multidegree(&self) -> Multidegree<Self::Label> {
        Multidegree::from_labels(self.labels())
    }
}

/// The three free algebras a Lie expression can be expanded into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Assoc,
    PreLie,
    Graph,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Assoc, Side::PreLie, Side::Graph];

    pub fn name(self) -> &'static str {
        match self {
            Side::Assoc => "assoc",
            Side::PreLie => "prelie",
            Side::Graph => "graph",
        }
    }
}

impl Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Side {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "assoc" => Ok(Side::Assoc),
            "prelie" => Ok(Side::PreLie),
            "graph" => Ok(Side::Graph),
            other => Err(crate::Error::parse(0, format!("unknown side {other:?}"))),
        }
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}
