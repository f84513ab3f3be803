use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid generator name {0:?}: expected [A-Za-z_][A-Za-z0-9_]*")]
    InvalidGenerator(String),
    #[error("a word must contain at least one letter")]
    EmptyWord,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not acyclic as an undirected graph (a basis graph must be a tree)")]
    Cyclic,
    #[error("edge {0}->{1} is a self-loop")]
    SelfLoop(usize, usize),
    #[error("edge {0}->{1} refers to a missing vertex")]
    EdgeOutOfRange(usize, usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("combination is not homogeneous: found multidegrees {0} and {1}")]
    Inhomogeneous(String, String),
    #[error("combination is zero, so it has no multidegree")]
    ZeroCombo,
    #[error("side mismatch: expected {expected}, found {found}")]
    SideMismatch { expected: String, found: String },
    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: String, found: usize },
    #[error("leaf positions must differ (both are {0})")]
    SameLeaf(usize),
    #[error("leaf position {0} out of range for an expression with {1} leaves")]
    LeafOutOfRange(usize, usize),
    #[error("not a bijection between vertices and leaves")]
    NotBijective,
    #[error("expression {0} is not right-normed")]
    NotRightNormed(String),
    #[error("word length {word} does not match bracket weight {lie}")]
    LengthMismatch { word: usize, lie: usize },
    #[error("labels must be distinct: {0} repeats")]
    RepeatedLabel(String),
    #[error("base generator {0} does not occur in the multidegree")]
    BaseAbsent(String),
    #[error("grafting precondition violated: {0}")]
    Graft(String),
    #[error("tree {0} is not simple (labels repeat)")]
    NotSimple(String),
    #[error("vertex {vertex} out of range for a shape with {len} vertices")]
    VertexOutOfRange { vertex: usize, len: usize },
    #[error("operad: {0}")]
    Operad(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
