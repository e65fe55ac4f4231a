use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("value {0} appears more than once")]
    DuplicateValue(u8),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("not a permutation of 1..={len}: {values:?}")]
    InvalidPerm { values: Vec<u8>, len: usize },
    #[error("label {label} out of range 1..={max}")]
    InvalidLabel { label: u8, max: u8 },
    #[error("labels {x} and {y} cannot be linked (need 1 <= x <= y - 2)")]
    NotLinkableLabels { x: u8, y: u8 },
    #[error("copy index {k} out of range 0..{n}")]
    InvalidCopyIndex { k: usize, n: usize },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("edge {0} joins cycles that are not linkable")]
    NonLinkableEdge(usize),
    #[error("no base tree for n = 5 satisfies the required properties")]
    BaseCaseNotFound,
    #[error("induction invariant violated: {0}")]
    InductionInvariantViolated(String),
    #[error("n = {n} is not supported here ({reason})")]
    UnsupportedN { n: usize, reason: &'static str },
    #[error("two splices remove the same edge of cycle {vertex} at rotation {position}")]
    SplicePositionClash { vertex: usize, position: u8 },
    #[error("merged cycle does not have length {expected} (walk returned to start at step {closed_at:?})")]
    CycleMergeFailure {
        closed_at: Option<u64>,
        expected: u64,
    },
    #[error("tree cannot drive generation: {0}")]
    UnusableTree(String),
    #[error("the two trees are identical")]
    IdenticalTrees,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
