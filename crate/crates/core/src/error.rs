use thiserror::Error;

use crate::graph::ArcId;
use crate::sbc::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number in the input.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("malformed line: {0:?}")]
    Malformed(String),
    #[error("vertex {id} out of range for declared n = {n}")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("invalid UTF-8")]
    InvalidUtf8,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("arc id {id} out of range (m = {m})")]
    ArcOutOfRange { id: ArcId, m: usize },
    #[error("vertex {id} out of range (n = {n})")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("invalid arc ({tail}, {head}): {reason}")]
    InvalidArc {
        tail: usize,
        head: usize,
        reason: &'static str,
    },
    #[error("graph not strongly connected")]
    NotStronglyConnected,
    #[error("graph not strongly biconnected")]
    NotStronglyBiconnected,
    #[error("input not 2-edge-connected")]
    NotTwoEdgeConnected,
    #[error("input is not 2-edge strongly biconnected ({0})")]
    NotTwoEdgeStronglyBiconnected(Witness),
    #[error("k = {0} outside the supported range 1..=3")]
    UnsupportedK(usize),
    #[error("augmentation stuck: no arc joins two strongly biconnected components")]
    AugmentationStuck,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("budget exceeded after {explored} feasibility checks; best known size {best_known}")]
    BudgetExceeded { explored: u64, best_known: usize },
    #[error("graph too large for brute force: n = {n} (limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
}
