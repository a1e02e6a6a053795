use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("braid equation fails at basis tensor {0:?}")]
    BraidEquation((usize, usize, usize)),
    #[error("braiding is not invertible")]
    NotInvertible,
    #[error("grouplike data inconsistent with braiding at ({0}, {1})")]
    Grouplike(usize, usize),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("degree mismatch: expected {expected}, got {got}")]
    Degree { expected: usize, got: usize },
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("no joint group-type datum for direct sum")]
    NoJointDatum,
    #[error("crossed set axiom {0} fails: {1}")]
    CrossedSet(&'static str, String),
    #[error("infinite order: {0}")]
    InfiniteOrder(String),
    #[error("formula and direct iteration disagree: formula {formula}, direct {direct}")]
    Disagreement { formula: String, direct: String },
}

pub type Result<T> = std::result::Result<T, Error>;
