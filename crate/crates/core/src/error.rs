use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set is empty")]
    EmptyGround,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("ground set has {0} elements; at most {max} are supported", max = crate::subset::MAX_ELEMENTS)]
    GroundTooLarge(usize),
    #[error("element `{0}` is a loop")]
    Loop(String),
    #[error("{what}: size {actual} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        actual: usize,
    },
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("dimension mismatch: expected {expected}, found {found} ({context})")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        context: String,
    },
    #[error("`{0:?}` is not a face of the complex")]
    NotAFace(Vec<String>),
    #[error("vertex sets overlap on `{0}`")]
    OverlappingVertices(String),
    #[error("Alexander dual undefined: the vertex set is itself a face")]
    VertexSetIsFace,
    #[error("the oriented matroid has no positive circuits")]
    NoPositiveCircuits,
    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),
    #[error("x is not in conv(P{} u P{})", .0 + 1, .1 + 1)]
    PairwiseConditionFailed(usize, usize),
    #[error("no positive circuit is independent in the matroid; instance: {dump}")]
    NoWitness { dump: String },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, cap: usize, actual: usize) -> Self {
        Error::CapExceeded { what, cap, actual }
    }
}
