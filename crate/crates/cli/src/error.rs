use hotelmc_core::ModelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("invalid report: {0}")]
    Report(#[from] ReportError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReportError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("unknown room `{0}`")]
    UnknownRoom(String),
    #[error("unknown guest `{0}`")]
    UnknownGuest(String),
    #[error("key {0} outside the key universe")]
    KeyOutOfRange(u8),
    #[error("`{0}` listed twice in one state")]
    Duplicate(String),
    #[error("unknown action `{0}`")]
    UnknownAction(String),
    #[error("action `{0}` has the wrong parameters")]
    BadParameters(String),
    #[error("unknown verdict `{0}`")]
    UnknownVerdict(String),
    #[error("trace has {states} states but {labels} labels")]
    Shape { states: usize, labels: usize },
    #[error("state {0} violates the type invariant")]
    TypeInv(usize),
    #[error("the first state is not initial")]
    NotInitial,
    #[error("step {0} is not a transition of the model")]
    BadStep(usize),
    #[error("the last step of a counter-example does not violate NoBadEntry")]
    NoViolation,
    #[error("verdict `{0}` requires a trace")]
    MissingTrace(String),
    #[error("input does not re-serialize to the same bytes")]
    NotCanonical,
}
