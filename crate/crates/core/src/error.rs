use thiserror::Error;

/// Errors raised by the model checker outside of model-file parsing.
///
/// Parse failures are reported separately as a list of
/// [`Diagnostic`](crate::io::Diagnostic)s so that one pass can report
/// every problem in a file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("state space must contain at least one state")]
    EmptyStateSpace,
    #[error("state space has {0} states; at most {max} are supported", max = crate::space::MAX_STATES)]
    TooManyStates(usize),
    #[error("invalid state label {0:?}: labels are nonempty strings over [A-Za-z0-9_]")]
    InvalidLabel(String),
    #[error("duplicate state label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("event has width {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("event bits {bits:#x} exceed width {width}")]
    BitsOutOfRange { bits: u64, width: usize },
    #[error("correspondence has {found} images for {expected} states")]
    NotTotal { expected: usize, found: usize },
    #[error(
        "refusing to enumerate {what} over {size} states (cap is {cap}); use sampled quantification"
    )]
    EnumerationRefused {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
    #[error("infeasible budget: {0}")]
    BudgetInfeasible(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
