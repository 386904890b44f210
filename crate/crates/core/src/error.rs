use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or mismatched arguments.
    #[error("input error: {0}")]
    Input(String),

    /// Operation undefined at this argument, e.g. inverting zero.
    #[error("domain error: {0}")]
    Domain(String),

    /// Enumeration would exceed the configured element cap.
    #[error("capacity error: more than {limit} elements (stopped after {partial})")]
    Capacity { limit: usize, partial: usize },

    /// A group construction was rejected, e.g. an action that is not a homomorphism.
    #[error("construction error: {0}")]
    Construction(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}
