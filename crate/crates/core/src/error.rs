use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// The integrand returned a non-finite value at an interior node.
    #[error("integrand is not finite at x = {at:e} (got {value})")]
    Evaluation { at: f64, value: String },

    #[error("unknown identity '{id}'; valid ids: {}", valid.join(", "))]
    UnknownIdentity { id: String, valid: Vec<String> },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}
