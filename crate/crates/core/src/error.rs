use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation has no meaning for the given configuration.
    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    /// An integrand produced a non-finite value.
    #[error("integrand is not finite at l = {at:e} (value {value})")]
    Evaluation { at: f64, value: f64 },

    /// Two routes to the same quantity disagree beyond tolerance.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
