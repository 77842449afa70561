use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid cut-set: {0}")]
    InvalidCutSet(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid position: {0}")]
    InvalidPosition(String),

    /// An argument fell outside the domain a formula or check is defined on.
    #[error("{0}")]
    Domain(String),

    /// A computation would exceed a configured size cap.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
