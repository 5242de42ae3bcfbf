use thiserror::Error;

/// Errors surfaced by constant computations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Argument outside the supported domain of an operation.
    #[error("{op}: domain error: {msg}")]
    Domain { op: &'static str, msg: String },

    /// An iterative method failed to reach its tolerance within budget.
    #[error("{op}: failed to converge: {msg}")]
    Convergence { op: &'static str, msg: String },

    /// The requested route has no explicit constant (e.g. the k = 2
    /// Gagliardo-Nirenberg gap on the Sobolev side).
    #[error("{op}: route unavailable: {msg}")]
    RouteUnavailable { op: &'static str, msg: String },

    /// Work estimate exceeds the iteration budget.
    #[error("{op}: budget exceeded: {msg}")]
    Budget { op: &'static str, msg: String },

    /// Inconsistent inputs (wrong group, wrong quantity, wrong direction).
    #[error("{op}: mismatch: {msg}")]
    Mismatch { op: &'static str, msg: String },

    /// Exact coefficient arithmetic would exceed its width budget.
    #[error("{op}: coefficient overflow: {msg}")]
    Overflow { op: &'static str, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain { op, msg: msg.into() }
    }
    pub fn convergence(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Convergence { op, msg: msg.into() }
    }
    pub fn route_unavailable(op: &'static str, msg: impl Into<String>) -> Self {
        Error::RouteUnavailable { op, msg: msg.into() }
    }
    pub fn budget(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Budget { op, msg: msg.into() }
    }
    pub fn mismatch(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Mismatch { op, msg: msg.into() }
    }
    pub fn overflow(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Overflow { op, msg: msg.into() }
    }

    /// Process exit code class for the CLI: 2 for usage/domain problems.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
