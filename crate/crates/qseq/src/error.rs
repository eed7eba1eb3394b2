use thiserror::Error;

/// Error type shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain (non-finite input,
    /// bad index range, nonpositive value where positivity is required, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Arguments are individually valid but violate a stated precondition
    /// (e.g. a sequence that is not q-concave where concavity is required).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The contraction certificate rules out guaranteed convergence.
    #[error("not a contraction: q = {q}, q* = {q_star} (need q* < 1)")]
    NotContraction { q: f64, q_star: f64 },

    /// Fixed-point iteration hit the iteration cap before meeting the
    /// tolerance. Carries the best iterate seen so far.
    #[error("no convergence after {iterations} iterations; last step {last_step:e} in the weighted norm")]
    NoConvergence {
        iterations: usize,
        last_step: f64,
        best: Vec<f64>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Process exit code the CLI maps this error to: 2 for domain and
    /// precondition failures, 3 for non-convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Precondition(_) | Error::NotContraction { .. } => 2,
            Error::NoConvergence { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
