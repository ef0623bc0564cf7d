use thiserror::Error;

/// Errors raised by the channel math, the allocation solvers and the
/// experiment front end.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument fell outside the domain an operation is defined on.
    #[error("{name} = {value} is outside its domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    /// A bound or criterion divides by a quantity that is zero for this input.
    #[error("degenerate channel: {0}")]
    Degenerate(&'static str),

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    /// The constraint set of a power-allocation problem has no feasible point.
    #[error("the allocation polytope is empty")]
    EmptyPolytope,

    #[error("Dinkelbach iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("pairing needs at least two users, got {0}")]
    TooFewUsers(usize),

    #[error("duplicate user id {0}")]
    DuplicateUser(u64),

    /// Invalid experiment configuration; the message names the offending field.
    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures of a numerical routine, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NonConvergence { .. } | Error::EmptyPolytope)
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
