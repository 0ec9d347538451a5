use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of an operation (r <= 0, empty grid, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Quantum-number combination the counting conventions cannot serve (N <= 0, kappa = 0).
    #[error("invalid state: {0}")]
    InvalidState(String),
    /// Requested energy is not a bound state of the given configuration.
    #[error("not a bound state: {0}")]
    NotBound(String),
    /// A spinor companion component would diverge (vanishing coupling denominator).
    #[error("divergent component: {0}")]
    DivergentComponent(String),
    /// The shooting solver found no eigenvalue in the admissible bracket.
    #[error("no eigenvalue: {0}")]
    NoEigenvalue(String),
    /// Numerical integration failed or did not converge.
    #[error("integration failure: {0}")]
    Integration(String),
}

pub type Result<T> = std::result::Result<T, Error>;
