use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported qudit dimension {0} (only primes 2 and 3 are supported)")]
    UnsupportedDimension(u8),

    #[error("operator mismatch: ({d_left},{n_left}) vs ({d_right},{n_right})")]
    OperatorMismatch {
        d_left: u8,
        n_left: usize,
        d_right: u8,
        n_right: usize,
    },

    #[error("vertex count {v} exceeds cap {cap}; exact search refused")]
    VertexCapExceeded { v: usize, cap: usize },

    #[error("vertex {vertex} out of range for graph on {v} vertices")]
    VertexOutOfRange { vertex: usize, v: usize },

    #[error("graph is not regular (degrees {min}..{max})")]
    NotRegular { min: usize, max: usize },

    #[error("eigenvalue multiplicities are not integral (conference-graph parameters)")]
    NonIntegralMultiplicities,

    #[error("operator arity {n} out of supported range for this operation")]
    UnsupportedArity { n: usize },

    #[error("point set is not a generalized quadrangle: {0}")]
    NotAQuadrangle(String),

    #[error("the nine points do not form a 3x3 grid of commuting triples")]
    NotAGrid,

    #[error("operators are not mutually commuting")]
    NotCommuting,

    #[error("invalid seed {seed}: {reason}")]
    InvalidSeed { seed: usize, reason: String },

    #[error("search failed: {0}")]
    SearchFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
