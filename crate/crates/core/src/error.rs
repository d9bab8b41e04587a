use thiserror::Error;

use crate::subdivision::TransversalityViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("empty point set")]
    EmptyPointSet,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("face dimension {requested} out of range 0..={max}")]
    FaceDimensionOutOfRange { requested: usize, max: usize },

    #[error("direction vector must be non-zero")]
    ZeroDirection,

    #[error(transparent)]
    Parse(#[from] crate::tropical::ParseError),

    #[error("multiplicities sum to {sum}, expected {expected}")]
    MultiplicitySum { sum: usize, expected: usize },

    #[error("faces span a lattice of rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("no transversal perturbation found within {limit} retries")]
    RetryLimit { limit: usize },

    #[error("intersection is not transversal: {0}")]
    NotTransversal(TransversalityViolation),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("identity check failed: {0}")]
    IdentityFailure(String),

    #[error("cell has no consistent dual point: {0}")]
    InfeasibleCell(String),

    #[error("invalid polytope JSON: {0}")]
    Json(#[from] serde_json::Error),
}
