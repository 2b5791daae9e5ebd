use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("t = {0} lies outside [-pi/2, pi/2]")]
    Domain(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("negative discriminant {0} in the sigma-tilde quadratic")]
    NegativeDiscriminant(f64),

    #[error("mesh too coarse: relative eigenvalue change {rel_change:e} between mesh and 2*mesh exceeds {tol:e}")]
    MeshTooCoarse { rel_change: f64, tol: f64 },

    #[error("eigen solver failed: {0}")]
    Solver(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
