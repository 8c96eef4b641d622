use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("parity mismatch: vertex {vertex} and longitude {longitude}")]
    ParityMismatch { vertex: usize, longitude: i64 },
    #[error("monomial is not in the multiplicative span of the z-generators; residual: {0}")]
    NotInSpan(String),
    #[error("crystal closure exceeded depth limit {0}")]
    DepthLimit(usize),
    #[error("crystal is not normal: {0}")]
    NotNormal(String),
    #[error("black strand has no red strand to its right (position {0})")]
    NoRedToRight(usize),
    #[error("permutation is not admissible for the given pair")]
    NotAdmissible,
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("padding {0} is insufficient: counts changed under increment; increase padding")]
    PaddingUnstable(usize),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
