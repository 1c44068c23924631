use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must be positive, got {0}")]
    InvalidRank(usize),
    #[error("no ±1 cocycle with the required commutator exists for rank {0}")]
    NoCocycle(usize),
    #[error("cocycle value is undefined outside the root lattice for the fallback table")]
    CocycleUndefined,
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("operation is only defined for rank 2, got rank {0}")]
    RankTwoOnly(usize),
    #[error("character value on alpha_{0} must be nonzero")]
    ZeroCharacter(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("graded component {0} lies outside the computed window")]
    OutsideWindow(String),
    #[error("cache I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
