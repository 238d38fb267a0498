use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not rectangular: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, found: usize, expected: usize },

    #[error("matrix has rank {rank} but {rows} rows; a full-row-rank realization is required")]
    RankDeficient { rank: usize, rows: usize },

    #[error("size guard `{guard}` exceeded: {value} > {limit}")]
    SizeGuard { guard: &'static str, value: u128, limit: u128 },

    #[error("matrix is not unimodular: {0}")]
    NotUnimodular(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn guard(name: &'static str, value: u128, limit: u128) -> Result<()> {
    if value > limit {
        Err(Error::SizeGuard { guard: name, value, limit })
    } else {
        Ok(())
    }
}
