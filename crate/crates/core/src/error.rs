use std::io;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("invalid binary graph: {0}")]
    Format(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} is undefined for this graph")]
    UndefinedStatistic(&'static str),

    #[error("power-law fit is undefined: {0}")]
    UndefinedFit(&'static str),

    #[error("usage: {0}")]
    Usage(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
