use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point set is empty")]
    EmptyInput,
    #[error("number of disks must be at least 1, got {0}")]
    InvalidDiskCount(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
