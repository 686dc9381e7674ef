use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error(transparent)]
    Solver(#[from] mostpoints::Error),
    #[error("bench n={n} side={side} seed={seed}: {msg}")]
    Bench {
        n: usize,
        side: f64,
        seed: u64,
        msg: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, HarnessError>;
