use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("vertex count must be at least 1")]
    EmptyGraph,
    #[error("m must be at least 1")]
    BadM,
    #[error("vertex count {0} is not divisible by m = {1}")]
    NotDivisible(u32, u32),
    #[error("epsilon must lie strictly between 0 and 1, got {0}")]
    BadEpsilon(f64),
    #[error("truncation at epsilon = {0} removes every vertex")]
    TruncationEmpty(f64),
    #[error("graph too large: m * n = {0} exceeds u32 vertex labels")]
    TooLarge(u64),
    #[error("edge list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
