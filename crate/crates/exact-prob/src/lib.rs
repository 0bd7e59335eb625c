//! Exact appearance probabilities for labeled edge sets in the `m = 1`
//! attachment process, plus a brute-force enumerator of the whole process
//! at tiny sizes that serves as the oracle for the closed formula.
//!
//! All arithmetic here is exact rational: the outcome probabilities of the
//! process at size `n` share the denominator `3 * 5 * ... * (2n-1)`.

mod atlas;
mod labeled;
mod negcorr;

pub use atlas::{enumerate_process, event_probability, ProcessAtlas, ATLAS_CAP};
pub use labeled::{
    labeled_probability_approx, labeled_probability_exact, ApproxProbability, LabeledGraph,
};
pub use negcorr::{check_negative_correlation, NegativeCorrelationReport};

/// The rational type this crate computes with, re-exported for callers.
pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProbError {
    #[error("vertex out-degree exceeds 1 in labeled graph (process cannot produce it)")]
    OutDegreeExceeded,
    #[error("edge ({0}, {1}) does not fit in the process at n = {2}")]
    EdgeOutOfRange(u32, u32, u32),
    #[error("edge ({0}, {1}) must satisfy in <= out")]
    BadOrientation(u32, u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("n = {0} exceeds the enumeration cap {1} (combinatorial explosion)")]
    AtlasCap(u32, u32),
    #[error("n must be at least 1")]
    EmptyProcess,
}
