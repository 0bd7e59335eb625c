//! Preferential-attachment multigraph generation.
//!
//! Implements the classic growth process: `G_{1,1}` is a single loop at
//! vertex 1, and at step `t` the new vertex attaches to an existing vertex
//! with probability proportional to its current degree (loops count twice),
//! or to itself with probability `1/(2t-1)`. The `m`-edge variant `G_{m,n}`
//! is obtained by collapsing consecutive groups of `m` vertices of
//! `G_{1,mn}`.
//!
//! Sampling uses a flat endpoint array: every edge stores its two endpoints
//! in a growing vector, the incoming vertex contributes one phantom slot,
//! and one of the `2t-1` slots is drawn uniformly. This reproduces the
//! attachment law exactly in O(n) time and is the documented sampling
//! mechanism for this crate.

mod error;
mod generate;
mod graph;
mod io;

pub use error::CoreError;
pub use generate::{collapse, generate, generate_g1};
pub use graph::{GraphConfig, MultiGraph, TruncationSpec};
pub use io::{parse_edge_list, read_edge_list, write_edge_list};

pub use graph::truncate;
pub use graph::{degrees, top_degrees, TopDegrees};
