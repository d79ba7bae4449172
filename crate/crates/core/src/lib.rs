//! Exact algorithms and reduction generators for k-Dominating Set and the
//! family of first-order "basic" graph problems on sparse graphs.
//!
//! The crate is organized around a handful of small, immutable data types:
//! [`graph::Graph`] (CSR adjacency), [`bits::BitSet`] (packed membership),
//! [`bitmat::BitMatrix`] (packed boolean matrices) and
//! [`ov::OVInstance`] (k-Orthogonal-Vectors instances). On top of these sit
//! the solvers ([`domset`], [`maxentry`], [`distance`], [`neighborhood`]),
//! the brute-force evaluators that act as correctness oracles ([`fop`],
//! plus the exhaustive solvers in each module), and the hardness-instance
//! generators ([`hardness`]).

pub mod bitmat;
pub mod bits;
pub mod distance;
pub mod domset;
pub mod fop;
pub mod graph;
pub mod hardness;
pub mod maxentry;
pub mod neighborhood;
pub mod ov;
pub mod record;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("instance would exceed the scale guard: {0}")]
    ScaleGuard(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
