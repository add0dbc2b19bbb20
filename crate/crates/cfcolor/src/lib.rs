//! Conflict-free coloring of graphs under open and closed neighborhoods.
//!
//! A conflict-free coloring assigns colors from `{0, 1, ..., k}` to the
//! vertices of a graph so that every vertex sees some nonzero color exactly
//! once in its open neighborhood `N(v)` (the ON variant) or closed
//! neighborhood `N[v]` (the CN variant). Color 0 marks an uncolored vertex
//! and never counts as the unique color. The full variants additionally
//! forbid color 0.
//!
//! The crate provides:
//!
//! * [`graph`] — graph and coloring types plus the verifier for all four
//!   variants, and a library of named example graphs;
//! * [`exact`] — exhaustive backtracking oracles (minimum conflict-free
//!   chromatic numbers, proper chromatic number, perfect independent
//!   dominating sets);
//! * [`wexpr`] — the w-expression language of clique-width, an
//!   irredundancy transform, and the fixed-parameter dynamic program
//!   deciding whether k colors suffice;
//! * [`classes`] — constructive polynomial-time colorers for distance
//!   hereditary graphs, cographs, block graphs, interval graphs, split
//!   graphs, Kneser graphs and unit square/disk intersection graphs;
//! * [`generators`] — lower-bound graph families, an NP-hardness
//!   reduction, and seeded random instance generators;
//! * [`io`] — plain-text file formats used by the `cfcolor` CLI.

pub mod book;
pub mod classes;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod named;
pub mod wexpr;

pub use graph::{Coloring, Graph, Mode, Neighborhood, Variant, VerifyResult};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("coloring has {got} entries but the graph has {want} vertices")]
    LengthMismatch { got: usize, want: usize },
    #[error("full-variant coloring assigns color 0 to vertex {0}")]
    ZeroInFullColoring(usize),
    #[error("vertex {0} is isolated; the open-neighborhood problem is not defined for it")]
    IsolatedVertex(usize),
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error("instance size {got} exceeds the configured ceiling {ceiling}")]
    CeilingExceeded { got: usize, ceiling: usize },
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid w-expression: {0}")]
    InvalidExpr(String),
    #[error("expression is redundant: join re-adds an existing edge between labels {i} and {j}")]
    RedundantJoin { i: u32, j: u32 },
    #[error("dynamic program state space too large: w * 3^k = {0} bits per key")]
    StateSpaceTooLarge(u64),
    #[error("invalid extension sequence: {0}")]
    InvalidSequence(String),
    #[error("sequence contains the forbidden operation {0:?}")]
    ForbiddenOp(generators::ExtOp),
    #[error("input graph is not a block graph: non-clique 2-connected component")]
    NotBlockGraph,
    #[error("invalid split partition: {0}")]
    InvalidSplitPartition(String),
    #[error("Kneser graph K({n},{k}) requires n >= 2k+1")]
    KneserTooSparse { n: u32, k: u32 },
    #[error("scene is disconnected; color each component separately")]
    Disconnected,
    #[error("interval {0} is not of unit length")]
    NotUnitInterval(usize),
    #[error("interval {0} has an empty extent (left endpoint >= right endpoint)")]
    EmptyInterval(usize),
    #[error("coloring is not a proper coloring: edge {u}-{v} has equal colors")]
    NotProperColoring { u: usize, v: usize },
    #[error("invalid instance parameters: {0}")]
    InvalidParams(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
