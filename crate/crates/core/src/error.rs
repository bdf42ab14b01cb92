use thiserror::Error;

use crate::closedness::ClosednessViolation;
use crate::recognition::UmbrellaViolation;

/// Errors raised while reading an edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed token {token:?}")]
    Malformed { line: usize, token: String },
    #[error("line {line}: expected two vertex ids, found {found} tokens")]
    Arity { line: usize, found: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: u32 },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    OutOfRange { line: usize, vertex: u32, n: u32 },
    #[error("line {line}: duplicate or late `n` header")]
    Header { line: usize },
    #[error("input declares no vertices")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("self-loop on vertex {0}")]
    SelfLoop(u32),
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("not a permutation of 1..={n}: {reason}")]
    NotAPermutation { n: u32, reason: String },
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("labeling is not closed: {0}")]
    NotClosed(ClosednessViolation),
    #[error("closed labeling interleaves connected components: the upper neighbors of {0} are not consecutive labels")]
    InterleavedComponents(u32),
    #[error("ordering fails the umbrella property: {0}")]
    Umbrella(UmbrellaViolation),
    #[error("malformed facet list: {0}")]
    MalformedFacets(String),
    #[error("malformed interval: left {left} > right {right} for interval {index}")]
    MalformedInterval { index: usize, left: i64, right: i64 },
    #[error("input too large for exhaustive search: {what} = {actual} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
