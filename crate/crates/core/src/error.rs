use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on edge ({u}, {v})")]
    SelfLoop { u: Vertex, v: Vertex },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
}

/// Parse failure. `line` is 1-based; graph6 input reports line 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueError {
    #[error("{0:?} is not a clique of the graph")]
    NotAClique(Vec<Vertex>),
    #[error("a clique of order {0} has no facets")]
    NoFacets(usize),
    #[error("clique order must be at least 1")]
    ZeroOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("weight function is undefined on clique {0:?}")]
    UndefinedWeight(Vec<Vertex>),
    #[error("weight function has order {found}, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("mean inequality needs a nonempty list")]
    EmptyValues,
    #[error("mean inequality needs positive values, got {0}")]
    NonPositive(String),
    #[error(transparent)]
    Clique(#[from] CliqueError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("order {n} exceeds the limit of {limit} for {what}")]
    OrderTooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("clique order limit {k_max} must lie in 1..={n_max}")]
    BadCliqueOrder { k_max: usize, n_max: usize },
}
