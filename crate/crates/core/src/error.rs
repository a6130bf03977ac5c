//! Error type shared by every module of the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong inside `hyperweave`.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    // structure
    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),
    #[error("unknown hyperedge id {0}")]
    UnknownHyperedge(usize),
    #[error("unknown node {0} in graph view")]
    UnknownNode(usize),
    #[error("incidence matrix is not rectangular: row {row} has {found} columns, expected {expected}")]
    NonRectangular {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("weight {0} is not finite")]
    NonFiniteWeight(f64),
    #[error("selector returned {0}, which is not a member of the current incidence set")]
    SelectorContract(String),

    // hgf / json / ingestion
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("line {line}: vertex index {index} out of range 1..={n}")]
    IndexOutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: bad vertex=weight token {token:?}")]
    BadWeightToken { line: usize, token: String },
    #[error("line {line}: vertex {vertex} listed twice in one hyperedge")]
    DuplicateIncidence { line: usize, vertex: usize },
    #[error("header announces {expected} hyperedge lines, found {found}")]
    LineCountMismatch { expected: usize, found: usize },
    #[error("schema violation: {0}")]
    SchemaViolation(String),
    #[error("v2he and he2v disagree on vertex {vertex}, hyperedge {hyperedge}")]
    DualInconsistency { vertex: usize, hyperedge: usize },
    #[error("invalid record: {0}")]
    InvalidRecord(String),

    // analytics / community / centrality / forecast
    #[error("vertex {0} belongs to no hyperedge")]
    IsolatedVertex(usize),
    #[error("partition is not total: {0}")]
    PartitionNotTotal(String),
    #[error("hypergraph has no hyperedges")]
    NoHyperedges,
    #[error("hypergraph has only empty hyperedges")]
    NoUsableHyperedges,
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("empty domain")]
    EmptyDomain,
    #[error("s must be at least 1, got {0}")]
    InvalidS(usize),
    #[error("zero variance")]
    ZeroVariance,
    #[error("no vertex has a defined prediction")]
    EmptyEvaluationSet,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

/// Coarse grouping of [`Error`] variants, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorFamily {
    Structure,
    Format,
    Domain,
    Numeric,
}

impl Error {
    pub fn family(&self) -> ErrorFamily {
        use Error::*;
        match self {
            UnknownVertex(_) | UnknownHyperedge(_) | UnknownNode(_) | NonRectangular { .. }
            | NonFiniteWeight(_) | SelectorContract(_) | DualInconsistency { .. } => {
                ErrorFamily::Structure
            }
            MalformedHeader(_)
            | IndexOutOfRange { .. }
            | BadWeightToken { .. }
            | DuplicateIncidence { .. }
            | LineCountMismatch { .. }
            | SchemaViolation(_)
            | InvalidRecord(_) => ErrorFamily::Format,
            PartitionNotTotal(_) | DomainMismatch(_) | EmptyDomain => ErrorFamily::Domain,
            IsolatedVertex(_) | NoHyperedges | NoUsableHyperedges | EmptyGraph | InvalidS(_)
            | ZeroVariance | EmptyEvaluationSet | InvalidConfig(_) => ErrorFamily::Numeric,
        }
    }
}
