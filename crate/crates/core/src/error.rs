use std::fmt;

use thiserror::Error;

use crate::graph::Vertex;

/// Structural problems detected while building a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    MalformedHeader(String),
    DuplicateHeader,
    UnrecognizedLine(String),
    BadNumber(String),
    Graph(GraphError),
    EdgeCountMismatch { declared: usize, found: usize },
    ClauseCountMismatch { declared: usize, found: usize },
    BagCountMismatch { declared: usize, found: usize },
    UncoloredVertex(Vertex),
    RecoloredVertex(Vertex),
    EmptyColorClass(usize),
    ClauseNotTerminated,
    LiteralOutOfRange(i64),
    IntervalReversed { id: u64, left: i64, right: i64 },
    DuplicateId(u64),
    UnknownBag(usize),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            MissingHeader => write!(f, "missing header line"),
            MalformedHeader(h) => write!(f, "malformed header '{h}'"),
            DuplicateHeader => write!(f, "second header line"),
            UnrecognizedLine(l) => write!(f, "unrecognized line '{l}'"),
            BadNumber(t) => write!(f, "expected a number, found '{t}'"),
            Graph(e) => write!(f, "{e}"),
            EdgeCountMismatch { declared, found } => {
                write!(f, "header declares {declared} edges, found {found}")
            }
            ClauseCountMismatch { declared, found } => {
                write!(f, "header declares {declared} clauses, found {found}")
            }
            BagCountMismatch { declared, found } => {
                write!(f, "header declares {declared} bags, found {found}")
            }
            UncoloredVertex(v) => write!(f, "vertex {v} has no color"),
            RecoloredVertex(v) => write!(f, "vertex {v} colored twice"),
            EmptyColorClass(c) => write!(f, "color class {c} is empty"),
            ClauseNotTerminated => write!(f, "clause not terminated by 0"),
            LiteralOutOfRange(l) => write!(f, "literal {l} out of range"),
            IntervalReversed { id, left, right } => {
                write!(f, "interval {id} has left {left} > right {right}")
            }
            DuplicateId(id) => write!(f, "duplicate id {id}"),
            UnknownBag(b) => write!(f, "unknown bag {b}"),
        }
    }
}

/// A parse failure, located by 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{what}: size {size} exceeds budget {limit}")]
    BudgetExceeded {
        what: &'static str,
        size: u64,
        limit: u64,
    },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
