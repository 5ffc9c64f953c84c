use std::fmt;

use thiserror::Error;

/// Reasons a [`crate::pslg::Pslg`] fails validation. Vertex and edge
/// references are 0-based indices into the graph's point and edge lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EdgeOutOfRange {
        edge: usize,
        vertex: usize,
    },
    SelfLoop {
        edge: usize,
    },
    DuplicateEdge {
        first: usize,
        second: usize,
    },
    DuplicatePoint {
        first: usize,
        second: usize,
    },
    SegmentConflict {
        first: usize,
        second: usize,
        relation: crate::geom::SegmentRelation,
    },
    VertexOnEdge {
        vertex: usize,
        edge: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeOutOfRange { edge, vertex } => {
                write!(
                    f,
                    "edge {edge} references vertex {vertex}, which does not exist"
                )
            }
            Violation::SelfLoop { edge } => write!(f, "edge {edge} is a self-loop"),
            Violation::DuplicateEdge { first, second } => {
                write!(f, "edges {first} and {second} are duplicates")
            }
            Violation::DuplicatePoint { first, second } => {
                write!(
                    f,
                    "vertices {first} and {second} have identical coordinates"
                )
            }
            Violation::SegmentConflict {
                first,
                second,
                relation,
            } => {
                write!(f, "edges {first} and {second} are {relation:?}")
            }
            Violation::VertexOnEdge { vertex, edge } => {
                write!(f, "vertex {vertex} lies in the interior of edge {edge}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate segment: both endpoints coincide")]
    DegenerateSegment,
    #[error("a nonzero vector is required")]
    ZeroVector,
    #[error("invalid graph: {0}")]
    Invalid(Violation),
    #[error("all points are collinear")]
    Collinear,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("orientation is not acyclic; directed cycle through vertices {0:?}")]
    Cycle(Vec<usize>),
    #[error("instance has {n} vertices, above the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("graph is not edge-maximal")]
    NotEdgeMaximal,
    #[error("center is a vertex or lies on the supporting line of an edge")]
    BadCenter,
    #[error("edge ({0}, {1}) is not flippable")]
    NotFlippable(usize, usize),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Invalid(v)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
