use alloc::string::String;
use core::fmt;

use crate::graph::Vertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge endpoint is not in `0..n`.
    VertexOutOfRange { vertex: Vertex, n: usize },
    SelfLoop(Vertex),
    /// A vertex set is not a partition of the vertex set (missing or repeated vertices).
    NotAPartition(String),
    /// The two sides violate `|X| <= |Y| <= |X| + 1`.
    Unbalanced { x: usize, y: usize },
    /// An operation that needs an even number of vertices got an odd one.
    OddVertexCount(usize),
    InvalidMatching(String),
    InvalidArgument(String),
    /// The exhaustive oracle refuses graphs above its vertex limit.
    TooLarge { n: usize, limit: usize },
    /// The kernel is still too large for the exhaustive oracle.
    Undecided { kernel_n: usize, limit: usize },
    TraceMismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph with {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::NotAPartition(msg) => write!(f, "not a partition of the vertex set: {msg}"),
            Error::Unbalanced { x, y } => {
                write!(f, "unbalanced bisection: |X| = {x}, |Y| = {y}")
            }
            Error::OddVertexCount(n) => {
                write!(f, "vertex count {n} is odd; normalize the graph first")
            }
            Error::InvalidMatching(msg) => write!(f, "invalid matching: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::TooLarge { n, limit } => write!(
                f,
                "graph with {n} vertices exceeds the exhaustive oracle limit of {limit}"
            ),
            Error::Undecided { kernel_n, limit } => write!(
                f,
                "undecided at desk scale: kernel has {kernel_n} vertices, oracle limit is {limit}"
            ),
            Error::TraceMismatch(msg) => write!(f, "reduction trace does not fit: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
