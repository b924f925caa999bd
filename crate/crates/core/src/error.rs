use alloc::string::String;
use core::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge with no vertices was supplied.
    EmptyEdge { index: usize },
    /// The edge set is not an antichain: one edge contains another.
    /// Indices refer to the deduplicated input order.
    AntichainViolation { contained: usize, container: usize },
    /// A vertex id that does not belong to the clutter.
    UnknownVertex { base: u32, copy: u32 },
    /// A vertex index outside `0..vertex_count`.
    VertexOutOfRange { vertex: usize, count: usize },
    /// Vector length does not match the expected dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// The instance exceeds a hard structural limit of this implementation.
    InstanceTooLarge { what: &'static str, limit: u64, got: u64 },
    /// A clutter must have at least one vertex; the requested operation
    /// would produce (or was given) an empty vertex set.
    EmptyVertexSet,
    /// The supplied pair is not a b-cover of the clutter.
    NotACover,
    /// A graph-only operation was applied to a clutter with an edge of size != 2.
    NotAGraph,
    /// The operation requires a Berge graph.
    NotBerge,
    /// A configured step bound was hit before the computation finished.
    WorkBudgetExceeded { steps: u64, detail: String },
    /// Checked integer arithmetic overflowed.
    ArithmeticOverflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyEdge { index } => write!(f, "edge {index} is empty"),
            Error::AntichainViolation { contained, container } => write!(
                f,
                "edge {contained} is contained in edge {container}; edges must form an antichain"
            ),
            Error::UnknownVertex { base, copy } => {
                write!(f, "vertex x{base}^{copy} is not in the clutter")
            }
            Error::VertexOutOfRange { vertex, count } => {
                write!(f, "vertex index {vertex} out of range for {count} vertices")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::InstanceTooLarge { what, limit, got } => {
                write!(f, "instance too large: {what} is {got}, limit {limit}")
            }
            Error::EmptyVertexSet => write!(f, "a clutter must have at least one vertex"),
            Error::NotACover => write!(f, "the given pair is not a b-cover"),
            Error::NotAGraph => write!(f, "operation requires a graph (all edges of size 2)"),
            Error::NotBerge => write!(f, "operation requires a Berge graph"),
            Error::WorkBudgetExceeded { steps, detail } => {
                write!(f, "work budget exhausted after {steps} steps ({detail})")
            }
            Error::ArithmeticOverflow => write!(f, "integer arithmetic overflowed"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
