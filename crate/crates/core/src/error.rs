use thiserror::Error;

/// Errors raised by graph, ideal and resolution operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("operation requires a graph with at least one edge")]
    EdgelessGraph,
    #[error("vertex set {0:?} is not independent")]
    NotIndependent(Vec<usize>),
    #[error("suspension over the full vertex set would leave the new vertex isolated")]
    IsolatedSuspension,
    #[error("{builder}({n}) needs n >= {min}")]
    BuilderTooSmall {
        builder: &'static str,
        n: usize,
        min: usize,
    },
    #[error("graph on {extended} vertices is not a one-vertex extension of a graph on {base} vertices")]
    NotExtension { base: usize, extended: usize },
    #[error("ambient variable counts differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,
    #[error("ideal is not generated in a single degree")]
    MixedDegrees,
    #[error("minimal generators of I are not the disjoint union of those of J and K")]
    NotPartition,
    #[error("lcm lattice exceeds the cap of {0} elements")]
    LatticeCap(usize),
    #[error("order complex exceeds the cap of {0} faces")]
    FaceCap(usize),
    #[error("{count} generators exceed the cap of {cap}")]
    GeneratorCap { count: usize, cap: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("cannot parse monomial: {0}")]
    MonomialParse(String),
    #[error("cannot parse builder spec: {0}")]
    BuilderParse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for the resource-cap errors (lattice, faces, generators).
    pub fn is_cap_overrun(&self) -> bool {
        matches!(
            self,
            Error::LatticeCap(_) | Error::FaceCap(_) | Error::GeneratorCap { .. }
        )
    }
}
