use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Resource limits that can be exceeded; named so callers can report them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cap {
    SubsetEdges,
    LatticeVertices,
    OracleBudget,
}

impl Cap {
    pub fn name(self) -> &'static str {
        match self {
            Cap::SubsetEdges => "subset-edge cap",
            Cap::LatticeVertices => "lattice vertex cap",
            Cap::OracleBudget => "coloring oracle budget",
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partitions of different sizes compared: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: char, right: char },
    #[error("operation requires the power-sum basis, got {0}")]
    NotPowerSum(char),
    #[error("unknown basis tag {0:?} (expected p, e, m or s)")]
    UnknownBasis(String),
    #[error("invalid coefficient {0:?}")]
    InvalidCoeff(String),
    #[error("cannot parse expansion: {0}")]
    Parse(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("edge {0:?} is not an edge of the graph")]
    NotAnEdge((usize, usize)),
    #[error("{} exceeded: requested {requested}, limit {limit}", cap.name())]
    CapExceeded { cap: Cap, requested: u128, limit: u128 },
    #[error("family has no generator on {0} vertices")]
    MissingGenerator(usize),
    #[error("generator for k = {k} is invalid: {reason}")]
    InvalidGenerator { k: usize, reason: String },
    #[error("unknown family {0:?} (expected complete, star, path, cycle or custom)")]
    UnknownFamily(String),
    #[error("singular triangular system: zero pivot at {0}")]
    ZeroPivot(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{context}: {source}")]
    Json { context: String, source: serde_json::Error },
}

impl Error {
    /// True when the failure is a resource cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
