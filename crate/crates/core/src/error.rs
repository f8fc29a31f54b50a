use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge {src} -> {dst}: cost {cost} is not strictly positive")]
    NonPositiveCost { src: String, dst: String, cost: f64 },

    #[error("duplicate edge {src} -> {dst}")]
    DuplicateEdge { src: String, dst: String },

    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("edge {src} -> {dst}: weight {src_weight} is not below {dst_weight}")]
    NonIncreasingWeight {
        src: String,
        dst: String,
        src_weight: f64,
        dst_weight: f64,
    },

    #[error("vertex {vertex}: weight {weight} is not a finite nonnegative number")]
    InvalidWeight { vertex: String, weight: f64 },

    #[error("invalid threshold {0}: must be finite and nonnegative")]
    InvalidThreshold(f64),

    #[error("invalid tolerance {0}: must be finite and nonnegative")]
    InvalidTolerance(f64),

    #[error("invalid confidence threshold {0}: must lie in (0, 1]")]
    InvalidConfidence(String),

    #[error("tree node {index} out of range (tree has {len} nodes)")]
    NodeOutOfRange { index: usize, len: usize },

    #[error("element {index} out of range (universe has {len} elements)")]
    ElementOutOfRange { index: usize, len: usize },

    #[error("relation is not antisymmetric: {0} and {1} precede each other")]
    NotAntisymmetric(String, String),

    #[error("dataset has no transactions")]
    EmptyDataset,

    #[error("lattice has no closed sets")]
    EmptyLattice,

    #[error(
        "cover edge {lower} -> {upper} joins two closures of equal support {support}; \
         merge them or perturb the supports (or contract equal-support covers)"
    )]
    EqualSupportCover {
        lower: String,
        upper: String,
        support: u64,
    },

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("path enumeration exceeded the cap of {cap} paths")]
    OracleCapExceeded { cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
