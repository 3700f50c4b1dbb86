use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("grid dimensions must be positive (got n = {n}, k = {k})")]
    EmptyGrid { n: u32, k: u32 },

    #[error("family parameter n must be at least 1")]
    InvalidFamily,

    #[error("vertex index {index} out of range for a graph with {len} vertices")]
    InvalidVertex { index: usize, len: usize },

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("graph has {0} vertices; face enumeration supports at most 128")]
    TooManyVertices(usize),

    #[error("independence complex has {faces} faces, above the ceiling of {ceiling}")]
    FaceBudgetExceeded { faces: u128, ceiling: u64 },

    #[error("integral homology limited to {limit} faces (complex has {faces})")]
    IntegralTooLarge { faces: usize, limit: usize },

    #[error("column height k = {0} outside the supported range 1..=24")]
    StatesOutOfRange(u32),

    #[error("64-bit overflow in transfer-matrix evaluation at n = {n}")]
    Overflow { n: usize },

    #[error("{0} is not a prime")]
    NotPrime(u32),
}
