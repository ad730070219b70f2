use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring order {0}: a ring with nonzero identity needs at least 2 elements")]
    InvalidOrder(u64),
    #[error("invalid modulus {0}: coefficient field characteristic must be prime")]
    InvalidModulus(u64),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("element index {index} out of range for ring of order {order}")]
    InvalidElement { index: usize, order: usize },
    #[error("the ideal is the whole ring; a proper ideal is required")]
    ImproperIdeal,
    #[error("ring order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: u64, cap: usize },
    #[error("ideal enumeration for a ring of order {order} exceeds the cap {cap}")]
    EnumerationCapExceeded { order: usize, cap: usize },
    #[error("isomorphism search is limited to rings of order <= {cap}, got {order}")]
    IsomorphismCapExceeded { order: usize, cap: usize },
    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("ring tables violate {0}")]
    AxiomViolation(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(usize),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("catalogue error: {0}")]
    Catalogue(String),
}
