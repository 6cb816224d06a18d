use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("MALFORMED_TABLE: {0}")]
    MalformedTable(String),
    #[error("NOT_PARALLEL: {0}")]
    NotParallel(String),
    #[error("NOT_GROUP: {0}")]
    NotGroup(String),
    #[error("NOT_ABELIAN: {0}")]
    NotAbelian(String),
    #[error("DOMAIN_MISMATCH: {0}")]
    DomainMismatch(String),
    #[error("PARALLELISM: {0}")]
    Parallelism(String),
    #[error("NOT_RING: {0}")]
    NotRing(String),
    #[error("NOT_MODULE: {0}")]
    NotModule(String),
    #[error("RING_MISMATCH: {0}")]
    RingMismatch(String),
    #[error("BUDGET_EXCEEDED: {0}")]
    BudgetExceeded(String),
    #[error("BOUNDARY: {0}")]
    Boundary(String),
    #[error("NOT_CLOSED: {0}")]
    NotClosed(String),
    #[error("NOT_ENDRING: {0}")]
    NotEndRing(String),
    #[error("EQUIV_NOT_FOUND: {0}")]
    EquivNotFound(String),
    #[error("PARSE_ERROR at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("VERSION_UNSUPPORTED: {0}")]
    VersionUnsupported(u32),
    #[error("REFERENCE_ERROR: {0}")]
    Reference(String),
}

impl Error {
    /// Stable machine-readable kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedTable(_) => "MALFORMED_TABLE",
            Error::NotParallel(_) => "NOT_PARALLEL",
            Error::NotGroup(_) => "NOT_GROUP",
            Error::NotAbelian(_) => "NOT_ABELIAN",
            Error::DomainMismatch(_) => "DOMAIN_MISMATCH",
            Error::Parallelism(_) => "PARALLELISM",
            Error::NotRing(_) => "NOT_RING",
            Error::NotModule(_) => "NOT_MODULE",
            Error::RingMismatch(_) => "RING_MISMATCH",
            Error::BudgetExceeded(_) => "BUDGET_EXCEEDED",
            Error::Boundary(_) => "BOUNDARY",
            Error::NotClosed(_) => "NOT_CLOSED",
            Error::NotEndRing(_) => "NOT_ENDRING",
            Error::EquivNotFound(_) => "EQUIV_NOT_FOUND",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::VersionUnsupported(_) => "VERSION_UNSUPPORTED",
            Error::Reference(_) => "REFERENCE_ERROR",
        }
    }
}
