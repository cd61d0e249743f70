use thiserror::Error;

/// Everything that can go wrong while building or querying a group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order exceeds the configured cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("incompatible elements: {0}")]
    IncompatibleElements(String),

    #[error("matrix is singular modulo {p}")]
    SingularMatrix { p: u32 },

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("unsupported export format `{0}`")]
    UnsupportedFormat(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("value out of range at position {pos}: {msg}")]
    OutOfRange { pos: usize, msg: String },

    #[error("element `{0}` is not in the group")]
    ElementNotInGroup(String),

    #[error("no K4,4 subgraph found")]
    NotFound,

    #[error("invalid element: {0}")]
    InvalidElement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
