use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational `{0}`")]
    ParseRational(String),
    #[error("multi-index entries must be positive, got {0}")]
    NonPositiveEntry(i64),
    #[error("genus must be at least 1, got {0}")]
    InvalidGenus(i64),
    #[error("basis key {key} is not valid at genus {genus}")]
    InvalidKey { genus: u32, key: String },
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),
    #[error("cycle is not homogeneous in dimension and degree")]
    NotHomogeneous,
    #[error("index set is not admissible: {}", .0.join("; "))]
    NotAdmissible(Vec<String>),
    #[error("product of two unknown-bearing coefficients")]
    NonLinear,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("inconsistent constraints: {0}")]
    Inconsistent(String),
    #[error("unknowns left undetermined: {}", .0.join(", "))]
    Underdetermined(Vec<String>),
    #[error("g={genus} case ({label}): expected dimension {expected}, computed {computed}")]
    DimensionMismatch { genus: u32, label: String, expected: u64, computed: u64 },
    #[error("unknown case ({label}) at genus {genus}")]
    UnknownCase { genus: u32, label: String },
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
