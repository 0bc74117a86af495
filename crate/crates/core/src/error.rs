use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order exceeds the bound of {bound}")]
    OrderBound { bound: usize },

    #[error("size bound exceeded: {0}")]
    SizeBound(String),

    #[error("generator {index} is not invertible: {reason}")]
    NonInvertibleGenerator { index: usize, reason: String },

    #[error("invalid group presentation: {0}")]
    InvalidPresentation(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("unknown subgroup or class label `{0}`")]
    UnknownLabel(String),

    #[error("elements belong to different groups ({left} vs {right})")]
    GroupMismatch { left: String, right: String },

    #[error("non-integral result: {0}")]
    NonIntegral(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("action is not regular: {0}")]
    NotRegular(String),

    #[error("invalid complex or action: {0}")]
    InvalidComplex(String),

    #[error("missing dimension for subgroup {0}")]
    MissingDimension(String),

    #[error("singular exponent matrix (det = 0)")]
    SingularMatrix,

    #[error("invalid exponent matrix: {0}")]
    InvalidMatrix(String),

    #[error("phase vector is not a diagonal symmetry: {0}")]
    NotASymmetry(String),

    #[error("pairing is degenerate: {0}")]
    DegeneratePairing(String),
}
