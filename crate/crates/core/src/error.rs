use thiserror::Error;

/// Every failure the library can report.
///
/// Variants are grouped by the stable CLI exit code they map to; see
/// [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("evaluation at zero of a term with negative exponent ({0}, {1})")]
    ZeroAtNegativeExponent(i32, i32),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("expected a simplex, got {vertices} vertices spanning dimension {dim}")]
    NotSimplex { vertices: usize, dim: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("group order exceeds cap {0}")]
    CapExceeded(usize),
    #[error("generator {0} does not have determinant 1")]
    NotSpecialLinear(usize),
    #[error("conjugacy class {class} has non-integral weight {weight}")]
    NonIntegralWeight { class: usize, weight: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("group is not abelian and diagonal")]
    NotAbelianDiagonal,
    #[error("triangulation is not unimodular")]
    NotUnimodular,
    #[error("inconsistent stratification: {0}")]
    InconsistentStratification(String),
    #[error("result is not a polynomial: {0}")]
    NonPolynomialResult(String),
    #[error("identity check failed: {0}")]
    IdentityViolation(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("fermion shift {0} is not an integer")]
    NonIntegralShift(String),
    #[error("shifted Hodge index ({0}, {1}) lies outside the diamond")]
    ShiftOutOfRange(i64, i64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// 2 invalid input, 3 limit exceeded, 4 internal identity violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded(_) => 3,
            Error::NonPolynomialResult(_) | Error::IdentityViolation(_) => 4,
            _ => 2,
        }
    }
}
