use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero vector has no primitive normal")]
    ZeroVector,
    #[error("affine form is constant")]
    ConstantForm,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("forms {0} and {1} are proportional; merge them into a single form with a multiplicity")]
    ProportionalForms(usize, usize),
    #[error("arrangement is not central")]
    NotCentral,
    #[error("arrangement is empty")]
    EmptyArrangement,
    #[error("point does not lie on the divisor")]
    PointOffDivisor,
    #[error("flats are not strictly nested")]
    NotNested,
    #[error("the ambient flat carries no resolution datum")]
    AmbientFlat,
    #[error("arrangement has no factorization matrix")]
    MissingFactors,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0}")]
    ScheduleExhausted(String),
    #[error("parse error: {0}")]
    Parse(String),
}
