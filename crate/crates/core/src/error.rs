use thiserror::Error;

use crate::drazin::RelationReport;

/// Why a matrix failed to have an inverse in its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularReason {
    /// Over a field: row rank below the dimension.
    RankDeficient { rank: usize, dim: usize },
    /// Over Z or Z/n: the determinant is not a unit of the coefficient ring.
    DetNotUnit { det: String },
}

impl std::fmt::Display for SingularReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SingularReason::RankDeficient { rank, dim } => {
                write!(f, "rank {rank} < dimension {dim}")
            }
            SingularReason::DetNotUnit { det } => write!(f, "determinant {det} is not a unit"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("value {value} is not an element of {ring}")]
    NotInRing { value: String, ring: String },

    #[error("{ring} is not a field")]
    NotAField { ring: String },

    #[error("matrix is not invertible: {0}")]
    NotInvertible(SingularReason),

    #[error("no group inverse: Drazin index is {index}")]
    NoGroupInverse { index: u32 },

    #[error("intertwining relations violated")]
    RelationViolation(Box<RelationReport>),

    #[error("formula verification failed: {0}")]
    FormulaViolation(String),

    #[error("search space of {required} candidates exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("linear system has no solution")]
    NoSolution,

    #[error("unsupported ring {ring} for {operation}")]
    UnsupportedRing { ring: String, operation: &'static str },

    #[error("lambda must be nonzero")]
    ZeroLambda,
}

impl Error {
    /// The variant name, for machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::Parse(_) => "Parse",
            Error::InvalidRing(_) => "InvalidRing",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::RingMismatch { .. } => "RingMismatch",
            Error::NotInRing { .. } => "NotInRing",
            Error::NotAField { .. } => "NotAField",
            Error::NotInvertible(_) => "NotInvertible",
            Error::NoGroupInverse { .. } => "NoGroupInverse",
            Error::RelationViolation(_) => "RelationViolation",
            Error::FormulaViolation(_) => "FormulaViolation",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::NoSolution => "NoSolution",
            Error::UnsupportedRing { .. } => "UnsupportedRing",
            Error::ZeroLambda => "ZeroLambda",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
