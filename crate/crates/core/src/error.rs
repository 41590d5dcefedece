use thiserror::Error;

use crate::poly::Side;

/// Errors raised by the apolarity engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error(
        "characteristic {characteristic} is too small for degree {degree} (need p > {degree})"
    )]
    CharacteristicTooSmall { characteristic: u64, degree: usize },
    #[error("fields differ")]
    FieldMismatch,
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("expected a polynomial in the {expected} variables, got {found}")]
    SideMismatch { expected: Side, found: Side },
    #[error("linear substitution matrix is singular")]
    SingularMatrix,
    #[error("matrix dimensions {rows}x{cols} do not match {expected} variables")]
    MatrixShape {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("the linear form is zero")]
    ZeroLinearForm,
    #[error("expected a linear form, got degree {0}")]
    NotLinear(usize),
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree {k} is out of range 0..={max}")]
    DegreeOutOfRange { k: usize, max: usize },
    #[error("cannot homogenize a polynomial of degree {degree} to degree {target}")]
    HomogenizationDegree { target: usize, degree: usize },
    #[error("degree {t} is below every generator degree")]
    DegreeBelowGenerators { t: usize },
    #[error("points {0} and {1} are proportional")]
    ProportionalPoints(usize, usize),
    #[error("factorization hypothesis violated: {0}")]
    Factorization(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An identity that must hold by theory failed; always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
