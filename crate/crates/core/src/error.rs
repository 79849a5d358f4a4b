use thiserror::Error;

/// Errors raised by the algebra and invariant layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division leaves a nonzero remainder")]
    DivisionRemainder,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("coefficient {exponent} is beyond the truncation order {order}")]
    BeyondOrder { exponent: usize, order: usize },
    #[error("constant term must be 1, found {found}")]
    NonUnitConstant { found: String },
    #[error("exponent sequence horizon {horizon} is shorter than the requested order {order}")]
    HorizonTooShort { horizon: usize, order: usize },
    #[error("negative exponent a_{index} = {value}: the product is a series, not a polynomial")]
    NegativeExponent { index: usize, value: String },
    #[error("expected an integer, found {value}")]
    NonIntegral { value: String },
    #[error("polynomial has a nonzero odd power z^{exponent}")]
    OddExponent { exponent: usize },
    #[error("Alexander polynomial is not symmetric under t -> 1/t")]
    Asymmetric,
    #[error("normalization violated: value at {point} is {found}, expected 1")]
    BadNormalization { point: &'static str, found: String },
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("witness failed re-verification: {0}")]
    WitnessMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
