use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("denominator {denom} does not divide {m}")]
    DenominatorMismatch { denom: u64, m: u64 },
    #[error("{u} and {v} are not coprime")]
    NotCoprime { u: u64, v: u64 },
    #[error("coefficient {0} is not an integer")]
    NonIntegralCoefficient(String),
    #[error("coefficients of primitive rotation numbers of order {0} differ")]
    NotGaloisInvariant(u64),
    #[error("negative multiplicity {coeff} at {at}")]
    NegativeMultiplicity { at: String, coeff: String },
    #[error("Milnor number {0} is not an integer")]
    NonIntegralMilnorNumber(String),
    #[error("weight quotient is not a polynomial")]
    NotPolynomial,
    #[error("weight polynomial has negative coefficient {0}")]
    NegativeCoefficient(String),
    #[error("signature formula needs an odd number of variables, got {0}")]
    ParityError(usize),
    #[error("variable counts differ: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("divisor coefficients are not reduced mod 2")]
    NotReducedMod2,
    #[error("inconsistent divisor: {0}")]
    Inconsistent(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid input at position {position}: {message}")]
    Validation { position: usize, message: String },
    #[error("value does not fit in a machine integer: {0}")]
    Overflow(String),
}
