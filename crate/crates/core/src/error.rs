use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("modulus is reducible over F_{0}")]
    ReduciblePolynomial(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field of size {0}^{1} exceeds the supported range")]
    FieldTooLarge(u64, u32),
    #[error("element code {0} is outside the field")]
    InvalidElement(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("gamma lies in the base field")]
    GammaInBaseField,
    #[error("operation requires extension degree m = {expected}, field has m = {actual}")]
    WrongExtensionDegree { expected: u32, actual: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exponent {0} out of range")]
    ExponentOutOfRange(u64),
    #[error("lambda = {0} is below the required minimum {1}")]
    LambdaTooSmall(String, String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("empty set")]
    EmptySet,
    #[error("generator matrix has rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("generator polynomial does not divide x^{0} - 1")]
    NotADivisor(usize),
    #[error("evaluation points are linearly dependent over the base field")]
    DependentPoints,
    #[error("length {n} exceeds extension degree m = {m}")]
    LengthExceedsDegree { n: usize, m: u32 },
    #[error("{what} too large: {size} exceeds cap {cap}")]
    TooLarge { what: &'static str, size: String, cap: String },
    #[error("relative radius {0} outside the admissible range (0, {1})")]
    RadiusOutOfRange(f64, f64),
    #[error("saddle point search did not converge")]
    NoConvergence,
    #[error("code size must be at least 2")]
    SizeTooSmall,
    #[error("condition violated: {0}")]
    ConditionViolated(String),
    #[error("coefficient at (i={0}, j={1}) is not divisible by the code size")]
    NonIntegerCoefficient(usize, usize),
    #[error("coefficient at (i={0}, j={1}) is negative")]
    NegativeCoefficient(usize, usize),
    #[error("character sum is not constant on class {0}")]
    NotConstantOnClass(usize),
    #[error("character sum deviates from an integer by {0:e}")]
    RoundingTooLarge(f64),
}

impl Error {
    pub(crate) fn too_large(what: &'static str, size: impl ToString, cap: impl ToString) -> Self {
        Error::TooLarge {
            what,
            size: size.to_string(),
            cap: cap.to_string(),
        }
    }
}
