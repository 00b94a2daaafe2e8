use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} outside supported range 2..=2^31-1")]
    ModulusOutOfRange(u64),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("division by zero in F_{0}")]
    DivisionByZero(u64),
    #[error("generator label {label} out of range for {generators} generators")]
    LabelOutOfRange { label: u32, generators: u32 },
    #[error("degree 0 has no basis trees")]
    EmptyDegree,
    #[error("elements live in different free algebras: (p={left_p}, g={left_g}) vs (p={right_p}, g={right_g})")]
    AlgebraMismatch {
        left_p: u64,
        left_g: u32,
        right_p: u64,
        right_g: u32,
    },
    #[error("the bare leaf is not a basis element")]
    UnitNotBasis,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("structure constants are not associative at (e{0}, e{1}, e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("operator is not Rota-Baxter: identity fails on (e{0}, e{1})")]
    NotRotaBaxter(usize, usize),
    #[error("tensor does not solve the associative Yang-Baxter equation ({0} nonzero residual entries)")]
    AybeViolated(usize),
    #[error("pre-Lie identity fails at (e{0}, e{1}, e{2})")]
    NotPreLie(usize, usize, usize),
    #[error("restricted pre-Lie relations fail for the p-map table: {0}")]
    NotRestricted(String),
    #[error("p-map table required")]
    MissingPMap,
    #[error("exponent {found} does not match the field characteristic {expected}")]
    CharacteristicMismatch { expected: u64, found: u64 },
    #[error("degree {degree} exceeds truncation {truncation}")]
    DegreeExceedsTruncation { degree: usize, truncation: usize },
    #[error("search space too large: {0}")]
    SearchTooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
