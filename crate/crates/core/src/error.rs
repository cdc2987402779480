use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("polynomial {0} is reducible over the prime field")]
    ReduciblePolynomial(String),
    #[error("unsupported number of variables: {0}")]
    UnsupportedVariableCount(usize),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("no derivation named {0:?}")]
    NoSuchDerivation(String),
    #[error("ring has characteristic zero")]
    CharacteristicZero,
    #[error("ring is infinite")]
    InfiniteRing,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("scalar rings differ: {0} vs {1}")]
    ScalarMismatch(String, String),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("table is not a monoid: {0}")]
    NotAMonoid(String),
    #[error("table is not a semigroup: {0}")]
    NotASemigroup(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("action is not by automorphisms: {0}")]
    NotAnAutomorphism(String),
    #[error("action is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("unsupported n = {0}")]
    UnsupportedN(usize),
    #[error("alpha is not a unit")]
    AlphaNotUnit,
    #[error("alpha is not symmetric under the involution")]
    AlphaNotSymmetric,
    #[error("alpha is not central")]
    AlphaNotCentral,
    #[error("algebra has no involution")]
    NoInvolution,
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("invalid unit: {0}")]
    InvalidUnit(String),
    #[error("unsupported scalars: {0}")]
    UnsupportedScalars(String),
    #[error("enumeration of {size} elements exceeds the cap {cap}")]
    EnumerationTooLarge { size: String, cap: u128 },
    #[error("strategy {0} is not applicable: {1}")]
    StrategyInapplicable(String, String),
    #[error("subspace is not nilpotent")]
    NotNilpotent,
    #[error("quotient is not a field")]
    QuotientNotAField,
    #[error("invalid semiring: {0}")]
    NotASemiring(String),
    #[error("not unital")]
    NotUnital,
    #[error("parse error at {path}: {msg}")]
    Parse { path: String, msg: String },
    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Parse { path: path.into(), msg: msg.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
