use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no nonempty prime remains after reduction")]
    EmptyFamily,
    #[error("index {index} is outside 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("ambient variable count {0} is unsupported (must be 1..=64)")]
    UnsupportedAmbient(usize),
    #[error("prime {index} is empty")]
    EmptyPrime { index: usize },
    #[error("prime list {index} is not strictly increasing")]
    NotStrictlyIncreasing { index: usize },
    #[error("primes {first} and {second} are comparable; the intersection is redundant")]
    Redundant { first: usize, second: usize },
    #[error("empty selection of primes")]
    EmptySelection,
    #[error("variable {0} is not in the support of the ideal")]
    UnknownVariable(usize),
    #[error("characteristic {0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph cannot be realized: {0}")]
    UnrealizableGraph(String),
    #[error("unknown corpus instance `{0}`")]
    UnknownName(String),
    #[error("generation target not met after {attempts} attempts")]
    GenerationExhausted { attempts: usize },
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
