use thiserror::Error;

/// Domain and construction errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alpha = {alpha} is outside {domain}")]
    AlphaOutOfDomain { alpha: f64, domain: &'static str },
    #[error("unsupported order p = {p} for {family} weights (supported: {supported})")]
    UnsupportedOrder {
        p: usize,
        family: &'static str,
        supported: &'static str,
    },
    #[error("truncation length {got} is too small (minimum {min})")]
    TooFewTerms { got: usize, min: usize },
    #[error("leading coefficient of the generating polynomial is {0}; it must be positive")]
    SingularLeadingCoefficient(f64),
    #[error("weight table has {len} entries but {need} are required")]
    TableTooShort { len: usize, need: usize },
    #[error("stencil shift must be 0 or 1, got {0}")]
    InvalidShift(usize),
    #[error("grid index {index} is outside the interior range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("FFT extraction needs at least {need} samples, got {got}")]
    TooFewSamples { got: usize, need: usize },
    #[error("expansion order {n} is outside 2..={max}")]
    TruncationOrder { n: usize, max: usize },
    #[error("matrix dimension {size} exceeds the dense eigen-solve limit {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("stepping matrix is numerically singular (pivot {pivot:e})")]
    SingularSystem { pivot: f64 },
    #[error("non-finite value produced while computing {0}")]
    NonFinite(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
