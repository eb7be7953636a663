use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("torus knot parameters must be positive, got ({0}, {1})")]
    NonPositive(i64, i64),

    #[error("T({p},{q}) is a link, not a knot: gcd({p},{q}) = {gcd}")]
    NotCoprime { p: i64, q: i64, gcd: i64 },

    #[error("parameter {value} exceeds the configured limit {limit}")]
    TooLarge { value: i64, limit: i64 },

    #[error("angle {0} is not strictly between 0 and 1")]
    AngleOutOfRange(String),

    #[error("fraction {0} is not in lowest terms")]
    NotReduced(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: i64, strands: usize },

    #[error("closure of the braid word has {0} components; a knot is required")]
    NotAKnot(usize),

    #[error("eigenvalue {value:e} is within the ambiguous band of the zero threshold (max-norm {norm:e}); retry at a regular angle")]
    AmbiguousEigenvalue { value: f64, norm: f64 },

    #[error("step {index}: {reason}")]
    StepFailed { index: usize, reason: String },

    #[error("input exceeds the size limit: {0}")]
    LimitExceeded(String),
}
