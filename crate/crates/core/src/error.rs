use thiserror::Error;

/// Everything that can go wrong across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("node set is empty")]
    EmptyNodeSet,
    #[error("duplicate abscissa x = {x}")]
    DuplicateAbscissa { x: f64 },
    #[error("non-finite input: {what}")]
    NonFiniteInput { what: &'static str },
    #[error("invalid range [{a}, {b}]: lower bound must be below upper bound")]
    InvalidRange { a: f64, b: f64 },
    #[error("sampled function returned {y} at x = {x}")]
    NonFiniteSample { x: f64, y: f64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("table needs at least 2 rows, found {found}")]
    TooFewRows { found: usize },
    #[error("degree {degree} needs {} points but the table has {points}", degree + 1)]
    DegreeTooLarge { degree: usize, points: usize },
    #[error("x = {x} lies outside the table domain [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    #[error("derivative {derivative:e} at x = {x} is below the usable floor")]
    DerivativeVanished { x: f64, derivative: f64 },
    #[error("empty difference population")]
    EmptyPopulation,
    #[error("degree {degree} exceeds the Vandermonde oracle limit of {limit}")]
    IllConditioned { degree: usize, limit: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable identifier used as the greppable prefix of CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyNodeSet => "EmptyNodeSet",
            Error::DuplicateAbscissa { .. } => "DuplicateAbscissa",
            Error::NonFiniteInput { .. } => "NonFiniteInput",
            Error::InvalidRange { .. } => "InvalidRange",
            Error::NonFiniteSample { .. } => "NonFiniteSample",
            Error::Parse { .. } => "ParseError",
            Error::TooFewRows { .. } => "TooFewRows",
            Error::DegreeTooLarge { .. } => "DegreeTooLarge",
            Error::OutOfDomain { .. } => "OutOfDomain",
            Error::DerivativeVanished { .. } => "DerivativeVanished",
            Error::EmptyPopulation => "EmptyPopulation",
            Error::IllConditioned { .. } => "IllConditioned",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::Io(_) => "IoError",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
