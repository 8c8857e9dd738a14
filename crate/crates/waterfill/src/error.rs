use thiserror::Error;

/// Errors raised by profile construction, the solvers, and the file formats.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("activity name must be non-empty")]
    EmptyName,
    #[error("aptitude must be a positive finite number, got {0}")]
    InvalidAptitude(f64),
    #[error("duplicate activity name `{0}`")]
    DuplicateName(String),
    #[error("profile must contain at least one activity")]
    EmptyProfile,
    #[error("budget must be non-negative and finite, got {0}")]
    InvalidBudget(f64),
    #[error("time must be non-negative and finite, got {0}")]
    InvalidTime(f64),
    #[error("time must be finite, got {0}")]
    NonFiniteTime(f64),
    #[error("expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("bisection needs a positive budget; the exact solver handles a zero budget")]
    ZeroBudget,
    #[error("brute-force search supports at most {max} activities, got {actual}")]
    TooManyActivities { max: usize, actual: usize },
    #[error("grid needs at least 2 points per coordinate, got {0}")]
    InvalidGridPoints(usize),
    #[error("sweep range must satisfy 0 <= min < max, got [{min}, {max}]")]
    InvalidSweepRange { min: f64, max: f64 },
    #[error("sweep needs at least 2 steps, got {0}")]
    InvalidSteps(usize),
    #[error("chart must be at least {min_width} columns by {min_height} rows, got {width}x{height}")]
    ChartTooSmall {
        width: usize,
        height: usize,
        min_width: usize,
        min_height: usize,
    },
    #[error("malformed header: expected `name,aptitude`, got `{0}`")]
    MalformedHeader(String),
    #[error("row {row}: expected 2 comma-separated fields, got {fields}")]
    MalformedRow { row: usize, fields: usize },
    #[error("row {row}: activity name is empty")]
    EmptyNameAt { row: usize },
    #[error("row {row}: aptitude must be a positive finite decimal, got `{value}`")]
    InvalidAptitudeAt { row: usize, value: String },
    #[error("row {row}: duplicate activity name `{name}`")]
    DuplicateNameAt { name: String, row: usize },
    #[error("profile contains no activities")]
    EmptyDocument,
    #[error("invalid JSON profile: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
