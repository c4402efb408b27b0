use thiserror::Error;

/// Failure while reading the textual word grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {column} near `{token}`: {message}")]
pub struct ParseError {
    /// 1-based column of the offending token.
    pub column: usize,
    pub token: String,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(column: usize, token: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            column,
            token: token.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),
    #[error("duplicate generator `{0}` in alphabet")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("generator `{0}` has no image")]
    MissingImage(String),
    #[error("integer overflow in {0}")]
    OutOfRange(&'static str),
    #[error("rewrite budget of {0} steps exceeded")]
    RewriteBudgetExceeded(usize),
    #[error("endomorphism does not lift to the torus: {0}")]
    NotLiftable(String),
    #[error("not an automorphism: {0}")]
    NonAutomorphism(String),
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("point {0} lies outside the fundamental domain")]
    OutOfDomain(String),
    #[error("domain error: {0}")]
    Domain(String),
}

impl AlgebraError {
    /// True for errors caused by malformed input text.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, AlgebraError::Parse(_))
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
