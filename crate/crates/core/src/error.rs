use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid digit character {0:?} in digit word")]
    InvalidDigit(char),

    #[error("word {0} is not admissible (contains 11 or a digit above 1)")]
    Inadmissible(String),

    #[error("expansion {0} violates the canonical shape: {1}")]
    NonCanonical(String, &'static str),

    #[error("expansion {0} does not evaluate to a natural number")]
    NonIntegerValue(String),

    #[error(
        "decode paths disagree for {word}: exact value {exact}, ceiling of positive part {ceiling}"
    )]
    CeilingMismatch {
        word: String,
        exact: String,
        ceiling: String,
    },

    #[error("normalization did not reach a fixpoint within {0} passes")]
    NormalizeDiverged(usize),

    #[error("word surgery failed: expected {expected} at the {side} of {word}")]
    Surgery {
        word: String,
        expected: &'static str,
        side: &'static str,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("expansion of {0} is too long for the bit-packed table")]
    TableOverflow(u64),
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
