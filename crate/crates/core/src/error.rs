use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("letter {0:?} is not in the declared alphabet")]
    UndeclaredLetter(char),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("{what} budget exceeded (limit {limit})")]
    Budget { what: &'static str, limit: u64 },

    #[error("variable {0} is free but has no assigned position")]
    UnassignedVariable(String),

    #[error("a sentence was expected but {0:?} occur free")]
    FreeVariables(Vec<String>),

    #[error("expected exactly one free variable, found {0:?}")]
    Arity(Vec<String>),

    #[error("position {position} is out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("variable {0} occurs bound in the formula being relativized")]
    PivotBound(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),

    #[error("action axiom {axiom} violated at {witness}")]
    ActionAxiom { axiom: &'static str, witness: String },
}

impl Error {
    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
