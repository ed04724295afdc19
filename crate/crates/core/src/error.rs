use crate::presentation::Generator;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A builder was asked for parameters outside its domain.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// Reversing hit a pair of letters with no complement relation.
    #[error("reversing stuck: no relation with heads {x:?}, {y:?}")]
    StuckReversal { x: Generator, y: Generator },

    /// A rewrite or enumeration exceeded its step budget.
    #[error("step budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    /// A completeness check was attempted on a non-homogeneous presentation.
    #[error("presentation is not homogeneous: relation {lhs} = {rhs} has unequal side lengths")]
    NotHomogeneous { lhs: String, rhs: String },

    /// A completeness check was attempted on a non-complemented presentation.
    #[error("presentation is not complemented: {0}")]
    NotComplemented(String),

    /// A circle computation failed to find a period within its bound.
    #[error("no period found within bound {bound}; the circle may be infinite")]
    NoPeriodFound { bound: usize },

    /// A word could not be parsed against the presentation's alphabet.
    #[error("cannot parse word: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
