use thiserror::Error;

use crate::family_core::FiniteSet;
use crate::ordinal::Ordinal;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse ordinal `{input}`: {reason}")]
    OrdinalSyntax { input: String, reason: String },

    #[error("cannot parse set `{input}`: {reason}")]
    SetSyntax { input: String, reason: String },

    #[error("cannot parse window `{input}`: {reason}")]
    WindowSyntax { input: String, reason: String },

    #[error("unknown family literal `{0}`")]
    FamilySyntax(String),

    #[error("unknown coloring `{0}`")]
    ColoringSyntax(String),

    #[error("elements must be positive naturals, strictly increasing: {0:?}")]
    NotStrictlyIncreasing(Vec<u32>),

    #[error("{0} is not a limit ordinal")]
    NotLimit(Ordinal),

    #[error("sequence index must be at least 1")]
    ZeroIndex,

    #[error("index {index} out of range for a sequence of length {len}")]
    IndexOutOfRange { index: u32, len: usize },

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("family `{0}` is not uniform")]
    NotUniform(String),

    #[error("family `{family}` violates its contract at {set}: {detail}")]
    FamilyContract {
        family: String,
        set: FiniteSet,
        detail: String,
    },

    #[error("{set} is not an initial segment of a member of `{family}`")]
    NotInStarClosure { family: String, set: FiniteSet },

    #[error("probe disagreement at {set} (derivative level {level})")]
    ProbeInconsistency { set: FiniteSet, level: u32 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("coloring returned {got}, expected a color in 1..={colors}")]
    ColorOutOfRange { got: u32, colors: u32 },

    #[error("certificate rejected by the checker: {0}")]
    Rejected(String),

    #[error("external coloring failed: {0}")]
    External(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
