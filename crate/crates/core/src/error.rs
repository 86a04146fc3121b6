use alloc::string::String;

use crate::laurent::Var;
use crate::word::{GroupId, LetterKind};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("variable {0} assigned zero (negative exponents occur)")]
    ZeroAssignment(Var),

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("{kind} index {index} out of range for {group}")]
    IndexOutOfRange {
        kind: LetterKind,
        index: i64,
        group: GroupId,
    },

    #[error("generator {kind} does not belong to {group}")]
    KindNotInGroup { kind: LetterKind, group: GroupId },

    #[error("unknown macro `{0}`")]
    UnknownMacro(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("word is not a pure braid")]
    NotPure,

    #[error("representation {rep} cannot act on {group}")]
    IncompatibleRepGroup { rep: String, group: GroupId },

    #[error("non-generic input near t = {time:.12} for strands ({}, {}): {reason}", pair.0 + 1, pair.1 + 1)]
    NonGenericInput {
        time: f64,
        pair: (usize, usize),
        reason: &'static str,
    },

    #[error("strands {} and {} have linking number {linking}", pair.0 + 1, pair.1 + 1)]
    NonZeroLinking { pair: (usize, usize), linking: i64 },

    #[error("winding of strands {} and {} is {turns} turns, not an integer", pair.0 + 1, pair.1 + 1)]
    NonIntegerWinding { pair: (usize, usize), turns: f64 },

    #[error("strand {} hits a puncture near t = {time:.12}", strand + 1)]
    PunctureCollision { strand: usize, time: f64 },

    #[error("perturbation breaks strand separation")]
    SeparationViolated,

    #[error("invalid braid: {0}")]
    InvalidBraid(String),
}
