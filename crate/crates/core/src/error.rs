use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Variants fall into two families: input errors (malformed descriptions,
/// precondition violations) and certification failures (the field does not
/// split an endomorphism ring, a mutation could not be certified, a budget was
/// exhausted). The CLI maps them to exit codes 2 and 3 respectively.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{op}: syntax error at line {line}, column {column}: {message}")]
    Syntax {
        op: &'static str,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{op}: unknown vertex '{label}'")]
    UnknownVertex { op: &'static str, label: String },
    #[error("{op}: unknown arrow '{label}'")]
    UnknownArrow { op: &'static str, label: String },
    #[error("{op}: {message}")]
    Invalid { op: &'static str, message: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("basis_closure: not finite-dimensional within max_len = {max_len}")]
    NotFiniteDimensional { max_len: usize },
    #[error("nilpotency_index: ideal is not nilpotent")]
    NotNilpotent,
    #[error("factor_algebra: support quotient requires vertex deletion; use delete_vertices")]
    SupportQuotient,
    #[error("{op}: undefined for the zero algebra")]
    ZeroAlgebra { op: &'static str },
    #[error("nakayama: not a map of projectives")]
    NotProjectiveMap,
    #[error("decompose: field too small: p = {p} <= dim End(M) = {dim}")]
    FieldTooSmall { p: u64, dim: usize },
    #[error("{op}: non-split endomorphism ring")]
    NonSplit { op: &'static str },
    #[error("quiver_presentation: non-split block at summand {summand}")]
    NonSplitBlock { summand: usize },
    #[error("mutate: mutation failed certification: {0}")]
    MutationFailed(String),
    #[error("enumerate_stt: enumeration budget exceeded ({0} nodes)")]
    BudgetExceeded(usize),
    #[error("endo_algebra: summands must be pairwise non-isomorphic")]
    NotBasic,
    #[error("{op}: undetermined (>= {cap})")]
    Undetermined { op: &'static str, cap: usize },
    #[error("{op}: internal error: {message}")]
    Internal { op: &'static str, message: String },
    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invalid(op: &'static str, message: impl Into<String>) -> Self {
        Error::Invalid {
            op,
            message: message.into(),
        }
    }

    pub(crate) fn internal(op: &'static str, message: impl Into<String>) -> Self {
        Error::Internal {
            op,
            message: message.into(),
        }
    }

    /// True for failures caused by the ground field or a resource budget
    /// rather than by malformed input.
    pub fn is_certification_failure(&self) -> bool {
        matches!(
            self,
            Error::FieldTooSmall { .. }
                | Error::NonSplit { .. }
                | Error::NonSplitBlock { .. }
                | Error::MutationFailed(_)
                | Error::BudgetExceeded(_)
                | Error::Undetermined { .. }
                | Error::Internal { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
