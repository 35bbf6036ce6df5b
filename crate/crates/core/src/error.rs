use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant has a stable machine-readable [`code`](Error::code), used by
/// the command-line front end for its structured error bodies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation contains a directed cycle through `{0}`")]
    Cycle(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element `{0}` is listed more than once")]
    DuplicateElement(String),
    #[error("sequence is not a permutation of the ground set")]
    NotAPermutation,
    #[error("extension #{0} is not a linear extension of the poset")]
    InvalidExtension(usize),
    #[error("a class of duplicated holdings needs a realizer with at least two extensions")]
    NeedTwoExtensions,
    #[error("interval {0} is empty")]
    EmptyInterval(String),
    #[error("ground sets differ")]
    GroundSetMismatch,
    #[error("not an interval order: 2+2 on {0:?}")]
    NotIntervalOrder(Vec<String>),
    #[error("interval for `{0}` has length zero and cannot be opened")]
    DegenerateInterval(String),
    #[error("scale factor must be positive, got {0}")]
    InvalidScale(String),
    #[error("pair ({0}, {1}) is not an incomparable pair")]
    PairNotIncomparable(String, String),
    #[error("the two sets share element `{0}`")]
    NotDisjoint(String),
    #[error("separating pair set contains an alternating cycle")]
    InternalCycle,
    #[error("representation is not unit mixed")]
    NotUnitMixed,
    #[error("representation lengths are not of the form {{0, r}} with closed intervals")]
    NotZeroOne,
    #[error("representation has non-closed intervals")]
    NotClosed,
    #[error("representation does not induce the given poset")]
    Inconsistent,
    #[error("constructed extensions do not realize the poset: {0}")]
    SelfCheckFailed(String),
    #[error("dimension exceeds the limit {0}")]
    LimitExceeded(usize),
    #[error("poset has {size} elements, the search is bounded at {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("poset is not a unit interval order")]
    NotUnitInterval,
    #[error("poset is a chain")]
    IsChain,
    #[error("unknown instance name `{0}`")]
    UnknownName(String),
    #[error("invalid generator policy: {0}")]
    InvalidPolicy(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable identifier for the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Cycle(_) => "CycleError",
            Error::UnknownElement(_) => "UnknownElement",
            Error::DuplicateElement(_) => "DuplicateElement",
            Error::NotAPermutation => "NotAPermutation",
            Error::InvalidExtension(_) => "InvalidExtension",
            Error::NeedTwoExtensions => "NeedTwoExtensions",
            Error::EmptyInterval(_) => "EmptyInterval",
            Error::GroundSetMismatch => "GroundSetMismatch",
            Error::NotIntervalOrder(_) => "NotIntervalOrder",
            Error::DegenerateInterval(_) => "DegenerateInterval",
            Error::InvalidScale(_) => "InvalidScale",
            Error::PairNotIncomparable(..) => "PairNotIncomparable",
            Error::NotDisjoint(_) => "NotDisjoint",
            Error::InternalCycle => "InternalCycle",
            Error::NotUnitMixed => "NotUnitMixed",
            Error::NotZeroOne => "NotZeroOne",
            Error::NotClosed => "NotClosed",
            Error::Inconsistent => "Inconsistent",
            Error::SelfCheckFailed(_) => "SelfCheckFailed",
            Error::LimitExceeded(_) => "LimitExceeded",
            Error::SizeBound { .. } => "SizeBound",
            Error::NotUnitInterval => "NotUnitInterval",
            Error::IsChain => "IsChain",
            Error::UnknownName(_) => "UnknownName",
            Error::InvalidPolicy(_) => "InvalidPolicy",
            Error::Parse(_) => "ParseError",
        }
    }

    /// True for errors that indicate a bug in this library rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::SelfCheckFailed(_) | Error::InternalCycle)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
