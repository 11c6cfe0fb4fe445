use thiserror::Error;

use crate::algebra::Element;

/// Errors produced by table construction, identity checks and the enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("expected {expected} entries, got {actual}")]
    WrongLength { expected: usize, actual: usize },
    #[error("entry {value} at position {position} is out of range for order {order}")]
    EntryOutOfRange {
        position: usize,
        value: usize,
        order: usize,
    },
    #[error("order {order} exceeds the limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("element {element} is out of range for order {order}")]
    ElementOutOfRange { element: Element, order: usize },
    #[error("map is not bijective")]
    NotBijective,
    /// More than one map satisfies the CI identity for the same element.
    #[error("J is not unique: element {element} admits {candidates:?}")]
    AmbiguousJ {
        element: Element,
        candidates: Vec<Element>,
    },
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("table has no identity element")]
    NotALoop,
    #[error("search exceeded the node limit of {limit}")]
    NodeLimitExceeded { limit: u64 },
    /// A left CI table failed a structural property that must follow from the CI identity.
    #[error("left CI table violates a derived property: {0}")]
    DerivedPropertyViolated(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
