use thiserror::Error;

/// Failures raised by arithmetic and geometric operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative value")]
    NegativeRadicand,
    #[error("square root nesting depth {depth} exceeds limit {limit}")]
    DepthLimitExceeded { depth: u32, limit: u32 },
    #[error("square root not representable in this scalar type")]
    NotRepresentable,
    #[error("{op}: precondition `{name}` violated")]
    PreconditionViolated { op: &'static str, name: &'static str },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn require(cond: bool, op: &'static str, name: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::PreconditionViolated { op, name })
    }
}
