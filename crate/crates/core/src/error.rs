use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("invalid dimension {n}: {reason}")]
    InvalidDimension { n: usize, reason: &'static str },

    #[error("{what} with n = {n} exceeds the cap of {cap} (use --force to override)")]
    CapExceeded { what: String, n: usize, cap: usize },

    #[error("resource limit: {required} evaluations required, budget is {budget}")]
    Budget { required: u128, budget: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("entry {value} out of range 1..={n}")]
    OutOfRange { value: u64, n: usize },

    #[error("{0} is not {1}")]
    Domain(String, &'static str),

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("unbound variable '{0}'")]
    UnboundVariable(char),

    #[error("element {0} is not in the target carrier")]
    NotInCarrier(String),

    #[error("axiom '{axiom}' fails in {structure} at {at}")]
    AxiomViolation {
        structure: String,
        axiom: &'static str,
        at: String,
    },

    #[error("invalid identity: {0}")]
    InvalidIdentity(String),
}
