use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what}: size {actual} exceeds cap {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("singular system")]
    Singular,

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("{what}: {value} is not divisible by {divisor}")]
    NotDivisible {
        what: &'static str,
        value: String,
        divisor: String,
    },

    #[error("digit {index} is {value}, not below base {base}")]
    DigitOverflow {
        index: usize,
        value: String,
        base: String,
    },

    #[error("arity mismatch: vertex has degree {vertex_degree}, matchgate has {dangling} dangling edges")]
    ArityMismatch { vertex_degree: usize, dangling: usize },

    #[error("color mismatch at dangling edge {label}: host {host}, gadget {gadget}")]
    ColorMismatch { label: usize, host: u32, gadget: u32 },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub fn cap(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::CapExceeded {
            what,
            limit,
            actual,
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
