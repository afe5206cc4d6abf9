use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter `{letter}` does not belong to algebra `{algebra}`")]
    Domain { algebra: String, letter: String },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("algebra `{algebra}` does not support {operation}")]
    Unsupported { algebra: String, operation: String },

    #[error("`1 {op} 1` is undefined: both arguments have a nonzero constant term")]
    UnitPairing { op: &'static str },

    #[error("term contains a `>` node but the CTD signature only has `<` and `.`")]
    Signature,

    #[error("size {n} out of range (allowed {min}..={max})")]
    Size { n: usize, min: usize, max: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("not a Rota-Baxter operator: {0}")]
    NotRotaBaxter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
