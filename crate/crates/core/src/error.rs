//! Error type shared by every module, with the process exit code each
//! variant maps to on the command line.

use thiserror::Error;

/// Maximum number of Clifford generators a blade bitmask can hold.
pub const MAX_GENERATORS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension must be in 1..={MAX_GENERATORS}, got {0}")]
    InvalidDimension(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("blade indices must be strictly increasing, got {0:?}")]
    UnsortedBlade(Vec<usize>),

    #[error("axis {axis} out of range 0..={n}")]
    AxisOutOfRange { axis: usize, n: usize },

    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("polynomial is not monogenic")]
    NotMonogenic,

    #[error("polynomial depends on x0 where an x0-free polynomial is required")]
    DependsOnX0,

    #[error("total degree {degree} exceeds the cap {max}")]
    DegreeBound { degree: u32, max: u32 },

    #[error("parameter out of bounds: {0}")]
    ParameterBound(String),

    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("schema violation: {0}")]
    Schema(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Exit status used by the command-line front end.
    ///
    /// 2 = input error, 3 = bound exceeded, 4 = domain precondition.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DegreeBound { .. } | Error::ParameterBound(_) | Error::InvalidDimension(_) => 3,
            Error::NotMonogenic | Error::DependsOnX0 => 4,
            _ => 2,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Schema(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
