use thiserror::Error;

/// Errors surfaced by the library. `Internal` means a mathematical identity
/// that must hold by construction failed to verify; it is always a bug.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("characteristic {0} is not prime")]
    NonPrimeChar(u64),
    #[error("generator is not homogeneous: {0}")]
    NonHomogeneous(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("internal verification failed: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::NonPrimeChar(_)
            | Error::NonHomogeneous(_)
            | Error::RingMismatch
            | Error::Precondition(_) => 2,
            Error::Budget(_) => 3,
            Error::Internal(_) => 4,
            Error::Io(_) => 2,
        }
    }
}
