use thiserror::Error;

/// Errors raised by the library. Every variant maps onto one of the CLI exit
/// codes via [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters v={v}, d={d}: {reason}")]
    InvalidParams { v: u32, d: u32, reason: String },

    #[error("index {index} out of range [{min}, {max}]")]
    IndexOutOfRange { index: i64, min: i64, max: i64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "enumeration guard: v={v} exceeds the oracle cap of {cap} (raise it with --oracle-cap)"
    )]
    ResourceGuard { v: u32, cap: u32 },
}

impl Error {
    /// Process exit code used by the command-line front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceGuard { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
