use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed graph, set, parameter or file.
    #[error("input error: {0}")]
    Input(String),

    /// A configured size cap was exceeded. Never silently truncated.
    #[error("capacity exceeded: {what} is {got}, cap is {cap}")]
    Capacity {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    /// An operation's precondition does not hold (e.g. a non-tree passed to a tree routine).
    #[error("contract violated: {0}")]
    Contract(String),

    #[error("unknown law `{0}`")]
    UnknownLaw(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn check_cap(what: &'static str, got: usize, cap: usize) -> Result<()> {
        if got > cap {
            Err(Error::Capacity { what, got, cap })
        } else {
            Ok(())
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
