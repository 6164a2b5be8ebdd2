use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid level {0}: levels start at 1")]
    InvalidLevel(u32),
    #[error("capability limit: {0}")]
    Capability(String),
    #[error("decimation singular: D vanished at step {step}")]
    DecimationSingular { step: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_level(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidLevel(n))
    } else {
        Ok(())
    }
}
