use thiserror::Error;

/// Errors surfaced by the engine and the domain predicates.
#[derive(Debug, Error)]
pub enum Error {
    /// An intermediate vector grew past the configured number of monomials.
    #[error("support guard exceeded: {terms} terms (limit {limit})")]
    SupportGuard { terms: usize, limit: usize },

    /// A straightening/elimination loop ran past the configured step count.
    #[error("depth guard exceeded: {steps} steps (limit {limit})")]
    DepthGuard { steps: usize, limit: usize },

    /// Operands have incompatible lengths or live in different spaces.
    #[error("incompatible operands: {0}")]
    Incompatible(String),

    /// An input failed a precondition of the requested operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for resource-guard exhaustion (as opposed to bad input).
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::SupportGuard { .. } | Error::DepthGuard { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
