use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("word {0} has fewer than two syllables; its complement is not hyperbolic")]
    NotHyperbolic(String),

    #[error("valence formula does not apply to {0} (excluded family R2L2, RL^m, RL^mR)")]
    ExcludedWord(String),

    #[error("word {0} is arithmetic; the minimal orbifold is not a symmetry quotient")]
    Arithmetic(String),

    /// A structural check on a constructed object failed. Signals a bug in the
    /// construction rather than bad input.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
