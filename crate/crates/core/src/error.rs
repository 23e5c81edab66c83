use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("not closed under addition: radicands {left} and {right} differ")]
    NotClosed { left: u64, right: u64 },

    #[error("radicand too large: cannot certify squarefree part of {0} by trial division")]
    RadicandTooLarge(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("nmax is required for infinite-dimensional class {0}")]
    MissingNmax(String),

    #[error("not Fock-realizable: {0}")]
    NotFockRealizable(String),

    #[error("cutoff too small: state {state} lies outside the box {cutoffs}")]
    CutoffTooSmall { state: String, cutoffs: String },

    #[error("block not invariant: {0}")]
    NotInvariant(String),

    #[error("operator image escapes the basis span at degree {degree}")]
    BasisEscape { degree: usize },

    #[error("bad mode {mode} for a {n_modes}-mode space")]
    BadMode { mode: usize, n_modes: usize },

    #[error("expected a {expected}-mode space, got {actual}")]
    Arity { expected: usize, actual: usize },

    #[error("nonpositive normalizer l(l+1) - k(1-k) = {0}")]
    NonpositiveNormalizer(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
