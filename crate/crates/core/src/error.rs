use thiserror::Error;

/// Errors raised by evaluators, zero finders and classifiers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("pole of {func} at or too close to s = {at}")]
    Pole { func: &'static str, at: String },

    #[error("function value too close to a zero or pole near a finite-difference stencil point at t = {t}")]
    PoleOrZeroTooClose { t: f64 },

    #[error("pole sentinel: {0}")]
    PoleSentinel(&'static str),

    #[error("argument outside the supported domain: {0}")]
    Domain(String),

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("sum term cap {cap} exceeded in {what}")]
    TermCapExceeded { what: &'static str, cap: u64 },

    #[error("bracket lost while refining a zero near t = {t}")]
    LostBracket { t: f64 },

    #[error("argument-principle winding over the seed box is {got}, expected 1")]
    WindingNotOne { got: i64 },

    #[error("winding number along contour is not close to an integer (got {0})")]
    WindingNotIntegral(f64),

    #[error("argument derivative degenerate (|d| < {threshold:e}) at t = {t}")]
    DegenerateDerivative { t: f64, threshold: f64 },

    #[error("both reconstruction branches are degenerate at s = {at}")]
    BranchError { at: String },

    #[error("function {0} has no real critical-line phase")]
    UnsupportedFunction(String),

    #[error("invalid evaluation context: {0}")]
    InvalidContext(String),

    #[error("grid size {nx}x{nt} exceeds the 2000x2000 cap")]
    GridTooLarge { nx: usize, nt: usize },

    #[error("catalog i/o: {0}")]
    CatalogIo(String),

    #[error("cache directory is locked by another process: {0}")]
    CacheLocked(String),
}

pub type Result<T> = std::result::Result<T, Error>;
