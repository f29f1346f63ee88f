use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum AgctError {
    #[error("alphabet must contain at least two distinct symbols, got {0}")]
    AlphabetTooSmall(usize),

    #[error("duplicate alphabet symbol `{0}`")]
    DuplicateSymbol(String),

    #[error("symbol index {index} out of range for alphabet of size {size}")]
    SymbolOutOfRange { index: usize, size: usize },

    #[error("group index {index} out of range, {groups} groups")]
    GroupOutOfRange { index: usize, groups: usize },

    #[error("empty group vector")]
    EmptyVector,

    #[error("norm exponent must be >= 1, got {0}")]
    BadExponent(f64),

    #[error("distributions live on different alphabets ({0} vs {1} symbols)")]
    AlphabetMismatch(usize, usize),

    #[error("invalid distribution: {0}")]
    BadDistribution(String),

    #[error("sample sequence {group} has length {len}, need at least 2")]
    SampleTooShort { group: usize, len: usize },

    #[error("sample must contain at least one group")]
    NoGroups,

    #[error("max_depth must be positive")]
    ZeroMaxDepth,

    #[error("count is zero; unseen nodes carry unit radius")]
    ZeroCount,

    #[error("confidence parameter must lie in (0,1), got {0}")]
    BadDelta(f64),

    #[error("geometric grid base must exceed 1, got {0}")]
    BadGamma(f64),

    #[error("sample size n={0} too small for this radius mode, need n >= 9")]
    SampleSizeTooSmall(usize),

    #[error("slack parameter c must be positive, got {0}")]
    BadSlack(f64),

    #[error("exponents violate the selection condition: need k <= m and r >= km/(m-k), or k <= r = m = inf (k={k}, r={r}, m={m})")]
    BadExponentTriple { k: String, r: String, m: String },

    #[error("history too short: the tree has a deeper node that the supplied past cannot resolve")]
    InsufficientHistory,

    #[error("state space {states} exceeds budget {budget}; refit with a shallower tree or raise the budget")]
    StateBudgetExceeded { states: usize, budget: usize },

    #[error("value iteration did not reach tolerance {tol} within {max_iter} sweeps (residual {residual})")]
    NoConvergence {
        tol: f64,
        max_iter: usize,
        residual: f64,
    },

    #[error("tree enumeration budget exceeded at depth {0}")]
    EnumerationBudget(usize),

    #[error("renewal age sampler failed: {0}")]
    RenewalSampler(String),

    #[error("{path}:{line}:{column}: {message}")]
    Corpus {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("model file error: {0}")]
    ModelFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, AgctError>;
