use thiserror::Error;

/// Errors produced by the extension library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate node set")]
    DegenerateNodes,

    #[error("nodes must be finite, nonnegative and strictly increasing")]
    NodesNotIncreasing,

    #[error("ill-conditioned beyond solvable range")]
    IllConditioned,

    #[error("{what} = {value} is outside the domain [{lo}, {hi}]")]
    Domain {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("extension reach exceeds source interval: sample argument {argument} lies outside [0, {source_len}]; need a*M <= L")]
    ReachExceeded { argument: f64, source_len: f64 },

    #[error("undefined ratio: function vanishes on the source interval")]
    UndefinedRatio,

    #[error("function not resolvable at tolerance (panel [{left}, {right}] at depth {depth})")]
    NotResolvable { left: f64, right: f64, depth: usize },

    #[error("tolerance below root-finder accuracy")]
    ToleranceTooSmall,

    #[error("degenerate parametrization at theta = {theta}")]
    DegenerateParametrization { theta: f64 },

    #[error("sample point ({x}, {y}) falls outside the domain while extending to grid point ({qx}, {qy}); reduce reach (suggested {suggested_reach:.6})")]
    SampleOutsideDomain {
        x: f64,
        y: f64,
        qx: f64,
        qy: f64,
        suggested_reach: f64,
    },

    #[error("empty input")]
    EmptyInput,
}

pub type Result<T> = std::result::Result<T, Error>;
