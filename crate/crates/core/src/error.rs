//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The design matrix does not have full column rank.
    #[error("design matrix is rank-deficient: numerical rank {rank} < {cols} columns")]
    RankDeficient { rank: usize, cols: usize },

    /// A matrix or vector entry is NaN or infinite.
    #[error("non-finite entry at position {row},{col}: {value}")]
    InvalidEntry { row: usize, col: usize, value: f64 },

    /// All raw score weights are zero; no probability distribution exists.
    #[error("degenerate sampling scores: every raw weight is zero")]
    DegenerateScores,

    /// A probability vector assigns zero mass to a row that carries information.
    #[error("invalid sampling scores: zero probability on informative row {row} (leverage {leverage})")]
    InvalidScores { row: usize, leverage: f64 },

    /// The sampled, rescaled row submatrix cannot determine all coefficients.
    #[error("sampled submatrix is rank-deficient ({rank} < {cols}); redraw with more samples")]
    SampledRankDeficient { rank: usize, cols: usize },

    /// n^m exceeds the enumeration cap.
    #[error("enumeration of {n}^{m} sequences exceeds cap {cap}")]
    EnumerationTooLarge { n: usize, m: usize, cap: u64 },

    #[error("dimension mismatch: {context} (expected {expected}, got {actual})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    /// Synthetic design generation kept producing rank-deficient matrices.
    #[error("instance generation failed after {retries} rank-deficiency retries")]
    GenerationFailed { retries: usize },

    /// The requested scale matrix is not positive definite.
    #[error("scale matrix with base {base} and decay {decay} is not positive definite")]
    NotPositiveDefinite { base: f64, decay: f64 },

    /// An oracle-optimal family was beaten by another evaluated family.
    #[error("optimality violated: {family} exceeds the {metric} minimum by {excess}")]
    OptimalityViolated {
        family: &'static str,
        metric: &'static str,
        excess: f64,
    },

    /// No records match the requested plot axis.
    #[error("no records to plot")]
    EmptyPlot,

    #[error("invalid value for {what}: {detail}")]
    InvalidValue { what: &'static str, detail: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {detail}")]
    Parse { path: String, detail: String },
}

impl Error {
    /// CLI exit code: 1 for validation problems, 2 for I/O problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } | Error::Parse { .. } => 2,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            detail: detail.into(),
        }
    }
}
