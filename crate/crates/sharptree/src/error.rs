//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by parsing, validation, and the analysis operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A line of an edge-list document could not be parsed.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The edge list does not describe a tree.
    #[error("not a tree: {0}")]
    NotATree(String),

    /// An edge carries weight zero.
    #[error("zero weight on edge {u} {v}")]
    ZeroWeight { u: String, v: String },

    /// An enumeration or search exceeded its configured cap.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// The core product of a full-rank factorization was singular.
    /// Cannot occur for symmetric input; reported instead of panicking.
    #[error("singular core in full-rank factorization")]
    SingularCore,

    /// The tree is not a star.
    #[error("not a star tree")]
    NotAStar,

    /// The tree is not a path with an odd number of vertices.
    #[error("not an odd path")]
    NotOddPath,

    /// An operation's structural precondition does not hold.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// The tree has a non-pendant vertex with no pendant neighbour.
    #[error("tree has a non-pendant vertex with no pendant neighbour")]
    NotInClassT,

    /// A signature construction requires strictly positive weights.
    #[error("edge weights must all be positive")]
    NonPositiveWeights,

    /// Matrix and signature orders disagree.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// Floating-point residuals exceed the requested tolerance.
    #[error("tolerance too tight: residual {residual:e} exceeds {tol:e}")]
    ToleranceTooTight { residual: f64, tol: f64 },

    /// The matrix has no positive eigenvalue. Cannot occur for a nonzero
    /// symmetric matrix; reported for the all-zero degenerate case.
    #[error("matrix has no positive eigenvalue")]
    NoPositiveEigenvalue,

    /// IO failure while reading an input file.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 input error, 2 property
    /// violation, 3 resource limit.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceLimit(_) => 3,
            Error::SingularCore | Error::ToleranceTooTight { .. } | Error::NoPositiveEigenvalue => {
                2
            }
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
