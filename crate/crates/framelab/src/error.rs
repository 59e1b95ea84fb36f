use thiserror::Error;

/// Errors produced by frame construction and the operations on frames.
#[derive(Debug, Clone, Error)]
pub enum FrameError {
    #[error("vector has length {got}, expected the ambient dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coefficient sequence has length {got}, expected the frame size {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("frame has no vectors")]
    EmptyFrame,

    #[error("a frame over the real field may not contain complex entries")]
    FieldMismatch,

    #[error("entry is not finite in vector {index}")]
    NonFinite { index: usize },

    #[error("frame does not span (smallest frame-operator eigenvalue {min_eigenvalue:.3e} is below the spanning threshold)")]
    NonSpanning { min_eigenvalue: f64 },

    #[error("every vector is zero within the zero threshold")]
    AllZero,

    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:.3e})"
    )]
    EigenNonConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("zero vector at index {0}: strip zero vectors before partitioning")]
    ZeroVector(usize),

    #[error("ground set has rank zero")]
    RankZero,

    #[error("ground set of {n} elements exceeds the brute-force limit {max}")]
    BruteForceTooLarge { n: usize, max: usize },

    #[error("operator is not an orthogonal projection: {0}")]
    NotAProjection(String),

    #[error("matrix is not self-adjoint (max asymmetry {asymmetry:.3e})")]
    NotHermitian { asymmetry: f64 },

    #[error("malformed transform: {0}")]
    MalformedTransform(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed frame document: {0}")]
    MalformedDocument(String),

    #[error("subset index {index} is out of range for ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, FrameError>;
