use thiserror::Error;

/// Errors shared across the geometry kernel and the search/harness layers.
#[derive(Debug, Error)]
pub enum LwError {
    /// Input points do not span the requested dimension.
    #[error("degenerate input: affine hull has dimension {found}, expected {expected}")]
    DegenerateInput { found: usize, expected: usize },

    /// A linear subspace does not meet the interior of the body.
    #[error("empty section: subspace misses the interior of the body")]
    EmptySection,

    /// Affine map with |det| below the invertibility threshold.
    #[error("singular affine map: |det| = {det:.3e}")]
    SingularMap { det: f64 },

    /// Operation requires a centered, volume-1 body.
    #[error("body is not normalized: {reason}")]
    NotNormalized { reason: String },

    /// Covariance matrix too ill-conditioned for a stable square root.
    #[error("covariance matrix ill-conditioned: cond = {cond:.3e}")]
    IllConditioned { cond: f64 },

    /// Weighted set family fails the uniform-cover identity.
    #[error("not a uniform cover: coordinate {index} has weight sum {sum}")]
    NotAUniformCover { index: usize, sum: f64 },

    /// Sampling-based estimate did not stabilize within the configured cap.
    #[error("unconverged: stability estimate {estimate:.3e} above {threshold:.3e} at cap {cap}")]
    Unconverged {
        estimate: f64,
        threshold: f64,
        cap: usize,
    },

    /// Frame search could not certify the inscribed cross-polytope bound.
    #[error("frame search failed: best certificate ratio {ratio:.6} exceeds 1 + tol")]
    SearchFailed { ratio: f64 },

    #[error("invalid body specification: {0}")]
    BadBodySpec(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, LwError>;
