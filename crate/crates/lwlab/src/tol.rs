//! Tolerance thresholds used throughout the library.
//!
//! Exact pipelines (hull, simplicial volume, covariance) work at relative
//! 1e-9; hull predicates at 1e-10 scaled by coordinate magnitude with an
//! exact-sign fallback; orthonormality at 1e-12. Looser thresholds are
//! documented where a sampling or quadrature error budget applies.

/// Relative tolerance for exact geometric pipelines (volumes, moments).
pub const EXACT_REL: f64 = 1e-9;

/// Coplanarity threshold for hull predicates, scaled by coordinate magnitude.
pub const COPLANAR: f64 = 1e-10;

/// Max-norm threshold on `B^T B - I` for orthonormal bases and subspaces.
pub const ORTHO: f64 = 1e-12;

/// Residual allowed on the covariance of an isotropic image, `||Cov - L^2 I||_max`.
pub const ISOTROPIC_RESIDUAL: f64 = 1e-8;

/// Relative eigenvalue gap below which eigenspaces are treated as degenerate.
pub const EIGEN_TIE: f64 = 1e-10;

/// Condition-number cap for covariance square roots.
pub const COND_CAP: f64 = 1e12;

/// Relative quadrature budget for non-polynomial `|t|^p` integrands.
pub const QUADRATURE_REL: f64 = 1e-8;

/// Relative stability cap for sampled body volumes (outer/inner hulls).
pub const SAMPLING_REL: f64 = 1e-3;

/// Convergence threshold on search objectives.
pub const SEARCH_OBJ: f64 = 1e-10;

/// Determinant magnitude below which an affine map counts as singular.
pub const SINGULAR_DET: f64 = 1e-12;
