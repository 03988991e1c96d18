use thiserror::Error;

/// Errors surfaced by the numeric and exact pipelines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("grading cutoff mismatch: {0} vs {1}")]
    CutoffMismatch(u32, u32),

    #[error("resonant forcing rate {rate} for kappa^2 = {kappa2}")]
    ResonantForcing { rate: f64, kappa2: f64 },

    #[error("truncation too small: k_max = {k_max}, need at least {need}")]
    TruncationTooSmall { k_max: i64, need: i64 },

    #[error("quadrature did not stabilize: last change {change:.3e} (limit {limit:.3e})")]
    QuadratureUnstable { change: f64, limit: f64 },

    #[error("eigenvalue too close to the contour: sigma_min = {sigma_min:.3e} at {lambda}")]
    ContourCollision {
        sigma_min: f64,
        lambda: num_complex::Complex64,
    },

    #[error("near-singular resolvent block at k = {k}: |det| = {det:.3e}")]
    NearSingular { k: i64, det: f64 },

    #[error("Kato transform out of range: ||P - P0|| = {norm:.3e} >= 1")]
    KatoNormTooLarge { norm: f64 },

    #[error("consistency violation: {0}")]
    Consistency(String),

    #[error("certificate failure: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
