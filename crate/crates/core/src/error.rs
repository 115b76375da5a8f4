use thiserror::Error;

/// Errors raised by the numerical core.
///
/// Floating-point payloads are reported as `f64` regardless of the scalar
/// type the computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (‖H − H†‖_F = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("negative eigenvalue {value:.3e} below clamp tolerance")]
    NegativeEigenvalue { value: f64 },

    #[error("exponent {0} outside (0, 1]")]
    InvalidExponent(f64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix entry count {found} does not match dimension {dim} (expected {dim}×{dim})")]
    BadShape { dim: usize, found: usize },

    #[error("Bloch vector has length {norm} > 1")]
    BlochVectorTooLong { norm: f64 },

    #[error("parameter {name} = {value} out of range")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("matrix is not unitary (‖U†U − I‖_F = {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("Kraus operators violate completeness (‖Σ K†K − I‖_F = {deviation:.3e})")]
    CompletenessViolation { deviation: f64 },

    #[error("trace is {trace}, expected 1")]
    TraceNotOne { trace: f64 },

    #[error("WYD parameter α = {0} must lie strictly inside (0, 1)")]
    AlphaOutOfRange(f64),

    #[error("state is singular (minimum eigenvalue {min_eigenvalue:.3e}); the metric needs a positive definite state")]
    SingularState { min_eigenvalue: f64 },

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("unknown metric name {0:?} (expected \"wy\", \"sld\" or \"wyd:<alpha>\")")]
    UnknownMetric(String),

    #[error("empty list")]
    EmptyList,

    #[error("bound requires at least three observables, got {0}")]
    RequiresThreeObservables(usize),

    #[error("bound requires at least two observables, got {0}")]
    RequiresTwoObservables(usize),

    #[error("bound requires at least three channels, got {0}")]
    RequiresThreeChannels(usize),

    #[error("bound requires at least two channels, got {0}")]
    RequiresTwoChannels(usize),

    #[error("channels have different Kraus counts ({0} vs {1}); pad them first")]
    UnequalKrausCounts(usize, usize),

    #[error("permutation search space {size} exceeds budget {budget}")]
    SearchSpaceTooLarge { size: u128, budget: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
