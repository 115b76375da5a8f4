//! Floating-point scalar abstraction shared by every numerical routine.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, NumAssign};

/// Real scalar type the library is generic over.
///
/// Implemented for `f32` and `f64`. Each implementation carries its own
/// default tolerance record, since thresholds like `1e-12` are meaningless
/// below double precision.
pub trait Scalar: Float + FloatConst + NumAssign + Sum + Debug + Display + LowerExp + Default + Send + Sync + 'static {
    fn default_tolerances() -> Tolerances<Self>;

    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn from_usize(n: usize) -> Self {
        Self::from(n).expect("usize representable in scalar type")
    }
}

/// Centralized numerical thresholds.
///
/// Every routine that compares floats takes its threshold from one of these
/// fields. Obtain the defaults with [`Tolerances::default`] and override
/// individual fields with struct update syntax.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances<T> {
    /// Relative Hermiticity / unitarity / trace tolerance.
    pub herm: T,
    /// Reconstruction and completeness tolerance (Frobenius norm).
    pub recon: T,
    /// Eigenvalue tolerance: Jacobi convergence (relative to ‖H‖_F), the
    /// negative-eigenvalue clamp, the rank cut-off of density matrices and
    /// the clamp applied to skew-information outputs.
    pub eig: T,
    /// Maximum number of cyclic Jacobi sweeps.
    pub max_sweeps: usize,
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        T::default_tolerances()
    }
}

pub const HERM_TOL: f64 = 1e-10;
pub const RECON_TOL: f64 = 1e-9;
pub const EIG_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

impl Scalar for f64 {
    fn default_tolerances() -> Tolerances<f64> {
        Tolerances { herm: HERM_TOL, recon: RECON_TOL, eig: EIG_TOL, max_sweeps: MAX_SWEEPS }
    }
}

impl Scalar for f32 {
    fn default_tolerances() -> Tolerances<f32> {
        Tolerances { herm: 1e-4, recon: 1e-3, eig: 1e-6, max_sweeps: MAX_SWEEPS }
    }
}
