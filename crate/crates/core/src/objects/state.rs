use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigendecomposition_with, power_clamped, ComplexMatrix, SpectralDecomposition};
use crate::scalar::{Scalar, Tolerances};

/// Positive-semidefinite, unit-trace Hermitian matrix with its spectral
/// decomposition cached at construction.
///
/// Rank-deficient (boundary) states are accepted. Eigenvalues with
/// magnitude below `rank_tolerance` are treated as exact zeros by
/// [`DensityMatrix::eigenvalues`] and [`DensityMatrix::power`], so that
/// roundoff at the level of `1e-17` cannot leak into fractional powers.
#[derive(Clone, Debug)]
pub struct DensityMatrix<T> {
    matrix: ComplexMatrix<T>,
    spectral: SpectralDecomposition<T>,
    rank_tolerance: T,
}

impl<T: Scalar> DensityMatrix<T> {
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        Self::new_with(matrix, &Tolerances::default())
    }

    /// Validates Hermiticity, unit trace (within `tol.herm`) and
    /// eigenvalues `≥ −tol.eig`; the rank tolerance is `tol.eig`.
    pub fn new_with(matrix: ComplexMatrix<T>, tol: &Tolerances<T>) -> Result<Self> {
        let spectral = hermitian_eigendecomposition_with(&matrix, tol)?;
        let trace = matrix.trace();
        if (trace.re - T::one()).abs() > tol.herm || trace.im.abs() > tol.herm {
            return Err(Error::TraceNotOne { trace: trace.re.to_f64().unwrap_or(f64::NAN) });
        }
        let min = spectral.min_eigenvalue();
        if min < -tol.eig {
            return Err(Error::NegativeEigenvalue { value: min.to_f64().unwrap_or(f64::NAN) });
        }
        Ok(Self { matrix, spectral, rank_tolerance: tol.eig })
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    /// The raw cached decomposition (eigenvalues unclamped).
    pub fn spectral(&self) -> &SpectralDecomposition<T> {
        &self.spectral
    }

    pub fn rank_tolerance(&self) -> T {
        self.rank_tolerance
    }

    /// Eigenvalues, ascending, with `|λ| < rank_tolerance` (and any
    /// admitted negative roundoff) set to zero.
    pub fn eigenvalues(&self) -> Vec<T> {
        self.spectral.eigenvalues.iter().map(|&l| if l < self.rank_tolerance { T::zero() } else { l }).collect()
    }

    pub fn min_eigenvalue(&self) -> T {
        self.spectral.min_eigenvalue()
    }

    pub fn rank(&self) -> usize {
        self.eigenvalues().iter().filter(|&&l| l > T::zero()).count()
    }

    /// `ρ^s` from the cached decomposition, `0^s = 0`.
    pub fn power(&self, s: T) -> Result<ComplexMatrix<T>> {
        if !(s > T::zero() && s <= T::one()) {
            return Err(Error::InvalidExponent(s.to_f64().unwrap_or(f64::NAN)));
        }
        let rank_tol = self.rank_tolerance;
        Ok(self.spectral.map_eigenvalues(|l| if l < rank_tol { T::zero() } else { power_clamped(l, s) }))
    }

    /// The rotated state `U ρ U†`.
    pub fn rotated(&self, u: &ComplexMatrix<T>) -> Result<Self> {
        let m = &(u * &self.matrix) * &u.adjoint();
        Self::new_with(m, &Tolerances { eig: self.rank_tolerance, ..Tolerances::default() })
    }
}

/// `(I + r·σ)/2` for a Bloch vector with `|r| ≤ 1`.
pub fn bloch_qubit<T: Scalar>(rx: T, ry: T, rz: T) -> Result<DensityMatrix<T>> {
    let norm_sq = rx * rx + ry * ry + rz * rz;
    if norm_sq > T::one() + T::lit(1e-12) || norm_sq.is_nan() {
        return Err(Error::BlochVectorTooLong { norm: norm_sq.sqrt().to_f64().unwrap_or(f64::NAN) });
    }
    let half = T::lit(0.5);
    let m = ComplexMatrix::new(
        2,
        vec![
            Complex::new((T::one() + rz) * half, T::zero()),
            Complex::new(rx * half, -ry * half),
            Complex::new(rx * half, ry * half),
            Complex::new((T::one() - rz) * half, T::zero()),
        ],
    )?;
    DensityMatrix::new(m)
}

/// Two-qubit Gisin state `λ|ψ(θ)⟩⟨ψ(θ)| + (1 − λ)σ₀` with
/// `|ψ(θ)⟩ = sin θ|01⟩ − cos θ|10⟩` and `σ₀ = (|00⟩⟨00| + |11⟩⟨11|)/2`,
/// in the basis `{00, 01, 10, 11}`.
pub fn gisin_state<T: Scalar>(lambda: T, theta: T) -> Result<DensityMatrix<T>> {
    let slack = T::lit(1e-12);
    if !(lambda >= T::zero() && lambda <= T::one()) {
        return Err(Error::ParameterOutOfRange { name: "lambda", value: lambda.to_f64().unwrap_or(f64::NAN) });
    }
    let two_pi = T::PI() + T::PI();
    if !(theta >= -slack && theta <= two_pi + slack) {
        return Err(Error::ParameterOutOfRange { name: "theta", value: theta.to_f64().unwrap_or(f64::NAN) });
    }
    let (s, c) = theta.sin_cos();
    let zero = Complex::zero();
    let psi = [zero, Complex::new(s, T::zero()), Complex::new(-c, T::zero()), zero];
    let pure = ComplexMatrix::outer(&psi, &psi);
    let mixed_weight = (T::one() - lambda) * T::lit(0.5);
    let sigma0 = ComplexMatrix::from_real_diag(&[mixed_weight, T::zero(), T::zero(), mixed_weight]);
    DensityMatrix::new(&pure.scale(lambda) + &sigma0)
}
