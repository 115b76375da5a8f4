//! Random states, operators and channels for sampling-based checks.

use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::linalg::{hermitian_eigendecomposition, ComplexMatrix};
use crate::objects::{DensityMatrix, QuantumChannel};
use crate::scalar::Scalar;

fn gaussian<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> T {
    let x: f64 = StandardNormal.sample(rng);
    T::lit(x)
}

/// Matrix with i.i.d. standard complex Gaussian entries.
pub fn random_ginibre<T: Scalar, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(dim, |_, _| Complex::new(gaussian(rng), gaussian(rng)))
}

/// `(G + G†)/2` for a Ginibre `G`.
pub fn random_hermitian<T: Scalar, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix<T> {
    let g = random_ginibre(rng, dim);
    (&g + &g.adjoint()).scale(T::lit(0.5))
}

/// `exp(iH)` for a random Hermitian `H`.
pub fn random_unitary<T: Scalar, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix<T> {
    let h = random_hermitian::<T, _>(rng, dim);
    let spec = hermitian_eigendecomposition(&h).expect("Hermitian by construction");
    let u = &spec.eigenvectors;
    let phases: Vec<Complex<T>> = spec.eigenvalues.iter().map(|&l| Complex::new(T::zero(), l).exp()).collect();
    ComplexMatrix::from_fn(dim, |i, j| {
        (0..dim).fold(Complex::new(T::zero(), T::zero()), |acc, k| acc + u[(i, k)] * phases[k] * u[(j, k)].conj())
    })
}

/// Full-rank state `GG†/Tr(GG†)` (Hilbert–Schmidt measure).
pub fn random_density<T: Scalar, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> DensityMatrix<T> {
    random_density_with_rank(rng, dim, dim)
}

/// State of the given rank: `GG†/Tr(GG†)` with `G` of shape `dim × rank`.
pub fn random_density_with_rank<T: Scalar, R: Rng + ?Sized>(rng: &mut R, dim: usize, rank: usize) -> DensityMatrix<T> {
    assert!(rank >= 1 && rank <= dim, "rank must lie in 1..=dim");
    let g = random_ginibre::<T, _>(rng, dim);
    let g = ComplexMatrix::from_fn(dim, |i, j| if j < rank { g[(i, j)] } else { Complex::new(T::zero(), T::zero()) });
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::new(m.scale(T::one() / tr)).expect("valid state by construction")
}

/// Random channel with `count` Kraus operators, from the first `dim`
/// columns of a random `count·dim`-dimensional unitary (Stinespring isometry).
pub fn random_channel<T: Scalar, R: Rng + ?Sized>(rng: &mut R, dim: usize, count: usize) -> QuantumChannel<T> {
    let big = random_unitary::<T, _>(rng, dim * count);
    let kraus = (0..count).map(|k| ComplexMatrix::from_fn(dim, |i, j| big[(k * dim + i, j)])).collect();
    QuantumChannel::new("random", kraus).expect("isometry blocks are complete")
}

/// Vector of i.i.d. standard complex Gaussian components.
pub fn random_vector<T: Scalar, R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Complex<T>> {
    (0..len).map(|_| Complex::new(gaussian(rng), gaussian(rng))).collect()
}
