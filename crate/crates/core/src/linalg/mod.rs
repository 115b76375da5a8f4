//! Dense complex matrices and Hermitian spectral machinery.

mod eigen;
mod matrix;

pub(crate) use eigen::power_clamped;
pub use eigen::{hermitian_eigendecomposition, hermitian_eigendecomposition_with, matrix_power, matrix_power_with, SpectralDecomposition};
pub use matrix::{commutator, trace_product, ComplexMatrix};
