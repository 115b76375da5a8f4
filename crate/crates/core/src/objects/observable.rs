use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::{Scalar, Tolerances};

/// Hermitian operator.
#[derive(Clone, Debug, PartialEq)]
pub struct Observable<T> {
    matrix: ComplexMatrix<T>,
}

impl<T: Scalar> Observable<T> {
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        let tol = Tolerances::<T>::default();
        if !matrix.is_hermitian(tol.herm) {
            return Err(Error::NotHermitian { deviation: matrix.hermitian_deviation().to_f64().unwrap_or(f64::NAN) });
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    X,
    Y,
    Z,
}

/// Which tensor factor carries the Pauli matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `σ ⊗ I`
    Left,
    /// `I ⊗ σ`
    Right,
}

pub fn pauli_matrix<T: Scalar>(which: Pauli) -> ComplexMatrix<T> {
    let o = Complex::<T>::zero();
    let l = Complex::<T>::one();
    let i = Complex::<T>::i();
    let entries = match which {
        Pauli::X => vec![o, l, l, o],
        Pauli::Y => vec![o, -i, i, o],
        Pauli::Z => vec![l, o, o, -l],
    };
    ComplexMatrix::new(2, entries).expect("2×2 Pauli")
}

pub fn pauli<T: Scalar>(which: Pauli) -> Observable<T> {
    Observable { matrix: pauli_matrix(which) }
}

/// Pauli matrix on one factor of a two-qubit system.
pub fn lifted_pauli<T: Scalar>(which: Pauli, side: Side) -> Observable<T> {
    let s = pauli_matrix(which);
    let id = ComplexMatrix::identity(2);
    let matrix = match side {
        Side::Left => s.kron(&id),
        Side::Right => id.kron(&s),
    };
    Observable { matrix }
}
