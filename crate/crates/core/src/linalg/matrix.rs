use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense square matrix of complex entries stored row-major.
///
/// Arithmetic operators panic on dimension mismatch; the checked free
/// functions ([`commutator`], [`trace_product`]) return
/// [`Error::DimensionMismatch`] instead.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    /// Builds a `dim × dim` matrix from row-major entries.
    pub fn new(dim: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::BadShape { dim, found: entries.len() });
        }
        Ok(Self { dim, data: entries })
    }

    /// Builds a matrix from nested rows. Fails if the rows are ragged or not square.
    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::BadShape { dim, found: rows.iter().map(Vec::len).sum() });
            }
            data.extend_from_slice(row);
        }
        Self::new(dim, data)
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| Complex::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { Complex::one() } else { Complex::zero() })
    }

    /// Diagonal matrix with real diagonal entries.
    pub fn from_real_diag(diag: &[T]) -> Self {
        Self::from_fn(diag.len(), |i, j| if i == j { Complex::new(diag[i], T::zero()) } else { Complex::zero() })
    }

    /// Outer product |u⟩⟨v|.
    pub fn outer(u: &[Complex<T>], v: &[Complex<T>]) -> Self {
        assert_eq!(u.len(), v.len(), "outer product of vectors with different lengths");
        Self::from_fn(u.len(), |i, j| u[i] * v[j].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&z| f(z)).collect() }
    }

    pub fn scale(&self, s: T) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_complex(&self, s: Complex<T>) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).map(|i| self[(i, i)]).fold(Complex::zero(), |a, b| a + b)
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.is_zero())
    }

    /// ‖H − H†‖_F.
    pub fn hermitian_deviation(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Hermiticity test with the relative criterion
    /// `‖H − H†‖_F ≤ tol · max(1, ‖H‖_F)`.
    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermitian_deviation() <= tol * T::one().max(self.frobenius_norm())
    }

    /// ‖U†U − I‖_F.
    pub fn unitary_deviation(&self) -> T {
        (&(&self.adjoint() * self) - &Self::identity(self.dim)).frobenius_norm()
    }

    /// Frobenius distance to `other`; `None` when dimensions differ.
    pub fn distance(&self, other: &Self) -> Option<T> {
        (self.dim == other.dim).then(|| self.data.iter().zip(&other.data).map(|(a, b)| (*a - *b).norm_sqr()).sum::<T>().sqrt())
    }

    /// Entrywise comparison with an absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.dim == other.dim && self.data.iter().zip(&other.data).all(|(a, b)| (*a - *b).norm() <= tol)
    }

    /// Kronecker product `self ⊗ other`, first factor leftmost.
    pub fn kron(&self, other: &Self) -> Self {
        let (da, db) = (self.dim, other.dim);
        Self::from_fn(da * db, |r, c| self[(r / db, c / db)] * other[(r % db, c % db)])
    }

    /// Partial trace over the second tensor factor of dimension `db`.
    pub fn partial_trace_second(&self, db: usize) -> Result<Self> {
        if db == 0 || !self.dim.is_multiple_of(db) {
            return Err(Error::DimensionMismatch { expected: db, found: self.dim });
        }
        let da = self.dim / db;
        Ok(Self::from_fn(da, |i, j| (0..db).fold(Complex::zero(), |acc, k| acc + self[(i * db + k, j * db + k)])))
    }

    /// Applies `U† · self · U` (change into the basis given by the columns of `u`).
    pub fn conjugate_by(&self, u: &Self) -> Self {
        &(&u.adjoint() * self) * u
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

impl<T: Scalar> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix addition");
        ComplexMatrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl<T: Scalar> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix subtraction");
        ComplexMatrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl<T: Scalar> Neg for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn neg(self) -> ComplexMatrix<T> {
        self.map(|z| -z)
    }
}

impl<T: Scalar> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let d = self.dim;
        let mut out = ComplexMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl<T: fmt::Debug> fmt::Debug for ComplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}×{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  [")?;
            for j in 0..self.dim {
                let z = &self[(i, j)];
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "({:?}, {:?})", z.re, z.im)?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// `[A, B] = AB − BA`.
pub fn commutator<T: Scalar>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    a.check_same_dim(b)?;
    Ok(&(a * b) - &(b * a))
}

/// `Tr(AB) = Σ_kl A_kl B_lk`, without forming the product.
pub fn trace_product<T: Scalar>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<Complex<T>> {
    a.check_same_dim(b)?;
    let d = a.dim;
    let mut acc = Complex::zero();
    for k in 0..d {
        for l in 0..d {
            acc += a[(k, l)] * b[(l, k)];
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = ComplexMatrix<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn sx() -> M {
        M::new(2, vec![c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]).unwrap()
    }
    fn sy() -> M {
        M::new(2, vec![c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]).unwrap()
    }
    fn sz() -> M {
        M::from_real_diag(&[1.0, -1.0])
    }

    #[test]
    fn rejects_bad_shape() {
        assert_eq!(M::new(2, vec![c(1., 0.); 3]), Err(Error::BadShape { dim: 2, found: 3 }));
        assert!(M::new(0, vec![]).is_err());
    }

    #[test]
    fn commutator_of_pauli_matrices() {
        assert!(commutator(&sx(), &sx()).unwrap().approx_eq(&M::zeros(2), 0.0));
        let xy = commutator(&sx(), &sy()).unwrap();
        assert!(xy.approx_eq(&sz().scale_complex(c(0., 2.)), 1e-15));
    }

    #[test]
    fn commutator_with_diagonal() {
        let (a, b) = (0.3, -1.7);
        let x = M::new(2, vec![c(0.5, 0.1), c(2.0, -1.0), c(-0.25, 3.0), c(4.0, 0.0)]).unwrap();
        let com = commutator(&M::from_real_diag(&[a, b]), &x).unwrap();
        let expected = M::new(2, vec![c(0., 0.), x[(0, 1)] * (a - b), x[(1, 0)] * (b - a), c(0., 0.)]).unwrap();
        assert!(com.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn commutator_dimension_mismatch() {
        assert_eq!(commutator(&M::identity(2), &M::identity(3)), Err(Error::DimensionMismatch { expected: 2, found: 3 }));
        assert!(trace_product(&M::identity(2), &M::identity(4)).is_err());
    }

    #[test]
    fn trace_products() {
        assert_eq!(trace_product(&M::identity(2), &M::identity(2)).unwrap(), c(2., 0.));
        assert_eq!(trace_product(&sx(), &sy()).unwrap(), c(0., 0.));
        assert_eq!(trace_product(&sz(), &sz()).unwrap(), c(2., 0.));
    }

    #[test]
    fn kron_places_first_factor_leftmost() {
        // I ⊗ σx is block diagonal with σx blocks.
        let k = M::identity(2).kron(&sx());
        assert_eq!(k[(0, 1)], c(1., 0.));
        assert_eq!(k[(2, 3)], c(1., 0.));
        assert_eq!(k[(0, 2)], c(0., 0.));
        // σx ⊗ I couples |0b⟩ with |1b⟩.
        let k = sx().kron(&M::identity(2));
        assert_eq!(k[(0, 2)], c(1., 0.));
        assert_eq!(k[(1, 3)], c(1., 0.));
        assert_eq!(k[(0, 1)], c(0., 0.));
    }

    #[test]
    fn partial_trace_of_product_state() {
        let a = M::from_real_diag(&[0.25, 0.75]);
        let b = M::from_real_diag(&[0.5, 0.5]);
        let reduced = a.kron(&b).partial_trace_second(2).unwrap();
        assert!(reduced.approx_eq(&a, 1e-15));
        assert!(M::identity(3).partial_trace_second(2).is_err());
    }

    #[test]
    fn hermiticity_checks() {
        assert!(sy().is_hermitian(1e-10));
        let mut bad = sy();
        bad[(0, 1)] = c(0., 1.);
        assert!(!bad.is_hermitian(1e-10));
        assert!(sx().unitary_deviation() < 1e-15);
    }
}
