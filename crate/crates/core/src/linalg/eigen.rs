//! Hermitian eigendecomposition by cyclic complex Jacobi rotations, and
//! spectral matrix functions built on it.

use num_complex::Complex;
use num_traits::Zero;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, Tolerances};

/// `H = U diag(λ) U†` with eigenvalues ascending and orthonormal eigenvector columns.
///
/// The phase of each eigenvector is fixed so that its largest-magnitude
/// component (first one on ties) is real and positive.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralDecomposition<T> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: ComplexMatrix<T>,
}

impl<T: Scalar> SpectralDecomposition<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `U diag(f(λ)) U†`.
    pub fn map_eigenvalues(&self, f: impl Fn(T) -> T) -> ComplexMatrix<T> {
        let u = &self.eigenvectors;
        let d = self.dim();
        let fl: Vec<T> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        ComplexMatrix::from_fn(d, |i, j| (0..d).fold(Complex::zero(), |acc, k| acc + u[(i, k)] * u[(j, k)].conj() * fl[k]))
    }

    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        self.map_eigenvalues(|l| l)
    }

    /// Expresses `x` in the eigenbasis: `U† X U`.
    pub fn to_eigenbasis(&self, x: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        x.conjugate_by(&self.eigenvectors)
    }

    pub fn min_eigenvalue(&self) -> T {
        self.eigenvalues[0]
    }
}

/// Diagonalizes a Hermitian matrix with default tolerances.
pub fn hermitian_eigendecomposition<T: Scalar>(h: &ComplexMatrix<T>) -> Result<SpectralDecomposition<T>> {
    hermitian_eigendecomposition_with(h, &Tolerances::default())
}

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Sweeps until the off-diagonal Frobenius norm falls below
/// `tol.eig · ‖H‖_F`, failing with [`Error::NoConvergence`] after
/// `tol.max_sweeps` sweeps.
pub fn hermitian_eigendecomposition_with<T: Scalar>(h: &ComplexMatrix<T>, tol: &Tolerances<T>) -> Result<SpectralDecomposition<T>> {
    let norm = h.frobenius_norm();
    let deviation = h.hermitian_deviation();
    if deviation > tol.herm * T::one().max(norm) {
        return Err(Error::NotHermitian { deviation: deviation.to_f64().unwrap_or(f64::NAN) });
    }

    let d = h.dim();
    // Work on the Hermitian part so the rotations see an exactly symmetric input.
    let half = T::lit(0.5);
    let mut a = ComplexMatrix::from_fn(d, |i, j| (h[(i, j)] + h[(j, i)].conj()) * half);
    let mut v = ComplexMatrix::identity(d);
    let threshold = tol.eig * norm;

    let mut converged = false;
    let mut off = off_diagonal_norm(&a);
    for _ in 0..tol.max_sweeps {
        if off <= threshold {
            converged = true;
            break;
        }
        for p in 0..d {
            for q in (p + 1)..d {
                rotate(&mut a, &mut v, p, q);
            }
        }
        off = off_diagonal_norm(&a);
    }
    if !converged && off > threshold {
        return Err(Error::NoConvergence { sweeps: tol.max_sweeps, off_norm: off.to_f64().unwrap_or(f64::NAN) });
    }

    let mut order: Vec<usize> = (0..d).collect();
    let diag: Vec<T> = (0..d).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap_or(std::cmp::Ordering::Equal));

    let eigenvalues = order.iter().map(|&k| diag[k]).collect();
    let mut eigenvectors = ComplexMatrix::from_fn(d, |i, j| v[(i, order[j])]);
    fix_phases(&mut eigenvectors);
    Ok(SpectralDecomposition { eigenvalues, eigenvectors })
}

fn off_diagonal_norm<T: Scalar>(a: &ComplexMatrix<T>) -> T {
    let d = a.dim();
    let mut acc = T::zero();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// One complex Givens rotation annihilating `a[p][q]`; accumulates into `v`.
fn rotate<T: Scalar>(a: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == T::zero() {
        return;
    }
    let phase = apq / r;
    let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
    let theta = (aqq - app) / (r + r);
    let sign = if theta >= T::zero() { T::one() } else { -T::one() };
    let t = sign / (theta.abs() + (theta * theta + T::one()).sqrt());
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;

    // G = [[c, s·e^{iφ}], [−s·e^{−iφ}, c]] on the (p, q) plane.
    let g_pp = Complex::new(c, T::zero());
    let g_pq = phase * s;
    let g_qp = -(phase.conj() * s);
    let g_qq = g_pp;

    let d = a.dim();
    for k in 0..d {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
    }
    for k in 0..d {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = Complex::zero();
    a[(q, p)] = Complex::zero();
    a[(p, p)].im = T::zero();
    a[(q, q)].im = T::zero();

    for k in 0..d {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}

fn fix_phases<T: Scalar>(u: &mut ComplexMatrix<T>) {
    let d = u.dim();
    let tie = T::lit(1e-10);
    for j in 0..d {
        let max = (0..d).map(|i| u[(i, j)].norm()).fold(T::zero(), T::max);
        if max == T::zero() {
            continue;
        }
        let lead = (0..d).find(|&i| u[(i, j)].norm() >= max - tie).unwrap_or(0);
        let z = u[(lead, j)];
        let rot = z.conj() / z.norm();
        for i in 0..d {
            u[(i, j)] *= rot;
        }
        u[(lead, j)] = Complex::new(u[(lead, j)].norm(), T::zero());
    }
}

/// `M^s` for a positive-semidefinite Hermitian `M` and `s ∈ (0, 1]`, with default tolerances.
pub fn matrix_power<T: Scalar>(m: &ComplexMatrix<T>, s: T) -> Result<ComplexMatrix<T>> {
    matrix_power_with(m, s, &Tolerances::default())
}

/// `M^s = U diag(λ^s) U†` with `0^s = 0`.
///
/// Eigenvalues in `[−tol.eig, 0)` are clamped to zero; anything more
/// negative is rejected.
pub fn matrix_power_with<T: Scalar>(m: &ComplexMatrix<T>, s: T, tol: &Tolerances<T>) -> Result<ComplexMatrix<T>> {
    if !(s > T::zero() && s <= T::one()) {
        return Err(Error::InvalidExponent(s.to_f64().unwrap_or(f64::NAN)));
    }
    let spec = hermitian_eigendecomposition_with(m, tol)?;
    let min = spec.min_eigenvalue();
    if min < -tol.eig {
        return Err(Error::NegativeEigenvalue { value: min.to_f64().unwrap_or(f64::NAN) });
    }
    Ok(spec.map_eigenvalues(|l| power_clamped(l, s)))
}

#[inline]
pub(crate) fn power_clamped<T: Scalar>(l: T, s: T) -> T {
    if l <= T::zero() {
        T::zero()
    } else {
        l.powf(s)
    }
}
