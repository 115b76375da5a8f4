//! Sum-uncertainty lower bounds for `n` observables.
//!
//! With `I(·)` the metric-adjusted skew information and pairs `i < j` in
//! lexicographic order:
//!
//! * `lb1 = [Σ I(A_i+A_j) − (Σ √I(A_i+A_j))²/(n−1)²] / (n−2)`, for `n > 2`;
//!   it can be negative and is reported raw and clamped.
//! * `lb2 = I(Σ A_i)/n + 2(Σ √I(A_i−A_j))² / (n²(n−1))`.
//! * `lb3 = [2(Σ √I(A_i+A_j))²/(n(n−1)) + Σ I(A_i−A_j)] / (2n−2)`.
//! * `lb4` is `lb3` with the roles of `+` and `−` exchanged.
//!
//! `lb3` and `lb4` both equal the sum when `n = 2` (parallelogram law), and
//! `lb4 ≥ lb2` always.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::metric::{MetricSpec, SkewKernel};
use crate::objects::{DensityMatrix, Observable};
use crate::scalar::Scalar;

/// Sum of skew informations and the four lower bounds for one configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct ObservableBoundReport<T> {
    pub metric_name: String,
    pub n: usize,
    pub sum: T,
    /// Raw value, absent when `n = 2`.
    pub lb1: Option<T>,
    /// `max(lb1, 0)`.
    pub lb1_clamped: Option<T>,
    pub lb2: T,
    pub lb3: T,
    pub lb4: T,
}

impl<T: Scalar> ObservableBoundReport<T> {
    /// `sum − bound` for `lb1` (raw), `lb2`, `lb3`, `lb4`.
    pub fn gaps(&self) -> [Option<T>; 4] {
        [self.lb1.map(|b| self.sum - b), Some(self.sum - self.lb2), Some(self.sum - self.lb3), Some(self.sum - self.lb4)]
    }

    /// Largest amount by which any bound exceeds the sum, or by which
    /// `lb2` exceeds `lb4`; zero or negative for a consistent report.
    pub fn worst_violation(&self) -> T {
        let mut worst = self.lb2 - self.lb4;
        for b in [self.lb1, Some(self.lb2), Some(self.lb3), Some(self.lb4)].into_iter().flatten() {
            worst = worst.max(b - self.sum);
        }
        worst
    }
}

/// Skew informations of the single observables, pairwise sums and
/// differences (lexicographic pairs) and of the total.
#[derive(Clone, Debug)]
pub(crate) struct PairTerms<T> {
    pub single: Vec<T>,
    pub plus: Vec<T>,
    pub minus: Vec<T>,
    pub total: T,
}

impl<T: Scalar> PairTerms<T> {
    /// All terms from operators already expressed in ρ's eigenbasis.
    pub(crate) fn from_transformed(kernel: &SkewKernel<T>, ops: &[ComplexMatrix<T>]) -> Self {
        let n = ops.len();
        let mut plus = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        let mut minus = Vec::with_capacity(plus.capacity());
        for i in 0..n {
            for j in (i + 1)..n {
                plus.push(kernel.evaluate_transformed(&(&ops[i] + &ops[j])));
                minus.push(kernel.evaluate_transformed(&(&ops[i] - &ops[j])));
            }
        }
        let total_op = ops[1..].iter().fold(ops[0].clone(), |acc, x| &acc + x);
        Self {
            single: ops.iter().map(|x| kernel.evaluate_transformed(x)).collect(),
            plus,
            minus,
            total: kernel.evaluate_transformed(&total_op),
        }
    }
}

fn sqrt_sum<T: Scalar>(values: &[T]) -> T {
    values.iter().map(|v| v.max(T::zero()).sqrt()).sum()
}

/// Bound expressions on precomputed skew informations, shared with the
/// channel bounds (which sum them over Kraus slots).
pub(crate) mod formulas {
    use super::*;

    pub(crate) fn lb1<T: Scalar>(n: usize, plus: &[T]) -> T {
        let nf = T::from_usize(n);
        let s = sqrt_sum(plus);
        let sum: T = plus.iter().copied().sum();
        (sum - s * s / ((nf - T::one()) * (nf - T::one()))) / (nf - T::lit(2.0))
    }

    pub(crate) fn lb2<T: Scalar>(n: usize, total: T, minus: &[T]) -> T {
        let nf = T::from_usize(n);
        let s = sqrt_sum(minus);
        total / nf + T::lit(2.0) * s * s / (nf * nf * (nf - T::one()))
    }

    /// `[2(Σ√sq)²/(n(n−1)) + Σ lin] / (2n−2)`; `lb3` passes `(plus, minus)`, `lb4` `(minus, plus)`.
    pub(crate) fn lb34<T: Scalar>(n: usize, squared: &[T], linear: &[T]) -> T {
        let nf = T::from_usize(n);
        let s = sqrt_sum(squared);
        let lin: T = linear.iter().copied().sum();
        (T::lit(2.0) * s * s / (nf * (nf - T::one())) + lin) / (T::lit(2.0) * nf - T::lit(2.0))
    }
}

fn transformed<T: Scalar>(kernel: &SkewKernel<T>, observables: &[Observable<T>]) -> Result<Vec<ComplexMatrix<T>>> {
    if observables.is_empty() {
        return Err(Error::EmptyList);
    }
    observables.iter().map(|a| kernel.to_eigenbasis(a.matrix())).collect()
}

fn terms<T: Scalar>(metric: &MetricSpec<T>, rho: &DensityMatrix<T>, observables: &[Observable<T>]) -> Result<PairTerms<T>> {
    let kernel = SkewKernel::new(metric, rho);
    let ops = transformed(&kernel, observables)?;
    Ok(PairTerms::from_transformed(&kernel, &ops))
}

fn require_two<T>(observables: &[Observable<T>]) -> Result<()> {
    if observables.len() < 2 {
        return Err(Error::RequiresTwoObservables(observables.len()));
    }
    Ok(())
}

/// `Σ_i I_ρ^c(A_i)`.
pub fn sum_skew<T: Scalar>(metric: &MetricSpec<T>, rho: &DensityMatrix<T>, observables: &[Observable<T>]) -> Result<T> {
    let kernel = SkewKernel::new(metric, rho);
    let ops = transformed(&kernel, observables)?;
    Ok(ops.iter().map(|x| kernel.evaluate_transformed(x)).sum())
}

/// Raw `lb1`; needs `n > 2`.
pub fn lb1<T: Scalar>(metric: &MetricSpec<T>, rho: &DensityMatrix<T>, observables: &[Observable<T>]) -> Result<T> {
    if observables.len() <= 2 {
        return Err(Error::RequiresThreeObservables(observables.len()));
    }
    let t = terms(metric, rho, observables)?;
    Ok(formulas::lb1(observables.len(), &t.plus))
}

pub fn lb2<T: Scalar>(metric: &MetricSpec<T>, rho: &DensityMatrix<T>, observables: &[Observable<T>]) -> Result<T> {
    require_two(observables)?;
    let t = terms(metric, rho, observables)?;
    Ok(formulas::lb2(observables.len(), t.total, &t.minus))
}

pub fn lb3<T: Scalar>(metric: &MetricSpec<T>, rho: &DensityMatrix<T>, observables: &[Observable<T>]) -> Result<T> {
    require_two(observables)?;
    let t = terms(metric, rho, observables)?;
    Ok(formulas::lb34(observables.len(), &t.plus, &t.minus))
}

pub fn lb4<T: Scalar>(metric: &MetricSpec<T>, rho: &DensityMatrix<T>, observables: &[Observable<T>]) -> Result<T> {
    require_two(observables)?;
    let t = terms(metric, rho, observables)?;
    Ok(formulas::lb34(observables.len(), &t.minus, &t.plus))
}

/// Computes the sum and every applicable bound in one pass.
pub fn observable_bounds<T: Scalar>(
    metric: &MetricSpec<T>,
    rho: &DensityMatrix<T>,
    observables: &[Observable<T>],
) -> Result<ObservableBoundReport<T>> {
    require_two(observables)?;
    let n = observables.len();
    let t = terms(metric, rho, observables)?;
    let lb1 = (n > 2).then(|| formulas::lb1(n, &t.plus));
    Ok(ObservableBoundReport {
        metric_name: metric.name().to_string(),
        n,
        sum: t.single.iter().copied().sum(),
        lb1,
        lb1_clamped: lb1.map(|v| v.max(T::zero())),
        lb2: formulas::lb2(n, t.total, &t.minus),
        lb3: formulas::lb34(n, &t.plus, &t.minus),
        lb4: formulas::lb34(n, &t.minus, &t.plus),
    })
}

/// The norm inequalities behind the bounds, for vectors `a_1 … a_n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormInequality<T> {
    /// `Σ ‖a_i‖²`
    pub lhs: T,
    /// `[2(Σ‖a_i+a_j‖)²/(n(n−1)) + Σ‖a_i−a_j‖²] / (2n−2)`
    pub plus_root_bound: T,
    /// `[2(Σ‖a_i−a_j‖)²/(n(n−1)) + Σ‖a_i+a_j‖²] / (2n−2)`
    pub minus_root_bound: T,
    /// `‖Σ a_i‖²/n + 2(Σ‖a_i−a_j‖)²/(n²(n−1))`, never above `minus_root_bound`.
    pub total_norm_bound: T,
}

impl<T: Scalar> NormInequality<T> {
    pub fn holds(&self, tol: T) -> bool {
        self.lhs >= self.plus_root_bound - tol
            && self.lhs >= self.minus_root_bound - tol
            && self.minus_root_bound >= self.total_norm_bound - tol
    }
}

/// Evaluates both sides of the vector norm inequalities.
pub fn norm_inequality_check<T: Scalar>(vectors: &[Vec<Complex<T>>]) -> Result<NormInequality<T>> {
    let n = vectors.len();
    if n < 2 {
        return Err(Error::RequiresTwoObservables(n));
    }
    let len = vectors[0].len();
    if let Some(v) = vectors.iter().find(|v| v.len() != len) {
        return Err(Error::DimensionMismatch { expected: len, found: v.len() });
    }
    let norm_sq = |f: &dyn Fn(usize) -> Complex<T>| (0..len).map(|k| f(k).norm_sqr()).sum::<T>();

    let lhs = vectors.iter().map(|v| norm_sq(&|k| v[k])).sum();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            plus.push(norm_sq(&|k| vectors[i][k] + vectors[j][k]));
            minus.push(norm_sq(&|k| vectors[i][k] - vectors[j][k]));
        }
    }
    let total = norm_sq(&|k| vectors.iter().map(|v| v[k]).fold(Complex::new(T::zero(), T::zero()), |a, b| a + b));
    Ok(NormInequality {
        lhs,
        plus_root_bound: formulas::lb34(n, &plus, &minus),
        minus_root_bound: formulas::lb34(n, &minus, &plus),
        total_norm_bound: formulas::lb2(n, total, &minus),
    })
}
