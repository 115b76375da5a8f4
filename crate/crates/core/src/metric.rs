//! Regular symmetric monotone metrics and metric-adjusted skew information.
//!
//! A metric is fixed by an operator-monotone generator `f` with `f(1) = 1`
//! and `t·f(1/t) = f(t)`. Its Morozova–Chentsov function is
//! `c(x, y) = 1 / (y·f(x/y))` and its metric constant is `m(c) = f(0) > 0`.
//!
//! The metric itself, `K_ρ(A, B) = Tr[A† c(L_ρ, R_ρ) B]`, is evaluated in
//! the eigenbasis of ρ as `Σ_kl c(λ_k, λ_l)·conj(Ã_kl)·B̃_kl`, which needs a
//! positive definite state.
//!
//! Skew information `I_ρ^c(X) = (m(c)/2)·K_ρ(i[ρ, X], i[ρ, X])` collapses to
//! `(m(c)/2)·Σ_kl ĉ(λ_k, λ_l)·|X̃_kl|²` with `ĉ(x, y) = (x − y)²·c(x, y)`.
//! Every built-in metric supplies `ĉ` in closed form, so coincident
//! eigenvalues never produce `0·∞`. On the boundary of the state space `ĉ`
//! extends continuously: from `t·f(1/t) = f(t)`,
//! `y·f(x/y) = x·f(y/x) → x·m(c)` as `y → 0`, hence `ĉ(x, 0) = x / m(c)`.
//! This is what lets rank-deficient states (pure qubits, Gisin states) be
//! used directly.
//!
//! Normalization note: evaluating the trace formula literally at the
//! maximally mixed state gives `K_{I/n}(I, I) = n²`, since
//! `c(1/n, 1/n) = n`. No rescaling is applied.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{commutator, power_clamped, trace_product, ComplexMatrix};
use crate::objects::DensityMatrix;
use crate::scalar::{Scalar, Tolerances};

/// Exponent of the Wigner–Yanase–Dyson family, strictly inside `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct WydParameter<T>(T);

impl<T: Scalar> WydParameter<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if alpha > T::zero() && alpha < T::one() {
            Ok(Self(alpha))
        } else {
            Err(Error::AlphaOutOfRange(alpha.to_f64().unwrap_or(f64::NAN)))
        }
    }

    pub fn value(self) -> T {
        self.0
    }

    /// `1 − α`, which yields the same skew information.
    pub fn complement(self) -> Self {
        Self(T::one() - self.0)
    }
}

/// Operator-monotone generator of a user-registered metric.
pub type Generator<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

#[derive(Clone)]
enum Kind<T> {
    WignerYanase,
    Wyd(T),
    Sld,
    Custom(Generator<T>),
}

/// A named regular symmetric monotone metric.
#[derive(Clone)]
pub struct MetricSpec<T> {
    name: String,
    kind: Kind<T>,
    metric_constant: T,
}

impl<T: fmt::Debug> fmt::Debug for MetricSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MetricSpec").field("name", &self.name).field("metric_constant", &self.metric_constant).finish()
    }
}

/// Wigner–Yanase: `c = 4/(√x + √y)²`, `m = 1/4`.
pub fn wy_metric<T: Scalar>() -> MetricSpec<T> {
    MetricSpec { name: "wy".into(), kind: Kind::WignerYanase, metric_constant: T::lit(0.25) }
}

/// Wigner–Yanase–Dyson with exponent α: `m = α(1 − α)`.
pub fn wyd_metric<T: Scalar>(alpha: WydParameter<T>) -> MetricSpec<T> {
    let a = alpha.value();
    MetricSpec { name: format!("wyd:{a}"), kind: Kind::Wyd(a), metric_constant: a * (T::one() - a) }
}

/// Symmetric logarithmic derivative (Bures): `c = 2/(x + y)`, `m = 1/2`.
pub fn sld_metric<T: Scalar>() -> MetricSpec<T> {
    MetricSpec { name: "sld".into(), kind: Kind::Sld, metric_constant: T::lit(0.5) }
}

/// `expm1(a·u) / expm1(u)`, the divided difference `(x^a − y^a)/(x − y)`
/// scaled by `y^{1−a}` where `u = ln(x/y) ≤ 0`.
fn power_ratio<T: Scalar>(a: T, u: T) -> T {
    if u == T::zero() {
        a
    } else {
        (a * u).exp_m1() / u.exp_m1()
    }
}

/// `|f(t) − m|` is non-increasing along `t = 10⁻³, 10⁻⁶, 10⁻⁹, 10⁻¹²` and
/// ends below `10⁻²·max(1, m)`.
///
/// A fixed `|f(10⁻⁹) − m| ≤ 10⁻⁶` test is too strict: generators such as
/// `((1 + √t)/2)²` approach `f(0)` like `√t`.
pub(crate) fn approaches_at_zero<T: Scalar>(f: &dyn Fn(T) -> T, m: T) -> bool {
    let gaps: Vec<T> = [1e-3, 1e-6, 1e-9, 1e-12].iter().map(|&t| (f(T::lit(t)) - m).abs()).collect();
    let slack = T::epsilon() * T::lit(16.0) * T::one().max(m);
    gaps.iter().all(|g| g.is_finite()) && gaps.windows(2).all(|w| w[1] <= w[0] + slack) && gaps[3] <= T::lit(1e-2) * T::one().max(m)
}

impl<T: Scalar> MetricSpec<T> {
    /// Registers a metric from its generator `f`.
    ///
    /// Checks `f(1) = 1`, the symmetry `t·f(1/t) = f(t)` on a sample of
    /// points, regularity `m(c) = f(0) > 0`, and that `|f(t) − f(0)|`
    /// shrinks along `t = 10⁻³, 10⁻⁶, 10⁻⁹, 10⁻¹²`. Operator monotonicity is
    /// not verified.
    pub fn custom(name: impl Into<String>, f: impl Fn(T) -> T + Send + Sync + 'static) -> Result<Self> {
        let name = name.into();
        let tol = Tolerances::<T>::default();
        let f: Generator<T> = Arc::new(f);

        let at_one = f(T::one());
        // written so that NaN fails every check
        let within = |x: T, tol: T| x.abs() <= tol;
        if !within(at_one - T::one(), tol.eig) {
            return Err(Error::InvalidMetric(format!("{name}: f(1) = {at_one}, expected 1")));
        }
        for t in [1e-3, 0.1, 0.37, 2.0, 5.5, 40.0] {
            let t = T::lit(t);
            let lhs = t * f(T::one() / t);
            let rhs = f(t);
            if !within(lhs - rhs, tol.herm * T::one().max(rhs.abs())) {
                return Err(Error::InvalidMetric(format!("{name}: t·f(1/t) ≠ f(t) at t = {t}")));
            }
        }
        let m = f(T::zero());
        if !(m.is_finite() && m > T::zero()) {
            return Err(Error::InvalidMetric(format!("{name}: metric constant f(0) = {m} is not positive")));
        }
        if !approaches_at_zero(&*f, m) {
            return Err(Error::InvalidMetric(format!("{name}: f(t) does not tend to f(0) = {m} as t → 0")));
        }
        Ok(Self { name, kind: Kind::Custom(f), metric_constant: m })
    }

    /// Parses `"wy"`, `"sld"` or `"wyd:<alpha>"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "wy" => Ok(wy_metric()),
            "sld" => Ok(sld_metric()),
            _ => {
                let alpha = s
                    .strip_prefix("wyd:")
                    .ok_or_else(|| Error::UnknownMetric(s.to_string()))?
                    .trim()
                    .parse::<f64>()
                    .map_err(|_| Error::UnknownMetric(s.to_string()))?;
                Ok(wyd_metric(WydParameter::new(T::lit(alpha))?))
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `m(c) = f(0)`.
    pub fn metric_constant(&self) -> T {
        self.metric_constant
    }

    /// The WYD exponent, for WYD metrics.
    pub fn wyd_alpha(&self) -> Option<T> {
        match self.kind {
            Kind::Wyd(a) => Some(a),
            _ => None,
        }
    }

    /// Generator `f(t)` for `t ≥ 0`.
    pub fn f(&self, t: T) -> T {
        match &self.kind {
            Kind::WignerYanase => {
                let h = (T::one() + t.sqrt()) * T::lit(0.5);
                h * h
            }
            Kind::Sld => (T::one() + t) * T::lit(0.5),
            Kind::Wyd(_) => T::one() / self.c(t, T::one()),
            Kind::Custom(f) => f(t),
        }
    }

    /// Morozova–Chentsov function `c(x, y) = 1/(y·f(x/y))`, `x, y > 0`.
    pub fn c(&self, x: T, y: T) -> T {
        match &self.kind {
            Kind::WignerYanase => {
                let s = x.sqrt() + y.sqrt();
                T::lit(4.0) / (s * s)
            }
            Kind::Sld => T::lit(2.0) / (x + y),
            Kind::Wyd(a) => {
                let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
                let u = ((lo - hi) / hi).ln_1p();
                let a = *a;
                let b = T::one() - a;
                power_ratio(a, u) * power_ratio(b, u) / (a * b * hi)
            }
            Kind::Custom(f) => T::one() / (y * f(x / y)),
        }
    }

    /// `ĉ(x, y) = (x − y)²·c(x, y)` for `x, y ≥ 0`, with `ĉ(x, 0) = x/m(c)`.
    pub fn chat(&self, x: T, y: T) -> T {
        let zero = T::zero();
        match &self.kind {
            Kind::WignerYanase => {
                let d = x.sqrt() - y.sqrt();
                T::lit(4.0) * d * d
            }
            Kind::Sld => {
                let s = x + y;
                if s == zero {
                    zero
                } else {
                    let d = x - y;
                    T::lit(2.0) * d * d / s
                }
            }
            Kind::Wyd(a) => {
                let a = *a;
                let b = T::one() - a;
                (power_clamped(x, a) - power_clamped(y, a)) * (power_clamped(x, b) - power_clamped(y, b)) / (a * b)
            }
            Kind::Custom(f) => {
                if x == y {
                    zero
                } else if y == zero {
                    x / self.metric_constant
                } else if x == zero {
                    y / self.metric_constant
                } else {
                    let d = x - y;
                    d * d / (y * f(x / y))
                }
            }
        }
    }
}

/// Open set of named metrics. Built-in names are always resolvable;
/// additional metrics can be registered before the registry is shared.
#[derive(Clone, Debug, Default)]
pub struct MetricRegistry<T> {
    custom: Vec<MetricSpec<T>>,
}

impl<T: Scalar> MetricRegistry<T> {
    pub fn new() -> Self {
        Self { custom: Vec::new() }
    }

    pub fn register(&mut self, spec: MetricSpec<T>) -> Result<()> {
        let clashes_builtin = MetricSpec::<T>::parse(spec.name()).is_ok();
        if clashes_builtin || self.custom.iter().any(|m| m.name == spec.name) {
            return Err(Error::InvalidMetric(format!("name {:?} already registered", spec.name)));
        }
        self.custom.push(spec);
        Ok(())
    }

    pub fn resolve(&self, name: &str) -> Result<MetricSpec<T>> {
        match self.custom.iter().find(|m| m.name == name.trim()) {
            Some(m) => Ok(m.clone()),
            None => MetricSpec::parse(name),
        }
    }
}

/// Precomputed kernel `(m(c)/2)·ĉ(λ_k, λ_l)` and eigenbasis of one state,
/// for evaluating skew information of many operators against it.
#[derive(Clone, Debug)]
pub struct SkewKernel<T> {
    basis: ComplexMatrix<T>,
    weights: Vec<T>,
}

impl<T: Scalar> SkewKernel<T> {
    pub fn new(metric: &MetricSpec<T>, rho: &DensityMatrix<T>) -> Self {
        let lambda = rho.eigenvalues();
        let d = lambda.len();
        let half_m = metric.metric_constant() * T::lit(0.5);
        let mut weights = vec![T::zero(); d * d];
        for k in 0..d {
            for l in 0..d {
                if k != l {
                    weights[k * d + l] = half_m * metric.chat(lambda[k], lambda[l]);
                }
            }
        }
        Self { basis: rho.spectral().eigenvectors.clone(), weights }
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// `U† X U`.
    pub fn to_eigenbasis(&self, x: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.dim() });
        }
        Ok(x.conjugate_by(&self.basis))
    }

    /// Skew information of an operator already expressed in the eigenbasis.
    pub fn evaluate_transformed(&self, xt: &ComplexMatrix<T>) -> T {
        let v: T = xt.entries().iter().zip(&self.weights).map(|(z, &w)| w * z.norm_sqr()).sum();
        v.max(T::zero())
    }

    pub fn evaluate(&self, x: &ComplexMatrix<T>) -> Result<T> {
        Ok(self.evaluate_transformed(&self.to_eigenbasis(x)?))
    }
}

/// `K_ρ(A, B) = Σ_kl c(λ_k, λ_l)·conj(Ã_kl)·B̃_kl`; ρ must be positive definite.
pub fn metric_value<T: Scalar>(
    metric: &MetricSpec<T>,
    rho: &DensityMatrix<T>,
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
) -> Result<Complex<T>> {
    let d = rho.dim();
    for m in [a, b] {
        if m.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: m.dim() });
        }
    }
    let min = rho.min_eigenvalue();
    if min <= rho.rank_tolerance() {
        return Err(Error::SingularState { min_eigenvalue: min.to_f64().unwrap_or(f64::NAN) });
    }
    let spec = rho.spectral();
    let (at, bt) = (spec.to_eigenbasis(a), spec.to_eigenbasis(b));
    let lambda = &spec.eigenvalues;
    let mut acc = Complex::zero();
    for k in 0..d {
        for l in 0..d {
            acc += at[(k, l)].conj() * bt[(k, l)] * metric.c(lambda[k], lambda[l]);
        }
    }
    Ok(acc)
}

/// Metric-adjusted skew information `(m(c)/2)·Σ_kl ĉ(λ_k, λ_l)·|X̃_kl|²`.
///
/// `X` need not be Hermitian (Kraus operators are accepted). Boundary
/// states are allowed. Tiny negative sums from roundoff are clamped to 0.
pub fn skew_information<T: Scalar>(metric: &MetricSpec<T>, rho: &DensityMatrix<T>, x: &ComplexMatrix<T>) -> Result<T> {
    SkewKernel::new(metric, rho).evaluate(x)
}

/// Wigner–Yanase–Dyson skew information by the trace formula
/// `−½·Tr([ρ^α, X†][ρ^{1−α}, X])`, independent of the `ĉ` kernel.
pub fn wyd_skew_information_direct<T: Scalar>(alpha: WydParameter<T>, rho: &DensityMatrix<T>, x: &ComplexMatrix<T>) -> Result<T> {
    if x.dim() != rho.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), found: x.dim() });
    }
    let a = alpha.value();
    let left = commutator(&rho.power(a)?, &x.adjoint())?;
    let right = commutator(&rho.power(T::one() - a)?, x)?;
    Ok(-trace_product(&left, &right)?.re * T::lit(0.5))
}
