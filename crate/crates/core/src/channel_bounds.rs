//! Channel skew information and permutation-maximized lower bounds for
//! `N` channels sharing a Kraus count `n`.
//!
//! An assignment `π = (π_1, …, π_N)` lines up Kraus operator `K^t_{π_t(i)}`
//! of every channel in slot `i`. For one assignment each bound is the sum
//! over slots of the corresponding observable bound applied to the slot's
//! operators:
//!
//! * `clb1`: `[Σ_i Σ_{t<s} I(K^t+K^s) − Σ_i (Σ_{t<s} √I(K^t+K^s))²/(N−1)²] / (N−2)`, `N > 2`;
//! * `clb2`: `Σ_i I(Σ_t K^t)/N + 2 Σ_i (Σ_{t<s} √I(K^t−K^s))² / (N²(N−1))`;
//! * `clb3`: `[2 Σ_i (Σ_{t<s} √I(K^t+K^s))²/(N(N−1)) + Σ_i Σ_{t<s} I(K^t−K^s)] / (2N−2)`;
//! * `clb4`: `clb3` with `+` and `−` exchanged.
//!
//! Each bound is maximized over assignments. Relabeling the slots by a common
//! permutation leaves every value unchanged, so the default search fixes
//! `π_1` to the identity and visits `(n!)^(N−1)` assignments.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::metric::{MetricSpec, SkewKernel};
use crate::objects::{DensityMatrix, QuantumChannel};
use crate::observable_bounds::formulas;
use crate::scalar::Scalar;

/// Largest number of assignments a search may visit.
pub const DEFAULT_SEARCH_BUDGET: u128 = 1_000_000;

/// One permutation of the Kraus indices per channel, zero-based:
/// slot `i` of channel `t` holds Kraus operator `perms[t][i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermutationAssignment {
    perms: Vec<Vec<usize>>,
}

impl PermutationAssignment {
    /// Checks that every entry is a bijection on `0..n` for a common `n`.
    pub fn new(perms: Vec<Vec<usize>>) -> Result<Self> {
        let n = perms.first().ok_or(Error::EmptyList)?.len();
        for p in &perms {
            if p.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.len() });
            }
            let mut seen = vec![false; n];
            for &k in p {
                if k >= n || std::mem::replace(&mut seen[k], true) {
                    return Err(Error::ParameterOutOfRange { name: "permutation entry", value: k as f64 });
                }
            }
        }
        Ok(Self { perms })
    }

    pub fn identity(channels: usize, kraus_count: usize) -> Self {
        Self { perms: vec![(0..kraus_count).collect(); channels] }
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn channel_count(&self) -> usize {
        self.perms.len()
    }

    pub fn kraus_count(&self) -> usize {
        self.perms[0].len()
    }

    /// The equivalent assignment with the first permutation equal to the
    /// identity (`π_t ∘ π_1⁻¹`).
    pub fn normalized(&self) -> Self {
        let first = &self.perms[0];
        let mut inverse = vec![0; first.len()];
        for (i, &k) in first.iter().enumerate() {
            inverse[k] = i;
        }
        Self { perms: self.perms.iter().map(|p| inverse.iter().map(|&j| p[j]).collect()).collect() }
    }

    /// Label `A1`–`A4` for three channels with two Kraus operators each:
    /// `A1 = {(1),(1),(1)}`, `A2 = {(1),(12),(12)}`, `A3 = {(1),(1),(12)}`,
    /// `A4 = {(1),(12),(1)}`, up to a common relabeling of the slots.
    pub fn case_label(&self) -> Option<&'static str> {
        if self.channel_count() != 3 || self.kraus_count() != 2 {
            return None;
        }
        let p = self.normalized();
        let swapped = |t: usize| p.perms[t][0] == 1;
        Some(match (swapped(1), swapped(2)) {
            (false, false) => "A1",
            (true, true) => "A2",
            (false, true) => "A3",
            (true, false) => "A4",
        })
    }
}

/// Cycle notation, one-based, e.g. `(1)` or `(12)(34)`.
fn cycles(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let sep = if p.len() > 9 { "," } else { "" };
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            cycle.push((k + 1).to_string());
            k = p[k];
        }
        out.push_str(&format!("({})", cycle.join(sep)));
    }
    if out.is_empty() {
        out.push_str("(1)");
    }
    out
}

impl fmt::Display for PermutationAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.perms.iter().map(|p| cycles(p)).join(","))
    }
}

/// Which assignments a maximization visits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Search {
    /// `π_1` fixed to the identity.
    #[default]
    Reduced,
    /// Every `π_1`, for cross-checking the reduction.
    Exhaustive,
}

fn search_size(channels: usize, kraus_count: usize, free: usize) -> u128 {
    let fact = (1..=kraus_count as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
    fact.and_then(|f| (0..free).try_fold(1u128, |acc, _| acc.checked_mul(f))).unwrap_or(u128::MAX).max(u128::from(channels == 0))
}

fn assignments(channels: usize, kraus_count: usize, search: Search, budget: u128) -> Result<Vec<PermutationAssignment>> {
    let free = match search {
        Search::Reduced => channels.saturating_sub(1),
        Search::Exhaustive => channels,
    };
    let size = search_size(channels, kraus_count, free);
    if size > budget {
        return Err(Error::SearchSpaceTooLarge { size, budget });
    }
    let perms: Vec<Vec<usize>> = (0..kraus_count).permutations(kraus_count).collect();
    let fixed = channels - free;
    Ok((0..free)
        .map(|_| perms.iter().cloned())
        .multi_cartesian_product()
        .map(|tail| {
            let mut all = vec![(0..kraus_count).collect(); fixed];
            all.extend(tail);
            PermutationAssignment { perms: all }
        })
        .collect())
}

/// Assignments with `π_1 = id`, remaining permutations in lexicographic
/// order (last channel varying fastest).
pub fn enumerate_assignments(channels: usize, kraus_count: usize) -> Result<Vec<PermutationAssignment>> {
    enumerate_assignments_with(channels, kraus_count, Search::Reduced, DEFAULT_SEARCH_BUDGET)
}

pub fn enumerate_assignments_with(channels: usize, kraus_count: usize, search: Search, budget: u128) -> Result<Vec<PermutationAssignment>> {
    if channels == 0 || kraus_count == 0 {
        return Err(Error::EmptyList);
    }
    if channels == 1 && search == Search::Reduced {
        return Ok(vec![PermutationAssignment::identity(1, kraus_count)]);
    }
    assignments(channels, kraus_count, search, budget)
}

/// `Σ_i I_ρ^c(K_i)`.
pub fn channel_skew_information<T: Scalar>(metric: &MetricSpec<T>, rho: &DensityMatrix<T>, channel: &QuantumChannel<T>) -> Result<T> {
    let kernel = SkewKernel::new(metric, rho);
    channel.kraus().iter().map(|k| kernel.evaluate(k)).sum()
}

/// The four bound expressions at a single assignment (`clb1` only for `N > 2`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AssignmentBounds<T> {
    pub clb1: Option<T>,
    pub clb2: T,
    pub clb3: T,
    pub clb4: T,
}

/// A maximized bound and the first assignment attaining it.
#[derive(Clone, Debug, PartialEq)]
pub struct Maximized<T> {
    pub value: T,
    pub assignment: PermutationAssignment,
}

/// Kraus operators in ρ's eigenbasis plus the pairwise `I(K^t_a ± K^s_b)` tables.
struct Prepared<T> {
    kernel: SkewKernel<T>,
    ops: Vec<Vec<ComplexMatrix<T>>>,
    n: usize,
    pairs: Vec<(usize, usize)>,
    plus: Vec<Vec<T>>,
    minus: Vec<Vec<T>>,
}

impl<T: Scalar> Prepared<T> {
    fn new(metric: &MetricSpec<T>, rho: &DensityMatrix<T>, channels: &[QuantumChannel<T>]) -> Result<Self> {
        let first = channels.first().ok_or(Error::EmptyList)?;
        let n = first.kraus_count();
        if let Some(c) = channels.iter().find(|c| c.kraus_count() != n) {
            return Err(Error::UnequalKrausCounts(n, c.kraus_count()));
        }
        let kernel = SkewKernel::new(metric, rho);
        let ops = channels
            .iter()
            .map(|c| c.kraus().iter().map(|k| kernel.to_eigenbasis(k)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let pairs: Vec<_> = (0..channels.len()).tuple_combinations().collect();
        let table = |sign: bool| -> Vec<Vec<T>> {
            pairs
                .iter()
                .map(|&(t, s)| {
                    (0..n * n)
                        .map(|ab| {
                            let (a, b) = (&ops[t][ab / n], &ops[s][ab % n]);
                            kernel.evaluate_transformed(&if sign { a + b } else { a - b })
                        })
                        .collect()
                })
                .collect()
        };
        let (plus, minus) = (table(true), table(false));
        Ok(Self { kernel, ops, n, pairs, plus, minus })
    }

    #[allow(clippy::needless_range_loop)]
    fn evaluate(&self, assignment: &PermutationAssignment) -> AssignmentBounds<T> {
        let big_n = self.ops.len();
        let mut out = AssignmentBounds { clb1: (big_n > 2).then(T::zero), clb2: T::zero(), clb3: T::zero(), clb4: T::zero() };
        let p = &assignment.perms;
        let mut plus = Vec::with_capacity(self.pairs.len());
        let mut minus = Vec::with_capacity(self.pairs.len());
        for i in 0..self.n {
            plus.clear();
            minus.clear();
            for (k, &(t, s)) in self.pairs.iter().enumerate() {
                let ab = p[t][i] * self.n + p[s][i];
                plus.push(self.plus[k][ab]);
                minus.push(self.minus[k][ab]);
            }
            let total_op = (1..big_n).fold(self.ops[0][p[0][i]].clone(), |acc, t| &acc + &self.ops[t][p[t][i]]);
            let total = self.kernel.evaluate_transformed(&total_op);
            if let Some(v) = out.clb1.as_mut() {
                *v += formulas::lb1(big_n, &plus);
            }
            out.clb2 += formulas::lb2(big_n, total, &minus);
            out.clb3 += formulas::lb34(big_n, &plus, &minus);
            out.clb4 += formulas::lb34(big_n, &minus, &plus);
        }
        out
    }
}

fn check_arity<T>(channels: &[QuantumChannel<T>]) -> Result<()> {
    if channels.len() < 2 {
        return Err(Error::RequiresTwoChannels(channels.len()));
    }
    Ok(())
}

fn check_assignment<T: Scalar>(channels: &[QuantumChannel<T>], assignment: &PermutationAssignment) -> Result<()> {
    if assignment.channel_count() != channels.len() {
        return Err(Error::DimensionMismatch { expected: channels.len(), found: assignment.channel_count() });
    }
    if let Some(c) = channels.iter().find(|c| c.kraus_count() != assignment.kraus_count()) {
        return Err(Error::UnequalKrausCounts(assignment.kraus_count(), c.kraus_count()));
    }
    Ok(())
}

/// All four bound expressions at one assignment.
pub fn evaluate_assignment<T: Scalar>(
    metric: &MetricSpec<T>,
    rho: &DensityMatrix<T>,
    channels: &[QuantumChannel<T>],
    assignment: &PermutationAssignment,
) -> Result<AssignmentBounds<T>> {
    check_arity(channels)?;
    check_assignment(channels, assignment)?;
    Ok(Prepared::new(metric, rho, channels)?.evaluate(assignment))
}

/// Sum of channel skew informations with the four maximized bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct ChannelBoundReport<T> {
    pub metric_name: String,
    pub channel_count: usize,
    /// Common Kraus count the search ran over (after any padding).
    pub kraus_count: usize,
    pub sum: T,
    pub clb1: Option<Maximized<T>>,
    pub clb2: Maximized<T>,
    pub clb3: Maximized<T>,
    pub clb4: Maximized<T>,
}

impl<T: Scalar> ChannelBoundReport<T> {
    /// Largest amount by which a bound exceeds the sum, or `clb2` exceeds `clb4`.
    pub fn worst_violation(&self) -> T {
        let mut worst = self.clb2.value - self.clb4.value;
        for b in [self.clb1.as_ref(), Some(&self.clb2), Some(&self.clb3), Some(&self.clb4)].into_iter().flatten() {
            worst = worst.max(b.value - self.sum);
        }
        worst
    }
}

/// Maximizes all four bounds over the reduced search.
pub fn channel_bounds<T: Scalar>(
    metric: &MetricSpec<T>,
    rho: &DensityMatrix<T>,
    channels: &[QuantumChannel<T>],
) -> Result<ChannelBoundReport<T>> {
    channel_bounds_with(metric, rho, channels, Search::Reduced, DEFAULT_SEARCH_BUDGET)
}

pub fn channel_bounds_with<T: Scalar>(
    metric: &MetricSpec<T>,
    rho: &DensityMatrix<T>,
    channels: &[QuantumChannel<T>],
    search: Search,
    budget: u128,
) -> Result<ChannelBoundReport<T>> {
    check_arity(channels)?;
    let prepared = Prepared::new(metric, rho, channels)?;
    let candidates = enumerate_assignments_with(channels.len(), prepared.n, search, budget)?;

    let mut best: [Option<Maximized<T>>; 4] = Default::default();
    for assignment in candidates {
        let v = prepared.evaluate(&assignment);
        for (slot, value) in best.iter_mut().zip([v.clb1, Some(v.clb2), Some(v.clb3), Some(v.clb4)]) {
            let Some(value) = value else { continue };
            if slot.as_ref().is_none_or(|b| value > b.value) {
                *slot = Some(Maximized { value, assignment: assignment.clone() });
            }
        }
    }
    let [clb1, clb2, clb3, clb4] = best;
    let sum = prepared.ops.iter().flatten().map(|k| prepared.kernel.evaluate_transformed(k)).sum();
    Ok(ChannelBoundReport {
        metric_name: metric.name().to_string(),
        channel_count: channels.len(),
        kraus_count: prepared.n,
        sum,
        clb1,
        clb2: clb2.expect("at least one assignment"),
        clb3: clb3.expect("at least one assignment"),
        clb4: clb4.expect("at least one assignment"),
    })
}

fn unpack<T>(m: Maximized<T>) -> (T, PermutationAssignment) {
    (m.value, m.assignment)
}

/// Maximized `clb1`; needs `N > 2`.
pub fn clb1<T: Scalar>(
    metric: &MetricSpec<T>,
    rho: &DensityMatrix<T>,
    channels: &[QuantumChannel<T>],
) -> Result<(T, PermutationAssignment)> {
    if channels.len() <= 2 {
        return Err(Error::RequiresThreeChannels(channels.len()));
    }
    let r = channel_bounds(metric, rho, channels)?;
    Ok(unpack(r.clb1.expect("N > 2")))
}

pub fn clb2<T: Scalar>(
    metric: &MetricSpec<T>,
    rho: &DensityMatrix<T>,
    channels: &[QuantumChannel<T>],
) -> Result<(T, PermutationAssignment)> {
    Ok(unpack(channel_bounds(metric, rho, channels)?.clb2))
}

pub fn clb3<T: Scalar>(
    metric: &MetricSpec<T>,
    rho: &DensityMatrix<T>,
    channels: &[QuantumChannel<T>],
) -> Result<(T, PermutationAssignment)> {
    Ok(unpack(channel_bounds(metric, rho, channels)?.clb3))
}

pub fn clb4<T: Scalar>(
    metric: &MetricSpec<T>,
    rho: &DensityMatrix<T>,
    channels: &[QuantumChannel<T>],
) -> Result<(T, PermutationAssignment)> {
    Ok(unpack(channel_bounds(metric, rho, channels)?.clb4))
}
