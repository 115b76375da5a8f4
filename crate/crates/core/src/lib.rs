//! Metric-adjusted skew information and lower bounds on sums of it, for
//! observables and for quantum channels.
//!
//! Everything is generic over a real scalar `T: Scalar` (`f32` or `f64`).
//! The aliases below fix `T = f64`.

pub mod channel_bounds;
pub mod error;
pub mod linalg;
pub mod metric;
pub mod objects;
pub mod observable_bounds;
pub mod random;
pub mod scalar;

pub use channel_bounds::{
    channel_bounds, channel_bounds_with, channel_skew_information, clb1, clb2, clb3, clb4, enumerate_assignments,
    enumerate_assignments_with, evaluate_assignment, AssignmentBounds, ChannelBoundReport, Maximized, PermutationAssignment, Search,
    DEFAULT_SEARCH_BUDGET,
};
pub use error::{Error, Result};
pub use linalg::{commutator, trace_product, ComplexMatrix, SpectralDecomposition};
pub use metric::{
    metric_value, skew_information, sld_metric, wy_metric, wyd_metric, wyd_skew_information_direct, MetricRegistry, MetricSpec, SkewKernel,
    WydParameter,
};
pub use objects::{
    amplitude_damping_channel, amplitude_damping_channel_with, bit_flip_channel, bloch_qubit, gisin_state, lifted_pauli, pad_kraus, pauli,
    pauli_matrix, phase_flip_channel, rotation, unitary_channel, DampingForm, DensityMatrix, Observable, Pauli, QuantumChannel, Side,
};
pub use observable_bounds::{
    lb1, lb2, lb3, lb4, norm_inequality_check, observable_bounds, sum_skew, NormInequality, ObservableBoundReport,
};
pub use scalar::{Scalar, Tolerances};

/// Complex scalar in double precision.
pub type C64 = num_complex::Complex<f64>;
pub type Matrix = ComplexMatrix<f64>;
pub type Spectral = SpectralDecomposition<f64>;
pub type State = DensityMatrix<f64>;
pub type Obs = Observable<f64>;
pub type Channel = QuantumChannel<f64>;
pub type Metric = MetricSpec<f64>;
pub type Registry = MetricRegistry<f64>;
pub type Kernel = SkewKernel<f64>;
pub type ObservableReport = ObservableBoundReport<f64>;
pub type ChannelReport = ChannelBoundReport<f64>;
