use num_complex::Complex;

use super::observable::{pauli_matrix, Pauli};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::{Scalar, Tolerances};

/// Quantum channel given by an ordered list of Kraus operators.
///
/// The list may contain exact zero matrices (see [`pad_kraus`]).
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumChannel<T> {
    name: String,
    kraus: Vec<ComplexMatrix<T>>,
}

impl<T: Scalar> QuantumChannel<T> {
    /// Builds a channel and certifies `Σ K†K = I` within `tol.recon` (Frobenius).
    pub fn new(name: impl Into<String>, kraus: Vec<ComplexMatrix<T>>) -> Result<Self> {
        let channel = Self::new_unchecked(name, kraus)?;
        let deviation = channel.completeness_deviation();
        if deviation > Tolerances::<T>::default().recon {
            return Err(Error::CompletenessViolation { deviation: deviation.to_f64().unwrap_or(f64::NAN) });
        }
        Ok(channel)
    }

    /// Builds a channel without the completeness certificate. Dimensions are
    /// still checked.
    pub fn new_unchecked(name: impl Into<String>, kraus: Vec<ComplexMatrix<T>>) -> Result<Self> {
        let first = kraus.first().ok_or(Error::EmptyList)?;
        let dim = first.dim();
        if let Some(bad) = kraus.iter().find(|k| k.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
        }
        Ok(Self { name: name.into(), kraus })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kraus(&self) -> &[ComplexMatrix<T>] {
        &self.kraus
    }

    pub fn kraus_count(&self) -> usize {
        self.kraus.len()
    }

    pub fn dim(&self) -> usize {
        self.kraus[0].dim()
    }

    /// `‖Σ K†K − I‖_F`.
    pub fn completeness_deviation(&self) -> T {
        let d = self.dim();
        let sum = self.kraus.iter().fold(ComplexMatrix::zeros(d), |acc, k| &acc + &(&k.adjoint() * k));
        (&sum - &ComplexMatrix::identity(d)).frobenius_norm()
    }

    /// `Φ(ρ) = Σ K ρ K†`.
    pub fn apply(&self, rho: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        if rho.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: rho.dim() });
        }
        Ok(self.kraus.iter().fold(ComplexMatrix::zeros(rho.dim()), |acc, k| &acc + &(&(k * rho) * &k.adjoint())))
    }

    /// Appends zero Kraus operators until the list has `count` entries.
    pub fn padded_to(&self, count: usize) -> Self {
        let mut kraus = self.kraus.clone();
        while kraus.len() < count {
            kraus.push(ComplexMatrix::zeros(self.dim()));
        }
        Self { name: self.name.clone(), kraus }
    }
}

fn check_probability<T: Scalar>(p: T) -> Result<()> {
    if !(p >= T::zero() && p <= T::one()) {
        return Err(Error::ParameterOutOfRange { name: "p", value: p.to_f64().unwrap_or(f64::NAN) });
    }
    Ok(())
}

/// Bit flip: `{√(1−p)·I, √p·σx}`.
pub fn bit_flip_channel<T: Scalar>(p: T) -> Result<QuantumChannel<T>> {
    check_probability(p)?;
    QuantumChannel::new("bit_flip", vec![ComplexMatrix::identity(2).scale((T::one() - p).sqrt()), pauli_matrix(Pauli::X).scale(p.sqrt())])
}

/// Phase flip: `{√(1−p)·I, √p·σz}`.
pub fn phase_flip_channel<T: Scalar>(p: T) -> Result<QuantumChannel<T>> {
    check_probability(p)?;
    QuantumChannel::new("phase_flip", vec![ComplexMatrix::identity(2).scale((T::one() - p).sqrt()), pauli_matrix(Pauli::Z).scale(p.sqrt())])
}

/// Second Kraus operator of the amplitude-damping channel.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DampingForm {
    /// `K₂ = √p|0⟩⟨1|`, which makes the pair complete.
    #[default]
    Standard,
    /// `K₂ = √p|1⟩⟨1|`. Still complete, but the pair then describes
    /// phase damping rather than decay to |0⟩.
    Literal,
}

impl DampingForm {
    pub fn label(self) -> &'static str {
        match self {
            DampingForm::Standard => "standard",
            DampingForm::Literal => "literal",
        }
    }
}

/// Amplitude damping with the standard, complete Kraus pair
/// `K₁ = |0⟩⟨0| + √(1−p)|1⟩⟨1|`, `K₂ = √p|0⟩⟨1|`.
pub fn amplitude_damping_channel<T: Scalar>(p: T) -> Result<QuantumChannel<T>> {
    amplitude_damping_channel_with(p, DampingForm::Standard)
}

pub fn amplitude_damping_channel_with<T: Scalar>(p: T, form: DampingForm) -> Result<QuantumChannel<T>> {
    check_probability(p)?;
    let k1 = ComplexMatrix::from_real_diag(&[T::one(), (T::one() - p).sqrt()]);
    let mut k2 = ComplexMatrix::zeros(2);
    match form {
        DampingForm::Standard => {
            k2[(0, 1)] = Complex::new(p.sqrt(), T::zero());
            QuantumChannel::new("amplitude_damping", vec![k1, k2])
        }
        DampingForm::Literal => {
            k2[(1, 1)] = Complex::new(p.sqrt(), T::zero());
            QuantumChannel::new("amplitude_damping_literal", vec![k1, k2])
        }
    }
}

/// Single-Kraus channel `{U}`; `U` must be unitary within `1e-10` (f64 default).
pub fn unitary_channel<T: Scalar>(u: ComplexMatrix<T>) -> Result<QuantumChannel<T>> {
    let deviation = u.unitary_deviation();
    if deviation > Tolerances::<T>::default().herm {
        return Err(Error::NotUnitary { deviation: deviation.to_f64().unwrap_or(f64::NAN) });
    }
    QuantumChannel::new("unitary", vec![u])
}

/// Real rotation `cos φ|0⟩⟨0| + sin φ|0⟩⟨1| − sin φ|1⟩⟨0| + cos φ|1⟩⟨1|`.
pub fn rotation<T: Scalar>(phi: T) -> ComplexMatrix<T> {
    let (s, c) = phi.sin_cos();
    let z = T::zero();
    ComplexMatrix::new(2, vec![Complex::new(c, z), Complex::new(s, z), Complex::new(-s, z), Complex::new(c, z)]).expect("2×2 rotation")
}

/// Pads every channel with zero Kraus operators up to the largest Kraus
/// count among them. Channel action and skew information are unchanged.
pub fn pad_kraus<T: Scalar>(channels: &[QuantumChannel<T>]) -> Result<Vec<QuantumChannel<T>>> {
    let Some(first) = channels.first() else {
        return Ok(Vec::new());
    };
    let dim = first.dim();
    if let Some(bad) = channels.iter().find(|c| c.dim() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
    }
    let count = channels.iter().map(QuantumChannel::kraus_count).max().unwrap_or(0);
    Ok(channels.iter().map(|c| c.padded_to(count)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const PS: [f64; 5] = [0.0, 0.25, 0.5, 0.7, 1.0];

    #[test]
    fn constructors_are_complete() {
        for p in PS {
            for ch in [
                bit_flip_channel(p).unwrap(),
                phase_flip_channel(p).unwrap(),
                amplitude_damping_channel(p).unwrap(),
                unitary_channel(rotation(p)).unwrap(),
            ] {
                assert!(ch.completeness_deviation() <= 1e-10, "{} at p={p}", ch.name());
            }
        }
    }

    #[test]
    fn bit_flip_at_zero() {
        let ch = bit_flip_channel(0.0).unwrap();
        assert_eq!(ch.kraus()[0], ComplexMatrix::identity(2));
        assert!(ch.kraus()[1].is_zero());
    }

    #[test]
    fn amplitude_damping_first_operator() {
        let ch = amplitude_damping_channel(0.7).unwrap();
        assert!(ch.kraus()[0].approx_eq(&ComplexMatrix::from_real_diag(&[1.0, 0.3f64.sqrt()]), 1e-15));
        assert!((ch.kraus()[1][(0, 1)].re - 0.7f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn literal_damping_form() {
        let ch = amplitude_damping_channel_with(0.7, DampingForm::Literal).unwrap();
        assert!((ch.kraus()[1][(1, 1)].re - 0.7f64.sqrt()).abs() < 1e-15);
        // diag(1, 1 − p) + diag(0, p) = I
        assert!(ch.completeness_deviation() < 1e-15);
        // populations are untouched, unlike the standard form
        let excited = ComplexMatrix::from_real_diag(&[0.0, 1.0]);
        assert!(ch.apply(&excited).unwrap().approx_eq(&excited, 1e-15));
        let decayed = amplitude_damping_channel(0.7).unwrap().apply(&excited).unwrap();
        assert!((decayed[(0, 0)].re - 0.7).abs() < 1e-15);
    }

    #[test]
    fn incomplete_list_rejected() {
        let err = QuantumChannel::new("half", vec![ComplexMatrix::<f64>::identity(2).scale(0.5)]).unwrap_err();
        assert!(matches!(err, Error::CompletenessViolation { .. }));
    }

    #[test]
    fn parameter_checks() {
        assert!(matches!(bit_flip_channel(1.5), Err(Error::ParameterOutOfRange { .. })));
        assert!(matches!(phase_flip_channel(-0.1), Err(Error::ParameterOutOfRange { .. })));
        let not_unitary = ComplexMatrix::from_real_diag(&[1.0, 0.5]);
        assert!(matches!(unitary_channel(not_unitary), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn unitary_channel_has_one_operator() {
        let ch = unitary_channel(rotation(std::f64::consts::FRAC_PI_8)).unwrap();
        assert_eq!(ch.kraus_count(), 1);
        let u = &ch.kraus()[0];
        assert!((&u.adjoint() * u).approx_eq(&ComplexMatrix::identity(2), 1e-15));
    }

    #[test]
    fn padding_to_common_length() {
        let chans = vec![
            bit_flip_channel(0.7).unwrap(),
            phase_flip_channel(0.7).unwrap(),
            unitary_channel(rotation(std::f64::consts::FRAC_PI_8)).unwrap(),
        ];
        let padded = pad_kraus(&chans).unwrap();
        assert!(padded.iter().all(|c| c.kraus_count() == 2));
        assert!(padded[2].kraus()[1].is_zero());
        assert_eq!(padded[0], chans[0]);

        let same = pad_kraus(&chans[..2]).unwrap();
        assert_eq!(same, chans[..2].to_vec());
    }

    #[test]
    fn padding_rejects_mixed_dimensions() {
        let big = QuantumChannel::new("id4", vec![ComplexMatrix::<f64>::identity(4)]).unwrap();
        let err = pad_kraus(&[bit_flip_channel(0.5).unwrap(), big]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 4 });
    }

    #[test]
    fn mixed_kraus_dimensions_rejected() {
        let err = QuantumChannel::new_unchecked("bad", vec![ComplexMatrix::<f64>::identity(2), ComplexMatrix::identity(3)]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        assert_eq!(QuantumChannel::<f64>::new_unchecked("e", vec![]).unwrap_err(), Error::EmptyList);
    }
}
