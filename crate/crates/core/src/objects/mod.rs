//! States, observables and channels used throughout the crate.

mod channel;
mod observable;
mod state;

pub use channel::{
    amplitude_damping_channel, amplitude_damping_channel_with, bit_flip_channel, pad_kraus, phase_flip_channel, rotation, unitary_channel,
    DampingForm, QuantumChannel,
};
pub use observable::{lifted_pauli, pauli, pauli_matrix, Observable, Pauli, Side};
pub use state::{bloch_qubit, gisin_state, DensityMatrix};
