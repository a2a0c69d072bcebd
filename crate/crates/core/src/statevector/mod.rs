//! Dense statevector engine for the fixed QLT gate set.
//!
//! Gates carry at most two controls; a control may be open (acts on `|0⟩`).
//! Transposed circuits and dense unitaries back the oracle tests.

mod circuit;
mod gate;
mod state;

pub use circuit::{circuit_unitary, gate_count, transpose_circuit, Circuit, GateCounts, MAX_DENSE_QUBITS};
pub use gate::{AmplitudeLoader, Control, Gate, GateKind, GateName, MAX_CONTROLS};
pub use state::{init_state, QubitState, MAX_STATE_QUBITS};
