use num_complex::Complex64;

use crate::error::{shape, QltError, Result};

use super::circuit::Circuit;
use super::gate::{Control, Gate, GateKind};

/// Memory guard for dense simulation (2^24 amplitudes ≈ 256 MiB).
pub const MAX_STATE_QUBITS: usize = 24;

/// Dense amplitude vector over `n_qubits` qubits, little-endian indexed.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

/// `|0…0⟩` on `n` qubits.
pub fn init_state(n: usize) -> Result<QubitState> {
    if !(1..=MAX_STATE_QUBITS).contains(&n) {
        return Err(QltError::Resource(format!(
            "state size must be 1..={MAX_STATE_QUBITS} qubits, got {n}"
        )));
    }
    Ok(QubitState::basis(n, 0))
}

impl QubitState {
    /// Computational basis state `|index⟩`; callers enforce size limits.
    pub(crate) fn basis(n_qubits: usize, index: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self {
            n_qubits,
            amplitudes,
        }
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        if !amplitudes.len().is_power_of_two() {
            return Err(shape("amplitude count must be a power of two"));
        }
        let n_qubits = amplitudes.len().trailing_zeros() as usize;
        if n_qubits > MAX_STATE_QUBITS {
            return Err(QltError::Resource(format!("{n_qubits} qubits exceeds the state guard")));
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn amplitude(&self, basis_index: usize) -> Result<Complex64> {
        self.amplitudes.get(basis_index).copied().ok_or_else(|| {
            shape(format!(
                "basis index {basis_index} out of range for {} qubits",
                self.n_qubits
            ))
        })
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.n_qubits)?;
        let (on_mask, off_mask) = control_masks(&gate.controls);
        let selected = |i: usize| i & on_mask == on_mask && i & off_mask == 0;
        match &gate.kind {
            GateKind::GlobalPhase(phi) => {
                let w = Complex64::from_polar(1.0, *phi);
                for (i, a) in self.amplitudes.iter_mut().enumerate() {
                    if selected(i) {
                        *a *= w;
                    }
                }
            }
            GateKind::AmplitudeLoad(loader) | GateKind::AmplitudeLoadTranspose(loader) => {
                let transpose = matches!(gate.kind, GateKind::AmplitudeLoadTranspose(_));
                let offsets = block_offsets(&gate.targets);
                let target_mask: usize = gate.targets.iter().map(|q| 1usize << q).sum();
                let mut block = vec![Complex64::new(0.0, 0.0); offsets.len()];
                for base in 0..self.amplitudes.len() {
                    if base & target_mask != 0 || !selected(base) {
                        continue;
                    }
                    for (slot, off) in block.iter_mut().zip(&offsets) {
                        *slot = self.amplitudes[base | off];
                    }
                    if transpose {
                        loader.apply_transpose(&mut block);
                    } else {
                        loader.apply(&mut block);
                    }
                    for (slot, off) in block.iter().zip(&offsets) {
                        self.amplitudes[base | off] = *slot;
                    }
                }
            }
            kind => {
                let m = kind
                    .single_qubit_matrix()
                    .expect("remaining kinds are single-qubit");
                let bit = 1usize << gate.targets[0];
                for i in 0..self.amplitudes.len() {
                    if i & bit != 0 || !selected(i) {
                        continue;
                    }
                    let (a0, a1) = (self.amplitudes[i], self.amplitudes[i | bit]);
                    self.amplitudes[i] = m[0][0] * a0 + m[0][1] * a1;
                    self.amplitudes[i | bit] = m[1][0] * a0 + m[1][1] * a1;
                }
            }
        }
        Ok(())
    }

    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.n_qubits() != self.n_qubits {
            return Err(shape(format!(
                "circuit has {} qubits, state has {}",
                circuit.n_qubits(),
                self.n_qubits
            )));
        }
        circuit.gates().iter().try_for_each(|g| self.apply_gate(g))
    }
}

fn control_masks(controls: &[Control]) -> (usize, usize) {
    controls.iter().fold((0, 0), |(on, off), c| {
        if c.on_one {
            (on | 1 << c.qubit, off)
        } else {
            (on, off | 1 << c.qubit)
        }
    })
}

/// Global offset of every block index, `targets[i]` carrying bit `i`.
fn block_offsets(targets: &[usize]) -> Vec<usize> {
    (0..1usize << targets.len())
        .map(|m| {
            targets
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, q)| 1usize << q)
                .sum()
        })
        .collect()
}
