use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{shape, QltError, Result};

use super::gate::{Gate, GateName};
use super::state::QubitState;

/// Dense-matrix guard for [`Circuit::unitary`].
pub const MAX_DENSE_QUBITS: usize = 10;

/// Ordered gate list; gates apply left to right.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Self {
        Self {
            n_qubits,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(n_qubits: usize, gates: Vec<Gate>) -> Result<Self> {
        let mut c = Self::new(n_qubits);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Append `other` after this circuit.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        if other.n_qubits != self.n_qubits {
            return Err(shape(format!(
                "cannot append a {}-qubit circuit to a {}-qubit circuit",
                other.n_qubits, self.n_qubits
            )));
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    /// Place this register-local circuit at qubits `offset..offset+n` of a
    /// `total`-qubit register.
    pub fn embed(&self, offset: usize, total: usize) -> Result<Circuit> {
        if offset + self.n_qubits > total {
            return Err(shape(format!(
                "{} qubits at offset {offset} do not fit in {total}",
                self.n_qubits
            )));
        }
        Ok(Circuit {
            n_qubits: total,
            gates: self.gates.iter().map(|g| g.remap(|q| q + offset)).collect(),
        })
    }

    /// Circuit whose unitary is the (non-conjugated) transpose of this one's:
    /// order reversed and every gate transposed.
    pub fn transpose(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().map(Gate::transpose).collect(),
        }
    }

    pub fn max_control_arity(&self) -> usize {
        self.gates.iter().map(|g| g.controls.len()).max().unwrap_or(0)
    }

    pub fn gate_count(&self) -> GateCounts {
        let mut counts = GateCounts::default();
        for g in &self.gates {
            *counts.by_kind.entry((g.kind.name(), g.controls.len())).or_default() += 1;
        }
        counts
    }

    /// Dense `2^n × 2^n` unitary, column `c` being the image of `|c⟩`.
    pub fn unitary(&self) -> Result<DMatrix<Complex64>> {
        if self.n_qubits > MAX_DENSE_QUBITS {
            return Err(QltError::Resource(format!(
                "dense unitary limited to {MAX_DENSE_QUBITS} qubits, got {}",
                self.n_qubits
            )));
        }
        let dim = 1usize << self.n_qubits;
        let mut m = DMatrix::zeros(dim, dim);
        for col in 0..dim {
            let mut state = QubitState::basis(self.n_qubits, col);
            for g in &self.gates {
                state.apply_gate(g)?;
            }
            for (row, a) in state.amplitudes().iter().enumerate() {
                m[(row, col)] = *a;
            }
        }
        Ok(m)
    }
}

/// Transpose of a circuit (see [`Circuit::transpose`]).
pub fn transpose_circuit(c: &Circuit) -> Circuit {
    c.transpose()
}

pub fn circuit_unitary(c: &Circuit) -> Result<DMatrix<Complex64>> {
    c.unitary()
}

pub fn gate_count(c: &Circuit) -> GateCounts {
    c.gate_count()
}

/// Gate tally keyed by `(kind, number of controls)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GateCounts {
    pub by_kind: BTreeMap<(GateName, usize), usize>,
}

impl GateCounts {
    pub fn total(&self) -> usize {
        self.by_kind.values().sum()
    }

    pub fn get(&self, kind: GateName, controls: usize) -> usize {
        self.by_kind.get(&(kind, controls)).copied().unwrap_or(0)
    }

    /// Gates carrying exactly `controls` controls, any kind.
    pub fn with_controls(&self, controls: usize) -> usize {
        self.by_kind
            .iter()
            .filter(|((_, c), _)| *c == controls)
            .map(|(_, n)| n)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statevector::gate::Control;

    fn close(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>, tol: f64) -> bool {
        a.shape() == b.shape() && a.iter().zip(b.iter()).all(|(x, y)| (x - y).norm() <= tol)
    }

    #[test]
    fn empty_circuit_is_identity() {
        let c = Circuit::new(1);
        assert!(close(&c.unitary().unwrap(), &DMatrix::identity(2, 2), 0.0));
        assert_eq!(c.gate_count().total(), 0);
    }

    #[test]
    fn global_phase_unitary() {
        let c = Circuit::from_gates(1, vec![Gate::global_phase(0.4)]).unwrap();
        let expected = DMatrix::identity(2, 2) * Complex64::from_polar(1.0, 0.4);
        assert!(close(&c.unitary().unwrap(), &expected, 1e-15));
    }

    #[test]
    fn transpose_reverses_and_flips_ry() {
        let (t1, t2, th) = (0.3, -1.1, 0.9);
        let c = Circuit::from_gates(
            1,
            vec![Gate::x(0), Gate::phase(0, t1), Gate::x(0), Gate::phase(0, t2), Gate::ry(0, th)],
        )
        .unwrap();
        let expected = vec![
            Gate::ry(0, -th),
            Gate::phase(0, t2),
            Gate::x(0),
            Gate::phase(0, t1),
            Gate::x(0),
        ];
        assert_eq!(c.transpose().gates(), expected.as_slice());
        assert_eq!(
            Circuit::from_gates(1, vec![Gate::ry(0, 0.7)]).unwrap().transpose().gates(),
            &[Gate::ry(0, -0.7)]
        );
    }

    #[test]
    fn embed_shifts_qubits() {
        let c = Circuit::from_gates(2, vec![Gate::x(1).with_controls(&[Control::on(0)])]).unwrap();
        let e = c.embed(3, 5).unwrap();
        assert_eq!(e.gates()[0].targets, vec![4]);
        assert_eq!(e.gates()[0].controls, vec![Control::on(3)]);
        assert!(c.embed(4, 5).is_err());
    }

    #[test]
    fn counts_keyed_by_arity() {
        let c = Circuit::from_gates(
            3,
            vec![
                Gate::rz(0, 0.1).with_controls(&[Control::on(1), Control::on(2)]),
                Gate::rz(0, 0.2).with_controls(&[Control::on(1)]),
                Gate::phase(2, 0.3).with_controls(&[Control::on(1)]),
                Gate::h(0),
            ],
        )
        .unwrap();
        let n = c.gate_count();
        assert_eq!(n.total(), 4);
        assert_eq!(n.get(GateName::RZ, 2), 1);
        assert_eq!(n.get(GateName::RZ, 1), 1);
        assert_eq!(n.with_controls(1), 2);
        assert_eq!(c.max_control_arity(), 2);
    }

    #[test]
    fn dense_guard() {
        assert!(matches!(Circuit::new(11).unitary(), Err(QltError::Resource(_))));
    }
}
