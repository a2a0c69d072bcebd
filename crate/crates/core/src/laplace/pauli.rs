use crate::bits::z_sign;
use crate::error::{domain, Result};

/// Pauli expansion of `D = diag(a + d·x)` on `n` qubits.
///
/// Only the identity and the single-Z strings carry weight; `alpha_z[q]` is
/// the coefficient of `Z` on qubit `q` (little-endian, see [`crate::bits`]).
#[derive(Debug, Clone, PartialEq)]
pub struct PauliDiagonalDecomposition {
    pub alpha_i: f64,
    pub alpha_z: Vec<f64>,
}

impl PauliDiagonalDecomposition {
    pub fn n_qubits(&self) -> usize {
        self.alpha_z.len()
    }

    /// Diagonal entry `alpha_I + Σ_q alpha_Z[q]·(-1)^{x_q}`.
    pub fn value(&self, x: usize) -> f64 {
        self.alpha_z
            .iter()
            .enumerate()
            .fold(self.alpha_i, |acc, (q, a)| acc + a * z_sign(x, q))
    }

    pub fn reconstruct_diagonal(&self) -> Vec<f64> {
        (0..1usize << self.n_qubits()).map(|x| self.value(x)).collect()
    }
}

/// `alpha_I = a + d(2^n - 1)/2` and `alpha_Z[q] = -d·2^{q-1}`.
pub fn pauli_decompose_ap(first: f64, diff: f64, n: usize) -> Result<PauliDiagonalDecomposition> {
    if n < 1 {
        return Err(domain("Pauli decomposition needs at least one qubit"));
    }
    if n >= usize::BITS as usize {
        return Err(domain(format!("{n} qubits cannot be indexed")));
    }
    let alpha_i = first + diff * ((1u64 << n) - 1) as f64 / 2.0;
    let alpha_z = (0..n).map(|q| -diff * 2f64.powi(q as i32 - 1)).collect();
    Ok(PauliDiagonalDecomposition { alpha_i, alpha_z })
}
