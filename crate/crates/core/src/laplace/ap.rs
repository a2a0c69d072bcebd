use num_complex::Complex64;

use crate::error::{domain, Result};

/// Largest system register accepted for node bookkeeping.
const MAX_SYSTEM_QUBITS: usize = 30;

/// Laplace-variable nodes `s_x = (a0 + da·x) + i(b0 + db·x)` for `x < 2^n_sys`,
/// stored as the diagonals of `L = Re(A)` and `H = Im(A)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ApSpec {
    pub first_real: f64,
    pub diff_real: f64,
    pub first_imag: f64,
    pub diff_imag: f64,
    pub n_sys: usize,
}

impl ApSpec {
    pub fn new(
        first_real: f64,
        diff_real: f64,
        first_imag: f64,
        diff_imag: f64,
        n_sys: usize,
    ) -> Result<Self> {
        let spec = Self {
            first_real,
            diff_real,
            first_imag,
            diff_imag,
            n_sys,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Nodes with equal real and imaginary progressions (`L = H`).
    pub fn symmetric(first: f64, diff: f64, n_sys: usize) -> Result<Self> {
        Self::new(first, diff, first, diff, n_sys)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_sys < 1 || self.n_sys > MAX_SYSTEM_QUBITS {
            return Err(domain(format!(
                "n_sys must be in [1, {MAX_SYSTEM_QUBITS}], got {}",
                self.n_sys
            )));
        }
        let all = [self.first_real, self.diff_real, self.first_imag, self.diff_imag];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(domain("arithmetic progression terms must be finite"));
        }
        // Linear in x, so checking both ends covers every node.
        let last = self.real_part(self.dimension() - 1);
        if self.first_real < 0.0 || last < 0.0 {
            return Err(domain(format!(
                "real parts must be non-negative over the grid (a_0 = {}, a_last = {last})",
                self.first_real
            )));
        }
        Ok(())
    }

    /// Number of nodes, `N = 2^n_sys`.
    pub fn dimension(&self) -> usize {
        1usize << self.n_sys
    }

    /// True when the real and imaginary progressions coincide, i.e. `L = H`.
    pub fn lh_equal(&self) -> bool {
        self.first_real == self.first_imag && self.diff_real == self.diff_imag
    }

    pub fn real_part(&self, x: usize) -> f64 {
        self.first_real + self.diff_real * x as f64
    }

    pub fn imag_part(&self, x: usize) -> f64 {
        self.first_imag + self.diff_imag * x as f64
    }

    pub fn node(&self, x: usize) -> Complex64 {
        Complex64::new(self.real_part(x), self.imag_part(x))
    }

    pub fn nodes(&self) -> Vec<Complex64> {
        (0..self.dimension()).map(|x| self.node(x)).collect()
    }
}
