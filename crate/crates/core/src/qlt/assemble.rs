use num_complex::Complex64;

use crate::error::{QltError, Result};
use crate::laplace::{compute_coefficients, LcuCoefficients};
use crate::statevector::{init_state, Circuit, Gate, MAX_STATE_QUBITS};

use super::config::{QltConfig, Registers};
use super::prep::prep_complex_weights;
use super::select::build_select;

/// The QLT circuit split into its LCU stages, each on the full register.
#[derive(Debug, Clone)]
pub struct QltCircuit {
    pub registers: Registers,
    pub coefficients: LcuCoefficients,
    pub prep_j: Circuit,
    pub prep_l: Circuit,
    /// Hadamard on every system qubit.
    pub system_init: Circuit,
    pub select: Circuit,
    pub unprep_j: Circuit,
    pub unprep_l: Circuit,
}

impl QltCircuit {
    /// PREP · SELECT · UNPREP without the system Hadamard wall.
    pub fn lcu_circuit(&self) -> Result<Circuit> {
        let mut c = Circuit::new(self.registers.total());
        for stage in [&self.prep_j, &self.prep_l, &self.select, &self.unprep_j, &self.unprep_l] {
            c.append(stage)?;
        }
        Ok(c)
    }

    /// Complete circuit applied to `|0…0⟩`.
    pub fn full_circuit(&self) -> Result<Circuit> {
        let mut c = Circuit::new(self.registers.total());
        c.append(&self.system_init)?;
        c.append(&self.lcu_circuit()?)?;
        Ok(c)
    }
}

pub fn build_qlt(config: &QltConfig) -> Result<QltCircuit> {
    let coefficients = compute_coefficients(&config.grid, &config.signal)?;
    if coefficients.is_degenerate() {
        return Err(QltError::Degenerate(
            "signal vanishes on every time node; no preparation state exists".into(),
        ));
    }
    let regs = config.registers();
    let total = regs.total();
    let prep_j = prep_complex_weights(&coefficients.c)?.embed(regs.j_offset(), total)?;
    let prep_l = prep_complex_weights(&coefficients.c_hat)?.embed(regs.l_offset(), total)?;
    let mut system_init = Circuit::new(total);
    for q in 0..regs.n_sys {
        system_init.push(Gate::h(regs.system_qubit(q)))?;
    }
    let select = build_select(config)?;
    Ok(QltCircuit {
        registers: regs,
        unprep_j: prep_j.transpose(),
        unprep_l: prep_l.transpose(),
        coefficients,
        prep_j,
        prep_l,
        system_init,
        select,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct QltResult {
    /// Laplace node `s_x` for each output.
    pub nodes: Vec<Complex64>,
    /// Amplitudes of `|0⟩_j |0⟩_l |x⟩`.
    pub raw_amplitudes: Vec<Complex64>,
    /// `raw_amplitudes[x] · rescale_factor`.
    pub values: Vec<Complex64>,
    /// `‖c‖₁ · ‖ĉ‖₁ · √(2^n_sys)`
    pub rescale_factor: f64,
    /// Squared norm of the ancilla-zero branch.
    pub success_weight: f64,
}

/// Simulate the QLT circuit and read off the rescaled transform values.
pub fn run_qlt(config: &QltConfig) -> Result<QltResult> {
    let total = config.registers().total();
    if total > MAX_STATE_QUBITS {
        return Err(QltError::Resource(format!(
            "QLT needs {total} qubits, simulator limit is {MAX_STATE_QUBITS}"
        )));
    }
    let qlt = build_qlt(config)?;
    let mut state = init_state(total)?;
    state.apply_circuit(&qlt.full_circuit()?)?;

    let dim = config.ap.dimension();
    let raw_amplitudes = state.amplitudes()[..dim].to_vec();
    let success_weight = raw_amplitudes.iter().map(|a| a.norm_sqr()).sum();
    let rescale_factor =
        qlt.coefficients.norm_c * qlt.coefficients.norm_c_hat * (dim as f64).sqrt();
    let values = raw_amplitudes.iter().map(|a| a * rescale_factor).collect();
    Ok(QltResult {
        nodes: config.ap.nodes(),
        raw_amplitudes,
        values,
        rescale_factor,
        success_weight,
    })
}
