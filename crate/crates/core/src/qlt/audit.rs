use num_complex::Complex64;

use crate::bits::exact_log2;
use crate::error::{domain, QltError, Result};
use crate::laplace::{
    analytic_laplace, compute_coefficients, lchs_discrete_sum, ApSpec, LaplaceGrid,
    SignalFunction, DEFAULT_BETA, DEFAULT_K_MAX, DEFAULT_T_MAX,
};

use super::assemble::run_qlt;
use super::config::{QltConfig, SelectVariant};
use super::select::build_select;

/// Gate count of SELECT: `d·d'·(2 + 3·n_sys)` for the full form, the
/// constructed count otherwise.
pub fn predicted_gate_count(config: &QltConfig) -> Result<usize> {
    let regs = config.registers();
    match config.variant {
        SelectVariant::Full if regs.d > 0 => Ok(regs.d * regs.d_prime * (2 + 3 * regs.n_sys)),
        _ => Ok(build_select(config)?.len()),
    }
}

/// Discrete Lap-LCHS sum at every node of `config.ap`.
pub fn classical_values(config: &QltConfig) -> Result<Vec<Complex64>> {
    let co = compute_coefficients(&config.grid, &config.signal)?;
    config
        .ap
        .nodes()
        .into_iter()
        .map(|s| lchs_discrete_sum(&co, &config.grid, s))
        .collect()
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct NodeComparison {
    pub s: Complex64,
    pub circuit: Complex64,
    pub classical: Complex64,
    /// Closed form when the signal has one.
    pub analytic: Option<Complex64>,
    pub abs_diff: f64,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ComparisonReport {
    pub max_abs_diff: f64,
    pub nodes: Vec<NodeComparison>,
}

impl ComparisonReport {
    /// Element-wise comparison of two value vectors over the same nodes.
    pub fn from_values(
        nodes: &[Complex64],
        circuit: &[Complex64],
        classical: &[Complex64],
        signal: &SignalFunction,
    ) -> Self {
        let nodes: Vec<NodeComparison> = nodes
            .iter()
            .zip(circuit.iter().zip(classical))
            .map(|(&s, (&circuit, &classical))| NodeComparison {
                s,
                circuit,
                classical,
                analytic: analytic_laplace(signal, s).ok(),
                abs_diff: (circuit - classical).norm(),
            })
            .collect();
        let max_abs_diff = nodes.iter().map(|n| n.abs_diff).fold(0.0, f64::max);
        Self {
            max_abs_diff,
            nodes,
        }
    }
}

/// Circuit output against the direct double sum at every node.
pub fn verify_against_classical(config: &QltConfig) -> Result<ComparisonReport> {
    let result = run_qlt(config)?;
    let classical = classical_values(config)?;
    Ok(ComparisonReport::from_values(
        &result.nodes,
        &result.values,
        &classical,
        &config.signal,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ConvergencePoint {
    pub log2_mk: usize,
    /// `Σ_x |LCHS(s_x) - L{g}(s_x)|`
    pub total_abs_error: f64,
}

/// Summed error of the discrete sum against the closed form over the nodes
/// of `ap`, for `M_k = M_t = M` along `schedule`.
pub fn convergence_study(
    ap: &ApSpec,
    k_max: f64,
    t_max: f64,
    beta: f64,
    signal: &SignalFunction,
    schedule: &[usize],
) -> Result<Vec<ConvergencePoint>> {
    if !signal.has_closed_form() {
        return Err(QltError::Unsupported(
            "convergence needs a signal with a closed-form transform".into(),
        ));
    }
    validate_schedule(schedule)?;
    let nodes = ap.nodes();
    let exact = nodes
        .iter()
        .map(|&s| analytic_laplace(signal, s))
        .collect::<Result<Vec<_>>>()?;
    schedule
        .iter()
        .map(|&m| {
            let grid = LaplaceGrid::new(k_max, m, t_max, m, beta)?;
            let co = compute_coefficients(&grid, signal)?;
            let mut total = 0.0;
            for (s, want) in nodes.iter().zip(&exact) {
                total += (lchs_discrete_sum(&co, &grid, *s)? - want).norm();
            }
            Ok(ConvergencePoint {
                log2_mk: grid.k_qubits(),
                total_abs_error: total,
            })
        })
        .collect()
}

pub fn validate_schedule(schedule: &[usize]) -> Result<()> {
    if schedule.is_empty() {
        return Err(domain("schedule is empty"));
    }
    if let Some(bad) = schedule.iter().find(|m| exact_log2(**m).is_none()) {
        return Err(domain(format!("schedule entry {bad} is not a power of two")));
    }
    if schedule.windows(2).any(|w| w[1] <= w[0]) {
        return Err(domain("schedule must be strictly increasing"));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct GateCountRow {
    pub m: usize,
    pub full_count: usize,
    pub reduced_count: usize,
    pub predicted_full: usize,
    pub ratio_full_over_m3: f64,
}

/// Largest register size the gate-count sweep accepts.
pub const MAX_AUDIT_M: usize = 6;

/// SELECT sizes for `d = d' = n_sys = m`, `m = 1..=m_max`.
pub fn gate_count_audit(m_max: usize) -> Result<Vec<GateCountRow>> {
    if !(1..=MAX_AUDIT_M).contains(&m_max) {
        return Err(domain(format!("m_max must be in 1..={MAX_AUDIT_M}, got {m_max}")));
    }
    (1..=m_max)
        .map(|m| {
            let mut config = QltConfig::new(
                ApSpec::symmetric(1.0, 1.0, m)?,
                LaplaceGrid::new(DEFAULT_K_MAX, 1 << m, DEFAULT_T_MAX, 1 << m, DEFAULT_BETA)?,
                SignalFunction::ExpDecay { rate: 0.9 },
                SelectVariant::Full,
            );
            let full_count = build_select(&config)?.len();
            let predicted_full = predicted_gate_count(&config)?;
            config.variant = SelectVariant::Reduced;
            let reduced_count = build_select(&config)?.len();
            Ok(GateCountRow {
                m,
                full_count,
                reduced_count,
                predicted_full,
                ratio_full_over_m3: full_count as f64 / (m * m * m) as f64,
            })
        })
        .collect()
}
