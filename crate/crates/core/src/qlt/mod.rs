//! QLT circuit assembly, simulation and audits.

mod assemble;
mod audit;
mod config;
mod prep;
mod select;

pub use assemble::{build_qlt, run_qlt, QltCircuit, QltResult};
pub use audit::{
    classical_values, convergence_study, gate_count_audit, predicted_gate_count,
    validate_schedule, verify_against_classical, ComparisonReport, ConvergencePoint, GateCountRow,
    NodeComparison, MAX_AUDIT_M,
};
pub use config::{QltConfig, Registers, SelectVariant};
pub use prep::{lcu_amplitudes, prep_complex_weights, prep_real_weights, principal_sqrt};
pub use select::build_select;
