use std::sync::Arc;

use num_complex::Complex64;

use crate::bits::exact_log2;
use crate::error::{shape, QltError, Result};
use crate::statevector::{AmplitudeLoader, Circuit, Gate};

fn register_width(len: usize) -> Result<usize> {
    exact_log2(len).ok_or_else(|| shape(format!("weight count {len} is not a power of two")))
}

/// Principal square root, taking `√(-x) = +i√x` for negative reals.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re < 0.0 {
        Complex64::new(0.0, (-z.re).sqrt())
    } else {
        z.sqrt()
    }
}

/// Amplitudes `√c_j / √‖c‖₁`, so that `a_j² = c_j / ‖c‖₁`.
pub fn lcu_amplitudes(c: &[Complex64]) -> Result<Vec<Complex64>> {
    let norm: f64 = c.iter().map(|z| z.norm()).sum();
    if norm.is_nan() || norm <= 0.0 {
        return Err(QltError::Degenerate("weights have zero 1-norm".into()));
    }
    let scale = norm.sqrt().recip();
    Ok(c.iter().map(|z| principal_sqrt(*z) * scale).collect())
}

/// Prepares `Σ_j √(w_j/‖w‖₁) |j⟩` from `|0…0⟩`.
///
/// Two weights use a single `RY(γ)` with `γ = 2·arccos(√(w_0/(w_0+w_1)))`;
/// longer inputs fall back to an amplitude loader.
pub fn prep_real_weights(weights: &[f64]) -> Result<Circuit> {
    let width = register_width(weights.len())?;
    if weights.iter().any(|w| w.is_nan() || *w < 0.0) {
        return Err(QltError::Domain("real LCU weights must be non-negative".into()));
    }
    let total: f64 = weights.iter().sum();
    if total.is_nan() || total <= 0.0 {
        return Err(QltError::Degenerate("all weights are zero".into()));
    }
    let mut circuit = Circuit::new(width);
    match width {
        0 => {}
        1 => {
            let gamma = 2.0 * (weights[0] / total).sqrt().min(1.0).acos();
            circuit.push(Gate::ry(0, gamma))?;
        }
        _ => {
            let amps = weights
                .iter()
                .map(|w| Complex64::new((w / total).sqrt(), 0.0))
                .collect();
            let loader = Arc::new(AmplitudeLoader::new(amps)?);
            circuit.push(Gate::amplitude_load((0..width).collect(), loader))?;
        }
    }
    Ok(circuit)
}

/// Prepares `Σ_j a_j |j⟩` with `a_j = √c_j / √‖c‖₁` (principal roots).
///
/// For two weights the gates, in application order, are
/// `RY(θ), P(θ₂), X, P(θ₁), X` with `θ = 2·arccos(|a_0|/√(|a_0|²+|a_1|²))`,
/// `θ₁ = arg a_0` and `θ₂ = arg a_1`. A single weight is a phase; longer
/// inputs use an amplitude loader.
pub fn prep_complex_weights(c: &[Complex64]) -> Result<Circuit> {
    let width = register_width(c.len())?;
    let amps = lcu_amplitudes(c)?;
    let mut circuit = Circuit::new(width);
    match width {
        0 => circuit.push(Gate::global_phase(amps[0].arg()))?,
        1 => {
            let (m0, m1) = (amps[0].norm(), amps[1].norm());
            let theta = 2.0 * (m0 / m0.hypot(m1)).min(1.0).acos();
            circuit.push(Gate::ry(0, theta))?;
            circuit.push(Gate::phase(0, amps[1].arg()))?;
            circuit.push(Gate::x(0))?;
            circuit.push(Gate::phase(0, amps[0].arg()))?;
            circuit.push(Gate::x(0))?;
        }
        _ => {
            let loader = Arc::new(AmplitudeLoader::new(amps)?);
            circuit.push(Gate::amplitude_load((0..width).collect(), loader))?;
        }
    }
    Ok(circuit)
}
