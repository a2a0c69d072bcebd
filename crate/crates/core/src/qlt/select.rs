use crate::error::{QltError, Result};
use crate::laplace::{pauli_decompose_ap, PauliDiagonalDecomposition};
use crate::statevector::{Circuit, Control, Gate};

use super::config::{QltConfig, Registers, SelectVariant};

/// SELECT `Σ_{j,l} |j⟩⟨j| ⊗ |l⟩⟨l| ⊗ e^{-i t_l (k_j L + H)}` for `L = H`.
///
/// With `L = H = diag(a + d·x)` the exponent factors as
/// `e^{-i l h_t (1-K) L} · e^{-i l j h_t h_k L}`, and binary expansion of `l`
/// and `j` turns both factors into products over single bits (offset, one
/// l-bit) and bit pairs (slope, one j-bit and one l-bit). Each
/// `e^{-iθL}` is exact as one phase plus one `RZ` per system qubit because
/// the Pauli expansion of an AP diagonal contains only `I` and single `Z`s.
pub fn build_select(config: &QltConfig) -> Result<Circuit> {
    if !config.ap.lh_equal() {
        return Err(QltError::Unsupported(
            "product-form SELECT needs equal real and imaginary progressions (L = H)".into(),
        ));
    }
    let regs = config.registers();
    let pauli = pauli_decompose_ap(config.ap.first_real, config.ap.diff_real, regs.n_sys)?;
    let h_t = config.grid.h_t();
    let h_k = config.grid.h_k();
    let offset_angle = |b: usize| h_t * (1.0 - config.grid.k_max) * pow2(b);
    let slope_angle = |a: usize, b: usize| h_t * h_k * pow2(a + b);

    let mut circuit = Circuit::new(regs.total());
    let mut emit = ExponentialEmitter {
        circuit: &mut circuit,
        pauli: &pauli,
        regs,
    };

    // With an empty j-register there is no bit pair to attach the offset to.
    let variant = if regs.d == 0 {
        SelectVariant::Reduced
    } else {
        config.variant
    };

    for b in 0..regs.d_prime {
        let l_bit = Control::on(regs.l_qubit(b));
        match variant {
            SelectVariant::Reduced => {
                emit.phase(offset_angle(b), &[l_bit])?;
                emit.rotations(offset_angle(b), &[l_bit])?;
                for a in 0..regs.d {
                    let pair = [Control::on(regs.j_qubit(a)), l_bit];
                    emit.phase(slope_angle(a, b), &pair)?;
                    emit.rotations(slope_angle(a, b), &pair)?;
                }
            }
            SelectVariant::Full => {
                // The offset for l-bit b is shared equally by the d pairs (a, b).
                // Pair (a, b) applies the share on j_a = 0 (P1, U1) and share
                // plus slope on j_a = 1 (P2 merged phase, U2, U1).
                let share = offset_angle(b) / regs.d as f64;
                for a in 0..regs.d {
                    let open = [Control::off(regs.j_qubit(a)), l_bit];
                    emit.phase(share, &open)?;
                    emit.rotations(share, &open)?;
                    let closed = [Control::on(regs.j_qubit(a)), l_bit];
                    emit.phase(slope_angle(a, b) + share, &closed)?;
                    emit.rotations(slope_angle(a, b), &closed)?;
                    emit.rotations(share, &closed)?;
                }
            }
        }
    }
    Ok(circuit)
}

fn pow2(e: usize) -> f64 {
    2f64.powi(e as i32)
}

/// Writes controlled pieces of `e^{-iθL} = e^{-iθα_I} · Π_q RZ_q(2θ α_Z[q])`.
struct ExponentialEmitter<'a> {
    circuit: &'a mut Circuit,
    pauli: &'a PauliDiagonalDecomposition,
    regs: Registers,
}

impl ExponentialEmitter<'_> {
    fn phase(&mut self, theta: f64, controls: &[Control]) -> Result<()> {
        self.circuit
            .push(Gate::controlled_phase(-theta * self.pauli.alpha_i, controls))
    }

    fn rotations(&mut self, theta: f64, controls: &[Control]) -> Result<()> {
        for (q, alpha) in self.pauli.alpha_z.iter().enumerate() {
            self.circuit.push(
                Gate::rz(self.regs.system_qubit(q), 2.0 * theta * alpha).with_controls(controls),
            )?;
        }
        Ok(())
    }
}
