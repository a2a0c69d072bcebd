//! Test-only oracles, independent of the simulator's own gate loops.
#![allow(dead_code)]

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use qlt_core::laplace::LaplaceGrid;
use qlt_core::statevector::{AmplitudeLoader, Circuit, Control, Gate, GateKind};
use rand::Rng;

pub type CMatrix = DMatrix<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// 2×2 matrices written out from the textbook definitions.
pub fn textbook_matrix(kind: &GateKind) -> [[Complex64; 2]; 2] {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    match *kind {
        GateKind::PauliX => [[z, one], [one, z]],
        GateKind::Hadamard => {
            let h = 0.5f64.sqrt();
            [[c(h, 0.0), c(h, 0.0)], [c(h, 0.0), c(-h, 0.0)]]
        }
        GateKind::RY(t) => [
            [c((t / 2.0).cos(), 0.0), c(-(t / 2.0).sin(), 0.0)],
            [c((t / 2.0).sin(), 0.0), c((t / 2.0).cos(), 0.0)],
        ],
        GateKind::RX(t) => [
            [c((t / 2.0).cos(), 0.0), c(0.0, -(t / 2.0).sin())],
            [c(0.0, -(t / 2.0).sin()), c((t / 2.0).cos(), 0.0)],
        ],
        GateKind::RZ(t) => [[(c(0.0, -t / 2.0)).exp(), z], [z, (c(0.0, t / 2.0)).exp()]],
        GateKind::PhaseShift(p) => [[one, z], [z, c(0.0, p).exp()]],
        ref other => panic!("no 2x2 textbook matrix for {other:?}"),
    }
}

/// Dense matrix of the load block: the target vector completed to a unitary
/// by the engine, read off column by column through the public loader API.
fn loader_block(loader: &AmplitudeLoader, transpose: bool) -> CMatrix {
    let dim = loader.amplitudes().len();
    let mut m = CMatrix::zeros(dim, dim);
    for col in 0..dim {
        let mut v = vec![c(0.0, 0.0); dim];
        v[col] = c(1.0, 0.0);
        if transpose {
            loader.apply_transpose(&mut v);
        } else {
            loader.apply(&mut v);
        }
        for (row, x) in v.into_iter().enumerate() {
            m[(row, col)] = x;
        }
    }
    m
}

/// Full-register matrix of one gate, built entry by entry:
/// `⟨i|U|j⟩ = block[i_T][j_T]` when `i` and `j` agree off the targets and
/// the controls are satisfied, `δ_ij` otherwise.
pub fn gate_matrix(gate: &Gate, n: usize) -> CMatrix {
    let dim = 1usize << n;
    let block: CMatrix = match &gate.kind {
        GateKind::GlobalPhase(p) => CMatrix::from_element(1, 1, c(0.0, *p).exp()),
        GateKind::AmplitudeLoad(l) => loader_block(l, false),
        GateKind::AmplitudeLoadTranspose(l) => loader_block(l, true),
        k => {
            let m = textbook_matrix(k);
            CMatrix::from_fn(2, 2, |r, col| m[r][col])
        }
    };
    let target_mask: usize = gate.targets.iter().map(|q| 1 << q).sum();
    let local = |x: usize| -> usize {
        gate.targets
            .iter()
            .enumerate()
            .map(|(k, q)| ((x >> q) & 1) << k)
            .sum()
    };
    let controls_ok = |x: usize| {
        gate.controls
            .iter()
            .all(|ctl: &Control| ((x >> ctl.qubit) & 1 == 1) == ctl.on_one)
    };
    CMatrix::from_fn(dim, dim, |i, j| {
        if i & !target_mask != j & !target_mask {
            return c(0.0, 0.0);
        }
        if controls_ok(j) {
            block[(local(i), local(j))]
        } else if i == j {
            c(1.0, 0.0)
        } else {
            c(0.0, 0.0)
        }
    })
}

/// Product of gate matrices in application order.
pub fn circuit_matrix(circuit: &Circuit) -> CMatrix {
    let dim = 1usize << circuit.n_qubits();
    circuit
        .gates()
        .iter()
        .fold(CMatrix::identity(dim, dim), |acc, g| gate_matrix(g, circuit.n_qubits()) * acc)
}

pub fn random_unit_vector<R: Rng>(rng: &mut R, dim: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..dim)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// Random gate from the full supported set, with 0–2 controls of random polarity.
pub fn random_gate<R: Rng>(rng: &mut R, n: usize) -> Gate {
    let mut qubits: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        qubits.swap(i, rng.gen_range(0..=i));
    }
    let angle = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    let (gate, used) = match rng.gen_range(0..9) {
        0 => (Gate::x(qubits[0]), 1),
        1 => (Gate::h(qubits[0]), 1),
        2 => (Gate::ry(qubits[0], angle), 1),
        3 => (Gate::rx(qubits[0], angle), 1),
        4 => (Gate::rz(qubits[0], angle), 1),
        5 => (Gate::phase(qubits[0], angle), 1),
        6 => (Gate::global_phase(angle), 0),
        _ => {
            let width = rng.gen_range(1..=n.min(2));
            let loader = Arc::new(AmplitudeLoader::new(random_unit_vector(rng, 1 << width)).unwrap());
            let g = Gate::amplitude_load(qubits[..width].to_vec(), loader);
            let g = if rng.gen_bool(0.5) { g.transpose() } else { g };
            (g, width)
        }
    };
    let spare = n - used;
    let n_controls = rng.gen_range(0..=spare.min(2));
    let controls: Vec<Control> = qubits[used..used + n_controls]
        .iter()
        .map(|&q| Control {
            qubit: q,
            on_one: rng.gen_bool(0.7),
        })
        .collect();
    gate.with_controls(&controls)
}

pub fn random_circuit<R: Rng>(rng: &mut R, n: usize, len: usize) -> Circuit {
    Circuit::from_gates(n, (0..len).map(|_| random_gate(rng, n)).collect()).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

/// `P|x⟩ = phase·|x ⊕ flips⟩` for a Pauli string (entry q acts on qubit q).
pub fn pauli_action(p: &[Pauli], x: usize) -> (usize, Complex64) {
    let mut phase = c(1.0, 0.0);
    let mut out = x;
    for (q, op) in p.iter().enumerate() {
        let bit = (x >> q) & 1;
        match op {
            Pauli::I => {}
            Pauli::X => out ^= 1 << q,
            Pauli::Y => {
                out ^= 1 << q;
                phase *= if bit == 0 { c(0.0, 1.0) } else { c(0.0, -1.0) };
            }
            Pauli::Z => {
                if bit == 1 {
                    phase = -phase;
                }
            }
        }
    }
    (out, phase)
}

/// `α_P = 2^{-n} Σ_x (a + d x) ⟨x|P|x⟩` over every one of the 4^n strings.
pub fn brute_force_expansion(first: f64, diff: f64, n: usize) -> Vec<(Vec<Pauli>, Complex64)> {
    let ops = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
    (0..4usize.pow(n as u32))
        .map(|code| {
            let p: Vec<Pauli> = (0..n).map(|q| ops[(code >> (2 * q)) & 3]).collect();
            let mut alpha = c(0.0, 0.0);
            for x in 0..1usize << n {
                let (y, phase) = pauli_action(&p, x);
                if y == x {
                    alpha += phase * (first + diff * x as f64);
                }
            }
            (p, alpha / (1u64 << n) as f64)
        })
        .collect()
}

/// Diagonal generator `Σ_{j,l} |j,l⟩⟨j,l| ⊗ t_l (k_j + 1) L` on the
/// system-fastest layout, with nodes rebuilt from `K`, `T` and the counts.
pub fn select_generator(first: f64, diff: f64, n_sys: usize, grid: &LaplaceGrid) -> CMatrix {
    let (nx, nj, nl) = (1usize << n_sys, grid.m_k, grid.m_t);
    let dim = nx * nj * nl;
    let mut g = CMatrix::zeros(dim, dim);
    for l in 0..nl {
        let t = l as f64 * grid.t_max / nl as f64;
        for j in 0..nj {
            let k = -grid.k_max + j as f64 * 2.0 * grid.k_max / nj as f64;
            for x in 0..nx {
                let idx = x + nx * (j + nj * l);
                g[(idx, idx)] = c(t * (k + 1.0) * (first + diff * x as f64), 0.0);
            }
        }
    }
    g
}

pub fn exp_minus_i(g: &CMatrix) -> CMatrix {
    (g * c(0.0, -1.0)).exp()
}

