use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::bits::exact_log2;
use crate::error::{domain, shape, Result};

/// Largest control set a gate may carry.
pub const MAX_CONTROLS: usize = 2;

const UNIT_NORM_TOLERANCE: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A control qubit and the basis value it must hold for the gate to act.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Control {
    pub qubit: usize,
    pub on_one: bool,
}

impl Control {
    /// Ordinary control: acts when the qubit is `|1⟩`.
    pub const fn on(qubit: usize) -> Self {
        Self {
            qubit,
            on_one: true,
        }
    }

    /// Open control: acts when the qubit is `|0⟩`.
    pub const fn off(qubit: usize) -> Self {
        Self {
            qubit,
            on_one: false,
        }
    }
}

/// Deterministic unitary completion of a target column.
///
/// `U = e^{iφ}(I - 2uu†/u†u)` with `φ = arg(v_0)` and `u = e_0 - e^{-iφ}v`,
/// so `U|0⟩ = v`. Applying it is matrix-free, and the transpose is
/// `e^{iφ}(I - 2ūuᵀ/u†u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeLoader {
    amplitudes: Vec<Complex64>,
    phase: Complex64,
    reflector: Option<(Vec<Complex64>, f64)>,
}

impl AmplitudeLoader {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if exact_log2(amplitudes.len()).is_none() {
            return Err(shape(format!(
                "amplitude block length {} is not a power of two",
                amplitudes.len()
            )));
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        let deviation = (norm_sq.sqrt() - 1.0).abs();
        if deviation.is_nan() || deviation > UNIT_NORM_TOLERANCE {
            return Err(domain(format!(
                "amplitudes must have unit norm, got {}",
                norm_sq.sqrt()
            )));
        }
        let phi = if amplitudes[0].norm() > 0.0 {
            amplitudes[0].arg()
        } else {
            0.0
        };
        let phase = Complex64::from_polar(1.0, phi);
        let mut u: Vec<Complex64> = amplitudes.iter().map(|a| -a * phase.conj()).collect();
        u[0] += ONE;
        let u_norm_sq: f64 = u.iter().map(|z| z.norm_sqr()).sum();
        let reflector = (u_norm_sq > 1e-30).then(|| (u, 2.0 / u_norm_sq));
        Ok(Self {
            amplitudes,
            phase,
            reflector,
        })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn n_qubits(&self) -> usize {
        self.amplitudes.len().trailing_zeros() as usize
    }

    /// `block ← U·block`
    pub fn apply(&self, block: &mut [Complex64]) {
        if let Some((u, scale)) = &self.reflector {
            let overlap: Complex64 = u.iter().zip(block.iter()).map(|(ui, x)| ui.conj() * x).sum();
            let coef = overlap * *scale;
            for (x, ui) in block.iter_mut().zip(u) {
                *x -= ui * coef;
            }
        }
        for x in block.iter_mut() {
            *x *= self.phase;
        }
    }

    /// `block ← Uᵀ·block`
    pub fn apply_transpose(&self, block: &mut [Complex64]) {
        if let Some((u, scale)) = &self.reflector {
            let overlap: Complex64 = u.iter().zip(block.iter()).map(|(ui, x)| ui * x).sum();
            let coef = overlap * *scale;
            for (x, ui) in block.iter_mut().zip(u) {
                *x -= ui.conj() * coef;
            }
        }
        for x in block.iter_mut() {
            *x *= self.phase;
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GateKind {
    PauliX,
    Hadamard,
    RY(f64),
    RX(f64),
    RZ(f64),
    /// `diag(1, e^{iφ})`
    PhaseShift(f64),
    /// `e^{iφ}` on every basis state selected by the controls.
    GlobalPhase(f64),
    AmplitudeLoad(Arc<AmplitudeLoader>),
    AmplitudeLoadTranspose(Arc<AmplitudeLoader>),
}

/// Parameter-free gate label used for tallies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateName {
    PauliX,
    Hadamard,
    RY,
    RX,
    RZ,
    PhaseShift,
    GlobalPhase,
    AmplitudeLoad,
    AmplitudeLoadTranspose,
}

impl fmt::Display for GateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::PauliX => "x",
            Self::Hadamard => "h",
            Self::RY => "ry",
            Self::RX => "rx",
            Self::RZ => "rz",
            Self::PhaseShift => "p",
            Self::GlobalPhase => "gphase",
            Self::AmplitudeLoad => "load",
            Self::AmplitudeLoadTranspose => "load_t",
        };
        f.write_str(name)
    }
}

impl GateKind {
    pub fn name(&self) -> GateName {
        match self {
            Self::PauliX => GateName::PauliX,
            Self::Hadamard => GateName::Hadamard,
            Self::RY(_) => GateName::RY,
            Self::RX(_) => GateName::RX,
            Self::RZ(_) => GateName::RZ,
            Self::PhaseShift(_) => GateName::PhaseShift,
            Self::GlobalPhase(_) => GateName::GlobalPhase,
            Self::AmplitudeLoad(_) => GateName::AmplitudeLoad,
            Self::AmplitudeLoadTranspose(_) => GateName::AmplitudeLoadTranspose,
        }
    }

    /// Number of target qubits the kind acts on.
    fn arity(&self) -> usize {
        match self {
            Self::GlobalPhase(_) => 0,
            Self::AmplitudeLoad(l) | Self::AmplitudeLoadTranspose(l) => l.n_qubits(),
            _ => 1,
        }
    }

    /// 2×2 matrix (row-major) of the single-target kinds.
    pub fn single_qubit_matrix(&self) -> Option<[[Complex64; 2]; 2]> {
        let m = match *self {
            Self::PauliX => [[ZERO, ONE], [ONE, ZERO]],
            Self::Hadamard => {
                let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
                [[h, h], [h, -h]]
            }
            Self::RY(theta) => {
                let (s, c) = (theta / 2.0).sin_cos();
                [[c.into(), (-s).into()], [s.into(), c.into()]]
            }
            Self::RX(theta) => {
                let (s, c) = (theta / 2.0).sin_cos();
                let mis = Complex64::new(0.0, -s);
                [[c.into(), mis], [mis, c.into()]]
            }
            Self::RZ(theta) => [
                [Complex64::from_polar(1.0, -theta / 2.0), ZERO],
                [ZERO, Complex64::from_polar(1.0, theta / 2.0)],
            ],
            Self::PhaseShift(phi) => [[ONE, ZERO], [ZERO, Complex64::from_polar(1.0, phi)]],
            _ => return None,
        };
        Some(m)
    }

    /// Kind whose matrix is the transpose of this one's.
    pub fn transpose(&self) -> Self {
        match self {
            Self::RY(theta) => Self::RY(-theta),
            Self::AmplitudeLoad(l) => Self::AmplitudeLoadTranspose(Arc::clone(l)),
            Self::AmplitudeLoadTranspose(l) => Self::AmplitudeLoad(Arc::clone(l)),
            // X, H and RX are symmetric; RZ, P and global phases are diagonal.
            other => other.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    pub controls: Vec<Control>,
}

impl Gate {
    fn single(kind: GateKind, target: usize) -> Self {
        Self {
            kind,
            targets: vec![target],
            controls: Vec::new(),
        }
    }

    pub fn x(target: usize) -> Self {
        Self::single(GateKind::PauliX, target)
    }

    pub fn h(target: usize) -> Self {
        Self::single(GateKind::Hadamard, target)
    }

    pub fn ry(target: usize, theta: f64) -> Self {
        Self::single(GateKind::RY(theta), target)
    }

    pub fn rx(target: usize, theta: f64) -> Self {
        Self::single(GateKind::RX(theta), target)
    }

    pub fn rz(target: usize, theta: f64) -> Self {
        Self::single(GateKind::RZ(theta), target)
    }

    pub fn phase(target: usize, phi: f64) -> Self {
        Self::single(GateKind::PhaseShift(phi), target)
    }

    pub fn global_phase(phi: f64) -> Self {
        Self {
            kind: GateKind::GlobalPhase(phi),
            targets: Vec::new(),
            controls: Vec::new(),
        }
    }

    /// Load `loader`'s amplitudes onto `targets` (targets[i] is bit i of the block index).
    pub fn amplitude_load(targets: Vec<usize>, loader: Arc<AmplitudeLoader>) -> Self {
        Self {
            kind: GateKind::AmplitudeLoad(loader),
            targets,
            controls: Vec::new(),
        }
    }

    /// A phase `e^{iφ}` on the subspace selected by `controls`.
    ///
    /// With at least one ordinary control this is emitted as a `PhaseShift`
    /// targeting the highest such control, the rest staying as controls.
    /// Otherwise it remains a (possibly open-controlled) `GlobalPhase`.
    pub fn controlled_phase(phi: f64, controls: &[Control]) -> Self {
        let pivot = controls
            .iter()
            .filter(|c| c.on_one)
            .max_by_key(|c| c.qubit)
            .copied();
        match pivot {
            Some(p) => Self {
                kind: GateKind::PhaseShift(phi),
                targets: vec![p.qubit],
                controls: controls.iter().copied().filter(|c| *c != p).collect(),
            },
            None => Self {
                kind: GateKind::GlobalPhase(phi),
                targets: Vec::new(),
                controls: controls.to_vec(),
            },
        }
    }

    pub fn with_controls(mut self, controls: &[Control]) -> Self {
        self.controls.extend_from_slice(controls);
        self
    }

    pub fn transpose(&self) -> Self {
        Self {
            kind: self.kind.transpose(),
            targets: self.targets.clone(),
            controls: self.controls.clone(),
        }
    }

    /// Same gate relabelled through `map` (old qubit index → new).
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> Self {
        Self {
            kind: self.kind.clone(),
            targets: self.targets.iter().map(|&q| map(q)).collect(),
            controls: self
                .controls
                .iter()
                .map(|c| Control {
                    qubit: map(c.qubit),
                    on_one: c.on_one,
                })
                .collect(),
        }
    }

    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        if self.controls.len() > MAX_CONTROLS {
            return Err(shape(format!(
                "gate {} has {} controls, at most {MAX_CONTROLS} allowed",
                self.kind.name(),
                self.controls.len()
            )));
        }
        if self.targets.len() != self.kind.arity() {
            return Err(shape(format!(
                "gate {} expects {} targets, got {}",
                self.kind.name(),
                self.kind.arity(),
                self.targets.len()
            )));
        }
        let mut seen = vec![false; n_qubits];
        let all = self
            .targets
            .iter()
            .copied()
            .chain(self.controls.iter().map(|c| c.qubit));
        for q in all {
            if q >= n_qubits {
                return Err(shape(format!(
                    "qubit {q} out of range for a {n_qubits}-qubit register"
                )));
            }
            if std::mem::replace(&mut seen[q], true) {
                return Err(shape(format!("qubit {q} used twice in one gate")));
            }
        }
        Ok(())
    }
}
