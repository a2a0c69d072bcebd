//! Quantum Laplace transform (QLT) at desk scale.
//!
//! The transform of a sampled signal `g(t)` at Laplace nodes
//! `s_x = a_x + i b_x` is computed by a linear combination of unitaries:
//! PREP loads `√c_j` and `√ĉ_l` into two ancilla registers, SELECT applies
//! `e^{-i t_l (k_j L + H)}` to a uniform superposition of system basis states,
//! and UNPREP (the transpose of PREP) folds the sum back onto the ancilla
//! zero state. The post-selected system amplitudes, rescaled, are the discrete
//! Lap-LCHS approximations of the Laplace transform.
//!
//! - [`laplace`]: kernel, grids, quadrature weights, closed-form and discrete oracles.
//! - [`statevector`]: the simulator.
//! - [`qlt`]: circuit construction, simulation and gate-count audit.
//! - [`cli`]: configuration files and the `qlt` command-line experiments.

pub mod bits;
pub mod cli;
mod error;
pub mod laplace;
pub mod qlt;
pub mod statevector;

pub use error::{QltError, Result};
