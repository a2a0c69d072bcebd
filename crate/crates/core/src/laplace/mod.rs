//! Classical side of the transform: the LCHS kernel, quadrature grids and
//! weights, closed-form Laplace transforms, the discrete double sum used as
//! the reference oracle, and Pauli decomposition of arithmetic-progression
//! diagonals.

mod ap;
mod coefficients;
mod grid;
mod kernel;
mod pauli;
mod signal;

pub use ap::ApSpec;
pub use coefficients::{compute_coefficients, lchs_discrete_sum, LcuCoefficients};
pub use grid::{LaplaceGrid, DEFAULT_K_MAX, DEFAULT_T_MAX};
pub use kernel::{kernel_f, DEFAULT_BETA};
pub use pauli::{pauli_decompose_ap, PauliDiagonalDecomposition};
pub use signal::{analytic_laplace, SignalFunction};
