use crate::bits::exact_log2;
use crate::error::{domain, Result};

use super::kernel::check_beta;

/// Default k-truncation `K`.
pub const DEFAULT_K_MAX: f64 = 8.0;
/// Default time horizon `T`.
pub const DEFAULT_T_MAX: f64 = 3.0;

/// Truncated, uniformly discretized `(k, t)` quadrature domain.
///
/// Nodes are `k_j = -K + j·h_k` for `j < M_k` and `t_l = l·h_t` for
/// `l < M_t`, with `h_k = 2K/M_k` and `h_t = T/M_t` (left endpoints).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct LaplaceGrid {
    pub k_max: f64,
    pub m_k: usize,
    pub t_max: f64,
    pub m_t: usize,
    pub beta: f64,
}

impl LaplaceGrid {
    pub fn new(k_max: f64, m_k: usize, t_max: f64, m_t: usize, beta: f64) -> Result<Self> {
        let grid = Self {
            k_max,
            m_k,
            t_max,
            m_t,
            beta,
        };
        grid.validate()?;
        Ok(grid)
    }

    /// Like [`LaplaceGrid::new`] but admits `K = 0` or `T = 0`, which collapse
    /// the transform to trivial cases. Only used to probe boundary behaviour;
    /// the CLI never builds these.
    pub fn degenerate(k_max: f64, m_k: usize, t_max: f64, m_t: usize, beta: f64) -> Result<Self> {
        let grid = Self {
            k_max,
            m_k,
            t_max,
            m_t,
            beta,
        };
        grid.validate_counts()?;
        if !(k_max >= 0.0 && t_max >= 0.0 && k_max.is_finite() && t_max.is_finite()) {
            return Err(domain("K and T must be finite and non-negative"));
        }
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_counts()?;
        if !(self.k_max > 0.0 && self.k_max.is_finite()) {
            return Err(domain(format!("K must be positive, got {}", self.k_max)));
        }
        if !(self.t_max > 0.0 && self.t_max.is_finite()) {
            return Err(domain(format!("T must be positive, got {}", self.t_max)));
        }
        Ok(())
    }

    fn validate_counts(&self) -> Result<()> {
        check_beta(self.beta)?;
        if exact_log2(self.m_k).is_none() {
            return Err(domain(format!("M_k must be a power of two, got {}", self.m_k)));
        }
        if exact_log2(self.m_t).is_none() {
            return Err(domain(format!("M_t must be a power of two, got {}", self.m_t)));
        }
        Ok(())
    }

    pub fn h_k(&self) -> f64 {
        2.0 * self.k_max / self.m_k as f64
    }

    pub fn h_t(&self) -> f64 {
        self.t_max / self.m_t as f64
    }

    pub fn k_node(&self, j: usize) -> f64 {
        -self.k_max + j as f64 * self.h_k()
    }

    pub fn t_node(&self, l: usize) -> f64 {
        l as f64 * self.h_t()
    }

    /// Width `d = log2(M_k)` of the j-register.
    pub fn k_qubits(&self) -> usize {
        self.m_k.trailing_zeros() as usize
    }

    /// Width `d' = log2(M_t)` of the l-register.
    pub fn t_qubits(&self) -> usize {
        self.m_t.trailing_zeros() as usize
    }

    pub fn k_nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.m_k).map(|j| self.k_node(j))
    }

    pub fn t_nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.m_t).map(|l| self.t_node(l))
    }
}
