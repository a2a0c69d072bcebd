use num_complex::Complex64;

use crate::error::{shape, Result};

use super::grid::LaplaceGrid;
use super::kernel::kernel_f;
use super::signal::SignalFunction;

/// Quadrature weights `c_j = h_k f(k_j)/(1 - i k_j)` and `ĉ_l = h_t g(t_l)`
/// together with their 1-norms.
#[derive(Debug, Clone, PartialEq)]
pub struct LcuCoefficients {
    pub c: Vec<Complex64>,
    pub c_hat: Vec<Complex64>,
    pub norm_c: f64,
    pub norm_c_hat: f64,
}

impl LcuCoefficients {
    /// A zero 1-norm on either side leaves the preparation state undefined.
    pub fn is_degenerate(&self) -> bool {
        self.norm_c == 0.0 || self.norm_c_hat == 0.0
    }
}

pub fn compute_coefficients(grid: &LaplaceGrid, signal: &SignalFunction) -> Result<LcuCoefficients> {
    let h_k = grid.h_k();
    let h_t = grid.h_t();
    let c = grid
        .k_nodes()
        .map(|k| Ok(h_k * kernel_f(k, grid.beta)? / Complex64::new(1.0, -k)))
        .collect::<Result<Vec<_>>>()?;
    let c_hat: Vec<Complex64> = signal
        .sample(grid)?
        .into_iter()
        .map(|g| Complex64::new(h_t * g, 0.0))
        .collect();
    let norm_c = c.iter().map(|z| z.norm()).sum();
    let norm_c_hat = c_hat.iter().map(|z| z.norm()).sum();
    Ok(LcuCoefficients {
        c,
        c_hat,
        norm_c,
        norm_c_hat,
    })
}

/// Direct double sum `Σ_{j,l} c_j ĉ_l e^{-i t_l (k_j a + b)}` for `s = a + ib`.
///
/// This is the scalar (single eigenvalue) form of the truncated LCHS
/// expansion and the reference every circuit amplitude is checked against.
pub fn lchs_discrete_sum(coeffs: &LcuCoefficients, grid: &LaplaceGrid, s: Complex64) -> Result<Complex64> {
    if coeffs.c.len() != grid.m_k || coeffs.c_hat.len() != grid.m_t {
        return Err(shape(format!(
            "coefficient lengths ({}, {}) do not match grid ({}, {})",
            coeffs.c.len(),
            coeffs.c_hat.len(),
            grid.m_k,
            grid.m_t
        )));
    }
    let mut total = Complex64::new(0.0, 0.0);
    for (j, c_j) in coeffs.c.iter().enumerate() {
        let k = grid.k_node(j);
        for (l, c_hat_l) in coeffs.c_hat.iter().enumerate() {
            let t = grid.t_node(l);
            let phase = Complex64::new(0.0, -t * (k * s.re + s.im)).exp();
            total += c_j * c_hat_l * phase;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> LaplaceGrid {
        LaplaceGrid::new(4.0, 8, 10.0, 4, 0.8).unwrap()
    }

    #[test]
    fn signal_weights_are_left_riemann() {
        let co = compute_coefficients(&grid(), &SignalFunction::ExpDecay { rate: 0.9 }).unwrap();
        assert_eq!(co.c_hat[0], Complex64::new(2.5, 0.0));
        assert!((co.c_hat[1].re - 2.5 * (-2.25f64).exp()).abs() < 1e-15);
        let norm: f64 = co.c_hat.iter().map(|z| z.re.abs()).sum();
        assert!((co.norm_c_hat - norm).abs() < 1e-15);
    }

    #[test]
    fn kernel_weight_at_first_node() {
        let co = compute_coefficients(&grid(), &SignalFunction::ExpDecay { rate: 0.9 }).unwrap();
        // Independent evaluation: h_k = 1, k_0 = -4, 1 - i k_0 = 1 + 4i.
        let beta = 0.8f64;
        let f = (Complex64::new(2f64.powf(beta), 0.0) - Complex64::new(1.0, -4.0).powf(beta)).exp()
            / (2.0 * std::f64::consts::PI);
        let expected = f / Complex64::new(1.0, 4.0);
        assert!((co.c[0] - expected).norm() < 1e-15);
    }

    #[test]
    fn zero_signal_is_degenerate() {
        let co = compute_coefficients(
            &grid(),
            &SignalFunction::Tabulated {
                samples: vec![0.0; 4],
            },
        )
        .unwrap();
        assert!(co.is_degenerate());
        assert_eq!(co.norm_c_hat, 0.0);
        assert!(co.c_hat.iter().all(|z| *z == Complex64::new(0.0, 0.0)));
        let v = lchs_discrete_sum(&co, &grid(), Complex64::new(1.0, 1.0)).unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn single_time_node_ignores_s() {
        let g = LaplaceGrid::new(3.0, 16, 5.0, 1, 0.6).unwrap();
        let co = compute_coefficients(&g, &SignalFunction::ExpDecay { rate: 0.4 }).unwrap();
        let expected = co.c_hat[0] * co.c.iter().sum::<Complex64>();
        for s in [Complex64::new(0.3, -2.0), Complex64::new(7.0, 7.0)] {
            let v = lchs_discrete_sum(&co, &g, s).unwrap();
            assert!((v - expected).norm() <= 1e-14 * expected.norm().max(1.0));
        }
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let co = compute_coefficients(&grid(), &SignalFunction::ExpDecay { rate: 0.9 }).unwrap();
        let other = LaplaceGrid::new(4.0, 16, 10.0, 4, 0.8).unwrap();
        assert!(lchs_discrete_sum(&co, &other, Complex64::new(1.0, 1.0)).is_err());
    }
}
