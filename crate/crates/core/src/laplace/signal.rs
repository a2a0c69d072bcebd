use num_complex::Complex64;

use crate::error::{domain, shape, QltError, Result};

use super::grid::LaplaceGrid;

/// Time-domain input `g(t)` to be transformed.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SignalFunction {
    /// `e^{-a t}`
    ExpDecay { rate: f64 },
    /// `e^{-a t} sin(b t)`
    ExpDecaySine { rate: f64, frequency: f64 },
    /// Samples `g(t_l)` on the grid's time nodes, one per node.
    Tabulated { samples: Vec<f64> },
}

impl SignalFunction {
    /// Values `g(t_l)` for every time node of `grid`.
    pub fn sample(&self, grid: &LaplaceGrid) -> Result<Vec<f64>> {
        match self {
            Self::ExpDecay { rate } => Ok(grid.t_nodes().map(|t| (-rate * t).exp()).collect()),
            Self::ExpDecaySine { rate, frequency } => Ok(grid
                .t_nodes()
                .map(|t| (-rate * t).exp() * (frequency * t).sin())
                .collect()),
            Self::Tabulated { samples } => {
                if samples.len() != grid.m_t {
                    return Err(shape(format!(
                        "tabulated signal has {} samples but the grid has M_t = {}",
                        samples.len(),
                        grid.m_t
                    )));
                }
                Ok(samples.clone())
            }
        }
    }

    pub fn has_closed_form(&self) -> bool {
        !matches!(self, Self::Tabulated { .. })
    }
}

/// Closed-form Laplace transform `∫_0^∞ e^{-st} g(t) dt` of the analytic signal kinds.
pub fn analytic_laplace(signal: &SignalFunction, s: Complex64) -> Result<Complex64> {
    let abscissa = |rate: f64| {
        if s.re + rate > 0.0 {
            Ok(())
        } else {
            Err(domain(format!(
                "s = {s} is outside the region of convergence Re(s) > {}",
                -rate
            )))
        }
    };
    match *signal {
        SignalFunction::ExpDecay { rate } => {
            abscissa(rate)?;
            Ok((s + rate).inv())
        }
        SignalFunction::ExpDecaySine { rate, frequency } => {
            abscissa(rate)?;
            let shifted = s + rate;
            Ok(Complex64::new(frequency, 0.0) / (shifted * shifted + frequency * frequency))
        }
        SignalFunction::Tabulated { .. } => Err(QltError::Unsupported(
            "no closed-form Laplace transform for tabulated signals".into(),
        )),
    }
}
