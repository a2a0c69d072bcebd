//! `qlt` configuration files.
//!
//! Flat key/value sections `[ap]`, `[grid]`, `[signal]` and `[run]`:
//!
//! ```toml
//! [ap]
//! first_real = 1.0
//! diff_real = 1.0
//! first_imag = 1.0
//! diff_imag = 1.0
//! n_sys = 1
//!
//! [grid]
//! k_max = 8.0
//! m_k = 2
//! t_max = 3.0
//! m_t = 2
//! beta = 0.8
//!
//! [signal]
//! kind = "exp_decay"
//! rate = 0.9
//!
//! [run]
//! variant = "full"
//! format = "csv"
//! seed = 0
//! ```
//!
//! Every key has a default, so an empty file is a valid configuration.

use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::laplace::{ApSpec, LaplaceGrid, SignalFunction, DEFAULT_BETA, DEFAULT_K_MAX, DEFAULT_T_MAX};
use crate::qlt::{QltConfig, SelectVariant};

use super::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(CliError::Config(format!("unknown output format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ApSection {
    pub first_real: f64,
    pub diff_real: f64,
    pub first_imag: f64,
    pub diff_imag: f64,
    pub n_sys: usize,
}

impl Default for ApSection {
    fn default() -> Self {
        Self {
            first_real: 1.0,
            diff_real: 1.0,
            first_imag: 1.0,
            diff_imag: 1.0,
            n_sys: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridSection {
    pub k_max: f64,
    pub m_k: usize,
    pub t_max: f64,
    pub m_t: usize,
    pub beta: f64,
}

impl Default for GridSection {
    fn default() -> Self {
        Self {
            k_max: DEFAULT_K_MAX,
            m_k: 2,
            t_max: DEFAULT_T_MAX,
            m_t: 2,
            beta: DEFAULT_BETA,
        }
    }
}

/// Signal as written in a config file. `random_tabulated` draws `M_t`
/// samples uniformly from `[low, high)` using the run seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SignalSection {
    ExpDecay { rate: f64 },
    ExpDecaySine { rate: f64, frequency: f64 },
    Tabulated { samples: Vec<f64> },
    RandomTabulated { low: f64, high: f64 },
}

impl Default for SignalSection {
    fn default() -> Self {
        Self::ExpDecay { rate: 0.9 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunSection {
    pub variant: SelectVariant,
    pub format: OutputFormat,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    /// Doubling schedule of `M_k = M_t` values for `converge`.
    pub schedule: Vec<usize>,
    /// Largest `m` for `gatecount`.
    pub m_max: usize,
}

impl Default for RunSection {
    fn default() -> Self {
        Self {
            variant: SelectVariant::Full,
            format: OutputFormat::Csv,
            seed: 0,
            out: None,
            schedule: doubling_schedule(4, 256),
            m_max: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub ap: ApSection,
    pub grid: GridSection,
    pub signal: SignalSection,
    pub run: RunSection,
}

/// `[from, 2·from, …, to]`.
pub fn doubling_schedule(from: usize, to: usize) -> Vec<usize> {
    std::iter::successors(Some(from), |m| m.checked_mul(2))
        .take_while(|m| *m <= to)
        .collect()
}

/// Parse `--schedule FROM:TO`.
pub fn parse_schedule(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Config(format!("schedule `{text}` must look like 4:256"));
    let (from, to) = text.split_once(':').ok_or_else(bad)?;
    let from: usize = from.trim().parse().map_err(|_| bad())?;
    let to: usize = to.trim().parse().map_err(|_| bad())?;
    if !from.is_power_of_two() || !to.is_power_of_two() || from > to {
        return Err(bad());
    }
    Ok(doubling_schedule(from, to))
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn emit(&self) -> Result<String, CliError> {
        toml::to_string(self).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn ap_spec(&self) -> Result<ApSpec, CliError> {
        let a = &self.ap;
        Ok(ApSpec::new(a.first_real, a.diff_real, a.first_imag, a.diff_imag, a.n_sys)?)
    }

    /// Grid after the CLI's stricter checks: no zero extents and at least
    /// one qubit in each ancilla register.
    pub fn grid(&self) -> Result<LaplaceGrid, CliError> {
        let g = &self.grid;
        let grid = LaplaceGrid::new(g.k_max, g.m_k, g.t_max, g.m_t, g.beta)?;
        if grid.m_k < 2 || grid.m_t < 2 {
            return Err(CliError::Config(format!(
                "M_k and M_t must be at least 2 (got {} and {})",
                grid.m_k, grid.m_t
            )));
        }
        Ok(grid)
    }

    pub fn signal(&self, m_t: usize) -> SignalFunction {
        match &self.signal {
            SignalSection::ExpDecay { rate } => SignalFunction::ExpDecay { rate: *rate },
            SignalSection::ExpDecaySine { rate, frequency } => SignalFunction::ExpDecaySine {
                rate: *rate,
                frequency: *frequency,
            },
            SignalSection::Tabulated { samples } => SignalFunction::Tabulated {
                samples: samples.clone(),
            },
            SignalSection::RandomTabulated { low, high } => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.run.seed);
                let samples = (0..m_t).map(|_| low + (high - low) * rng.gen::<f64>()).collect();
                SignalFunction::Tabulated { samples }
            }
        }
    }

    pub fn qlt_config(&self) -> Result<QltConfig, CliError> {
        let grid = self.grid()?;
        Ok(QltConfig::new(
            self.ap_spec()?,
            grid,
            self.signal(grid.m_t),
            self.run.variant,
        ))
    }
}
