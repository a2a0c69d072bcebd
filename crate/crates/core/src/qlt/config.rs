use std::fmt;
use std::str::FromStr;

use crate::error::{QltError, Result};
use crate::laplace::{ApSpec, LaplaceGrid, SignalFunction};

/// Which product form of SELECT to synthesise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SelectVariant {
    /// One block per `(a, b)` bit pair, `2 + 3·n_sys` gates each.
    #[default]
    Full,
    /// Offset applied once per l-bit, slope once per bit pair.
    Reduced,
}

impl fmt::Display for SelectVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Full => "full",
            Self::Reduced => "reduced",
        })
    }
}

impl FromStr for SelectVariant {
    type Err = QltError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Self::Full),
            "reduced" => Ok(Self::Reduced),
            other => Err(QltError::Domain(format!("unknown SELECT variant `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QltConfig {
    pub ap: ApSpec,
    pub grid: LaplaceGrid,
    pub signal: SignalFunction,
    pub variant: SelectVariant,
}

impl QltConfig {
    pub fn new(ap: ApSpec, grid: LaplaceGrid, signal: SignalFunction, variant: SelectVariant) -> Self {
        Self {
            ap,
            grid,
            signal,
            variant,
        }
    }

    pub fn registers(&self) -> Registers {
        Registers {
            n_sys: self.ap.n_sys,
            d: self.grid.k_qubits(),
            d_prime: self.grid.t_qubits(),
        }
    }
}

/// Register layout: system qubits first, then the j-register, then the l-register.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Registers {
    pub n_sys: usize,
    pub d: usize,
    pub d_prime: usize,
}

impl Registers {
    pub fn system_qubit(&self, q: usize) -> usize {
        q
    }

    pub fn j_offset(&self) -> usize {
        self.n_sys
    }

    pub fn l_offset(&self) -> usize {
        self.n_sys + self.d
    }

    pub fn j_qubit(&self, a: usize) -> usize {
        self.j_offset() + a
    }

    pub fn l_qubit(&self, b: usize) -> usize {
        self.l_offset() + b
    }

    pub fn total(&self) -> usize {
        self.n_sys + self.d + self.d_prime
    }
}
